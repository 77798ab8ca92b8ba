#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "c4ex/graph.hpp"
#include "c4ex/rational.hpp"

namespace c4ex {

// Raised when a lemma whose hypothesis is C4-freeness (or a structural
// precondition such as I ⊆ N(v)) is applied to a graph violating it.
class LemmaHypothesisError : public std::invalid_argument {
 public:
  explicit LemmaHypothesisError(const std::string& what,
                                std::optional<std::array<Vertex, 4>> witness = std::nullopt)
      : std::invalid_argument(what), witness_(witness) {}
  const std::optional<std::array<Vertex, 4>>& witness() const { return witness_; }

 private:
  std::optional<std::array<Vertex, 4>> witness_;
};

// A graph already known to be C4-free. Construction runs the check once so
// that per-vertex lemma checks do not repeat it. Holds a reference: the
// underlying Graph must outlive the view.
class C4FreeGraph {
 public:
  explicit C4FreeGraph(const Graph& g);
  const Graph& graph() const { return *g_; }

 private:
  const Graph* g_;
};

struct VerdictContext {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::optional<std::int64_t> r;
  std::optional<Vertex> vertex;
  std::vector<Vertex> set;
  std::string note;
};

// holds <=> margin >= 0, margin being LHS - RHS of the checked inequality in
// its "LHS >= RHS" orientation. hypotheses_met = false marks an informational
// verdict whose inequality is not claimed for this instance.
struct LemmaVerdict {
  std::string name;
  bool holds = false;
  bool hypotheses_met = true;
  bool vacuous = false;
  BigRational margin;
  VerdictContext context;
};

// f(N(v)) >= q d(v) - n + 1.
LemmaVerdict check_lemma_fN(const C4FreeGraph& g, int q, Vertex v);
LemmaVerdict check_lemma_fN(const Graph& g, int q, Vertex v);

// The sets N(u) \ {v}, u in N(v), are pairwise disjoint.
bool punctured_neighbourhoods_disjoint(const Graph& g, Vertex v);

// Convex extension of C(x, 2) that agrees with the combinatorial count on
// all integers: x(x-1)/2 for x >= 1, zero below.
BigRational clamped_binom2(const BigRational& x);

struct TwoPathDetails {
  std::int64_t k = 0;
  std::int64_t sum_degrees = 0;  // sum of d_i over I
  std::int64_t x_size = 0;       // |X|, X = union of N(v_i)
  std::int64_t L = 0;            // 2m - sum d_i + (k-1) d(v) - nk + k
  std::int64_t m_by_pairs = 0;   // M via count_2paths_outside
  std::int64_t m_by_middle = 0;  // M via sum over middle vertices j not in I
  BigRational lhs;               // C(n - sum d_i + k - 1, 2)
  BigRational jensen_bound;      // (n-k) clamped_binom2(L/(n-k))
  BigRational literal_margin;    // lhs - (n-k) binom2(L/(n-k))

  bool x_size_identity() const { return x_size == sum_degrees - k + 1; }
  bool m_routes_agree() const { return m_by_pairs == m_by_middle; }
  bool m_upper_ok() const { return BigRational(m_by_pairs) <= lhs; }
  bool jensen_ok() const { return BigRational(m_by_middle) >= jensen_bound; }
  bool literal_form_valid() const { return L >= 0; }
};

struct TwoPathVerdict {
  LemmaVerdict verdict;  // margin = lhs - jensen_bound
  TwoPathDetails details;

  bool all_intermediates_hold() const {
    return details.x_size_identity() && details.m_routes_agree() && details.m_upper_ok() && details.jensen_ok();
  }
};

// Two-path counting inequality for v and I ⊆ N(v), |I| >= 1. Throws
// LemmaHypothesisError when I is empty or not inside N(v) (and, for the
// Graph overload, when g contains a C4).
TwoPathVerdict check_2path_inequality(const C4FreeGraph& g, Vertex v, const std::vector<Vertex>& I);
TwoPathVerdict check_2path_inequality(const Graph& g, Vertex v, const std::vector<Vertex>& I);

// Which proof the surplus-set checks follow.
//   kDeficient: n = q^2 + q + 2 - r, 0 <= r <= 0.033q, e >= 1/2 q (q+1)^2 - rq, min degree >= 0.2q.
//   kSurplus:   n = q^2 + q + 1 + r, 1 <= r <= 0.3q, e > 1/2 n (q+1).
enum class Regime { kDeficient, kSurplus };

// kDeficient when n <= q^2 + q + 2, kSurplus otherwise.
Regime regime_for(std::int64_t n, int q);
std::int64_t regime_r(std::int64_t n, int q, Regime regime);

// Hypotheses of the chosen regime (C4-freeness included) with a
// human-readable explanation of the first failure.
struct HypothesisCheck {
  bool met = false;
  std::string reason;
};
HypothesisCheck regime_hypotheses(const Graph& g, int q, std::int64_t r, Regime regime);

// |S+| <= -f(S+) <= 4r^2 + 16r + 18; margin is the second inequality, with
// (q, r) taken verbatim (n must equal q^2 + q + 2 - r).
struct SplusVerdict {
  LemmaVerdict verdict;
  std::int64_t splus_size = 0;
  std::int64_t neg_f_splus = 0;
  bool size_bound_ok() const { return splus_size <= neg_f_splus; }
};
SplusVerdict check_splus_bound(const Graph& g, int q, std::int64_t r);

// Per-vertex |N(v) ∩ S+| bounds: < 0.55q for d(v) >= 0.7q (kSurplus), or
// <= 3r + 8 for every v (kDeficient).
struct NeighbourhoodReport {
  HypothesisCheck hypotheses;
  std::vector<LemmaVerdict> per_vertex;
};
NeighbourhoodReport check_neighborhood_splus(const Graph& g, int q, Regime regime);

// (q - c)(-f(S+)) <= W <= B f(S) with W = weight_between(S+, S) and
// (c, B) = (1, 3r + 8) for kDeficient, (r, 0.7q - 1) for kSurplus.
struct WeightChainVerdict {
  std::int64_t weight = 0;
  LemmaVerdict lower;
  LemmaVerdict upper;
};
WeightChainVerdict check_weight_chain(const Graph& g, int q, Regime regime);

}  // namespace c4ex
