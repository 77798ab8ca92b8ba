#include "c4ex/lemmas.hpp"

#include <algorithm>
#include <bit>

namespace c4ex {
namespace {

bool in_mask(const std::vector<Graph::Word>& mask, Vertex v) {
  return (mask[v / Graph::kWordBits] >> (v % Graph::kWordBits)) & 1U;
}

int min_degree(const Graph& g) {
  int d = g.order() > 0 ? g.degree(0) : 0;
  for (Vertex v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

VerdictContext context_for(const Graph& g, int q) {
  VerdictContext c;
  c.n = g.order();
  c.q = q;
  return c;
}

LemmaVerdict make_verdict(std::string name, BigRational margin, VerdictContext ctx) {
  LemmaVerdict v;
  v.name = std::move(name);
  v.holds = margin.sign() >= 0;
  v.margin = std::move(margin);
  v.context = std::move(ctx);
  return v;
}

}  // namespace

C4FreeGraph::C4FreeGraph(const Graph& g) : g_(&g) {
  const auto check = is_c4_free(g);
  if (!check.c4_free) throw LemmaHypothesisError("graph contains a 4-cycle", check.witness);
}

LemmaVerdict check_lemma_fN(const C4FreeGraph& cg, int q, Vertex v) {
  const Graph& g = cg.graph();
  std::int64_t f_n = 0;
  for (Vertex u : g.neighbors(v)) f_n += static_cast<std::int64_t>(q) + 1 - g.degree(u);
  const std::int64_t rhs = static_cast<std::int64_t>(q) * g.degree(v) - g.order() + 1;
  auto ctx = context_for(g, q);
  ctx.vertex = v;
  return make_verdict("lemma_fN", BigRational(f_n - rhs), std::move(ctx));
}

LemmaVerdict check_lemma_fN(const Graph& g, int q, Vertex v) { return check_lemma_fN(C4FreeGraph(g), q, v); }

bool punctured_neighbourhoods_disjoint(const Graph& g, Vertex v) {
  std::vector<Graph::Word> seen(static_cast<std::size_t>(g.words_per_row()), 0);
  const auto self = make_vertex_mask(g.order(), std::vector<Vertex>{v});
  for (Vertex u : g.neighbors(v)) {
    const auto row = g.row(u);
    for (std::size_t w = 0; w < seen.size(); ++w) {
      const Graph::Word punctured = row[w] & ~self[w];
      if (seen[w] & punctured) return false;
      seen[w] |= punctured;
    }
  }
  return true;
}

BigRational clamped_binom2(const BigRational& x) {
  return x >= BigRational(1) ? binom2(x) : BigRational(0);
}

TwoPathVerdict check_2path_inequality(const C4FreeGraph& cg, Vertex v, const std::vector<Vertex>& I) {
  const Graph& g = cg.graph();
  if (I.empty()) throw LemmaHypothesisError("two-path inequality needs |I| >= 1");
  std::vector<Vertex> sorted = I;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw LemmaHypothesisError("I contains a repeated vertex");
  }
  for (Vertex u : sorted) {
    if (u < 0 || u >= g.order() || !g.has_edge(v, u)) {
      throw LemmaHypothesisError("vertex " + std::to_string(u) + " of I is not a neighbour of " + std::to_string(v));
    }
  }

  const std::int64_t n = g.order();
  const std::int64_t m = g.edge_count();
  const std::int64_t dv = g.degree(v);
  TwoPathDetails d;
  d.k = static_cast<std::int64_t>(sorted.size());

  std::vector<Graph::Word> x_mask(static_cast<std::size_t>(g.words_per_row()), 0);
  for (Vertex u : sorted) {
    d.sum_degrees += g.degree(u);
    const auto row = g.row(u);
    for (std::size_t w = 0; w < x_mask.size(); ++w) x_mask[w] |= row[w];
  }
  std::vector<Vertex> X;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (in_mask(x_mask, u)) X.push_back(u);
  }
  d.x_size = static_cast<std::int64_t>(X.size());

  d.m_by_pairs = count_2paths_outside(g, X);
  const auto i_mask = make_vertex_mask(g.order(), sorted);
  for (Vertex j = 0; j < g.order(); ++j) {
    if (in_mask(i_mask, j)) continue;
    const std::int64_t outside = popcount_andnot(g.row(j), x_mask);
    d.m_by_middle += outside * (outside - 1) / 2;
  }

  d.L = 2 * m - d.sum_degrees + (d.k - 1) * dv - n * d.k + d.k;
  d.lhs = binom2(BigRational(n - d.sum_degrees + d.k - 1));
  const BigRational mean = BigRational(d.L) / (n - d.k);
  d.jensen_bound = BigRational(n - d.k) * clamped_binom2(mean);
  d.literal_margin = d.lhs - BigRational(n - d.k) * binom2(mean);

  auto ctx = context_for(g, 0);
  ctx.vertex = v;
  ctx.set = sorted;
  if (!d.literal_form_valid()) ctx.note = "L < 0: literal x(x-1)/2 form not implied";
  TwoPathVerdict out;
  out.verdict = make_verdict("lemma_2path", d.lhs - d.jensen_bound, std::move(ctx));
  out.details = std::move(d);
  return out;
}

TwoPathVerdict check_2path_inequality(const Graph& g, Vertex v, const std::vector<Vertex>& I) {
  return check_2path_inequality(C4FreeGraph(g), v, I);
}

Regime regime_for(std::int64_t n, int q) {
  const std::int64_t qq = q;
  return n <= qq * qq + qq + 2 ? Regime::kDeficient : Regime::kSurplus;
}

std::int64_t regime_r(std::int64_t n, int q, Regime regime) {
  const std::int64_t qq = q;
  return regime == Regime::kDeficient ? qq * qq + qq + 2 - n : n - (qq * qq + qq + 1);
}

HypothesisCheck regime_hypotheses(const Graph& g, int q, std::int64_t r, Regime regime) {
  const std::int64_t n = g.order();
  const std::int64_t qq = q;
  const std::int64_t e2 = 2 * g.edge_count();
  auto fail = [](std::string why) { return HypothesisCheck{false, std::move(why)}; };

  if (regime == Regime::kDeficient) {
    if (n != qq * qq + qq + 2 - r) return fail("n != q^2 + q + 2 - r");
    if (r < 0 || 1000 * r > 33 * qq) return fail("r outside [0, 0.033q]");
    if (e2 < qq * (qq + 1) * (qq + 1) - 2 * r * qq) return fail("e < q(q+1)^2/2 - rq");
    if (5 * static_cast<std::int64_t>(min_degree(g)) < qq) return fail("minimum degree < 0.2q");
  } else {
    if (n != qq * qq + qq + 1 + r) return fail("n != q^2 + q + 1 + r");
    if (r < 1 || 10 * r > 3 * qq) return fail("r outside [1, 0.3q]");
    if (e2 <= n * (qq + 1)) return fail("e <= n(q+1)/2");
  }
  if (!is_c4_free(g).c4_free) return fail("graph contains a 4-cycle");
  return HypothesisCheck{true, {}};
}

SplusVerdict check_splus_bound(const Graph& g, int q, std::int64_t r) {
  const auto hyp = regime_hypotheses(g, q, r, Regime::kDeficient);
  const auto prof = deficiency_profile(g, q);
  SplusVerdict out;
  out.splus_size = static_cast<std::int64_t>(prof.S_plus.size());
  out.neg_f_splus = -prof.fSplus;
  auto ctx = context_for(g, q);
  ctx.r = r;
  ctx.note = hyp.reason;
  out.verdict = make_verdict("lemma_splus", BigRational(4 * r * r + 16 * r + 18 - out.neg_f_splus), std::move(ctx));
  out.verdict.hypotheses_met = hyp.met;
  out.verdict.vacuous = prof.S_plus.empty();
  return out;
}

NeighbourhoodReport check_neighborhood_splus(const Graph& g, int q, Regime regime) {
  const std::int64_t r = regime_r(g.order(), q, regime);
  NeighbourhoodReport rep;
  rep.hypotheses = regime_hypotheses(g, q, r, regime);
  const auto prof = deficiency_profile(g, q);
  const auto splus = make_vertex_mask(g.order(), prof.S_plus);
  const std::int64_t qq = q;

  for (Vertex v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    std::int64_t cap = 0;
    std::string name;
    if (regime == Regime::kSurplus) {
      if (10 * d < 7 * qq) continue;  // only d(v) >= 0.7q
      cap = (11 * qq + 19) / 20 - 1;  // largest integer < 0.55q
      name = "neighbourhood_splus_0.55q";
    } else {
      cap = 3 * r + 8;
      name = "neighbourhood_splus_3r+8";
    }
    auto ctx = context_for(g, q);
    ctx.r = r;
    ctx.vertex = v;
    auto verdict = make_verdict(std::move(name), BigRational(cap - popcount_and(g.row(v), splus)), std::move(ctx));
    verdict.hypotheses_met = rep.hypotheses.met;
    verdict.vacuous = prof.S_plus.empty();
    rep.per_vertex.push_back(std::move(verdict));
  }
  return rep;
}

WeightChainVerdict check_weight_chain(const Graph& g, int q, Regime regime) {
  const std::int64_t r = regime_r(g.order(), q, regime);
  const auto hyp = regime_hypotheses(g, q, r, regime);
  const auto prof = deficiency_profile(g, q);
  const std::int64_t qq = q;

  WeightChainVerdict out;
  out.weight = weight_between(g, prof, prof.S_plus, prof.S);
  const BigRational W(out.weight);
  const BigRational neg_splus(-prof.fSplus);

  BigRational lower_coeff;
  BigRational upper_coeff;
  if (regime == Regime::kDeficient) {
    lower_coeff = BigRational(qq - 1);
    upper_coeff = BigRational(3 * r + 8);
  } else {
    lower_coeff = BigRational(qq - r);
    upper_coeff = BigRational(7, 10) * qq - 1;
  }

  auto ctx = context_for(g, q);
  ctx.r = r;
  ctx.note = hyp.reason;
  out.lower = make_verdict("weight_chain_lower", W - lower_coeff * neg_splus, ctx);
  out.upper = make_verdict("weight_chain_upper", upper_coeff * prof.fS - W, ctx);
  for (auto* v : {&out.lower, &out.upper}) {
    v->hypotheses_met = hyp.met;
    v->vacuous = prof.S_plus.empty();
  }
  return out;
}

}  // namespace c4ex
