#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace c4ex {

using Vertex = int;

// Simple undirected graph on vertices 0..n-1 stored as n adjacency bitsets.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  std::int64_t edge_count() const { return edges_; }

  // Loops are rejected; adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const {
    return (row_ptr(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  int degree(Vertex v) const;
  int codegree(Vertex u, Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::span<const Word> row(Vertex v) const { return {row_ptr(v), static_cast<std::size_t>(words_)}; }
  int words_per_row() const { return words_; }

  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::vector<int> degrees() const;

  // Subgraph induced by `keep`, relabelled 0..|keep|-1 in the given order.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  const Word* row_ptr(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  Word* row_ptr(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int words_ = 0;
  std::int64_t edges_ = 0;
  std::vector<Word> bits_;
};

struct C4Check {
  bool c4_free = true;
  // Cycle order: witness[0]-witness[1]-witness[2]-witness[3]-witness[0].
  std::optional<std::array<Vertex, 4>> witness;
};

// Codegree test: C4-free iff every vertex pair has at most one common neighbour.
C4Check is_c4_free(const Graph& g);

// Deficiency f(v) = q + 1 - d(v) (signed) and the partition of V by its sign.
struct DeficiencyProfile {
  int q = 0;
  std::vector<std::int64_t> f;
  std::vector<Vertex> S;       // f(v) > 0, i.e. d(v) <= q
  std::vector<Vertex> S_q1;    // d(v) = q + 1
  std::vector<Vertex> S_plus;  // f(v) < 0, i.e. d(v) >= q + 2
  std::int64_t fS = 0;
  std::int64_t fSplus = 0;

  std::int64_t total() const { return fS + fSplus; }
};

DeficiencyProfile deficiency_profile(const Graph& g, int q);

// Number of 2-paths a-m-b (a != b, unordered endpoints) with a, b outside X.
// Counted as the sum of codegrees over endpoint pairs outside X.
std::int64_t count_2paths_outside(const Graph& g, std::span<const Vertex> X);

// Sum of f(v) over edges uv with u in A and v in B. A and B must be disjoint.
std::int64_t weight_between(const Graph& g, const DeficiencyProfile& profile,
                            std::span<const Vertex> A, std::span<const Vertex> B);

// Bitset helpers shared by the lemma checks.
std::vector<Graph::Word> make_vertex_mask(int n, std::span<const Vertex> vertices);
int popcount_and(std::span<const Graph::Word> a, std::span<const Graph::Word> b);
int popcount_andnot(std::span<const Graph::Word> a, std::span<const Graph::Word> mask);

// graph6 (bit-exact per the nauty format description).
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

std::string graph6_encode(const Graph& g);
// Accepts an optional ">>graph6<<" header and one trailing newline.
Graph graph6_decode(std::string_view text);

// Human-readable form: "n <n> e <e>" then one "v: u1 u2 ..." line per vertex.
std::string adjacency_text(const Graph& g);

}  // namespace c4ex
