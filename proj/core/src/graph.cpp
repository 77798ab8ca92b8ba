#include "c4ex/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace c4ex {

Graph::Graph(int n) : n_(n), words_((n + kWordBits - 1) / kWordBits) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
  if (has_edge(u, v)) return;
  row_ptr(u)[v / kWordBits] |= Word{1} << (v % kWordBits);
  row_ptr(v)[u / kWordBits] |= Word{1} << (u % kWordBits);
  ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !has_edge(u, v)) return;
  row_ptr(u)[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  row_ptr(v)[u / kWordBits] &= ~(Word{1} << (u % kWordBits));
  --edges_;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (Word w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::codegree(Vertex u, Vertex v) const { return popcount_and(row(u), row(v)); }

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const Word* r = row_ptr(v);
  for (int w = 0; w < words_; ++w) {
    for (Word bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * kWordBits + std::countr_zero(bits));
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> relabel(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    if (relabel[keep[i]] != -1) throw std::invalid_argument("Graph::induced: repeated vertex");
    relabel[keep[i]] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex v : neighbors(keep[i])) {
      if (relabel[v] > static_cast<int>(i)) out.add_edge(static_cast<int>(i), relabel[v]);
    }
  }
  return out;
}

int popcount_and(std::span<const Graph::Word> a, std::span<const Graph::Word> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

int popcount_andnot(std::span<const Graph::Word> a, std::span<const Graph::Word> mask) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & ~mask[i]);
  return c;
}

std::vector<Graph::Word> make_vertex_mask(int n, std::span<const Vertex> vertices) {
  std::vector<Graph::Word> mask(static_cast<std::size_t>((n + Graph::kWordBits - 1) / Graph::kWordBits), 0);
  for (Vertex v : vertices) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex set member outside graph");
    mask[v / Graph::kWordBits] |= Graph::Word{1} << (v % Graph::kWordBits);
  }
  return mask;
}

C4Check is_c4_free(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::vector<int> paths(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : adj[u]) {
      for (Vertex v : adj[w]) {
        if (v > u && paths[v]++ == 0) touched.push_back(v);
      }
    }
    Vertex v = n;
    for (Vertex t : touched) {
      if (paths[t] >= 2) v = std::min(v, t);
      paths[t] = 0;
    }
    touched.clear();
    if (v == n) continue;
    std::array<Vertex, 2> common{};
    int found = 0;
    const auto ru = g.row(u);
    const auto rv = g.row(v);
    for (std::size_t w = 0; w < ru.size() && found < 2; ++w) {
      for (Graph::Word bits = ru[w] & rv[w]; bits != 0 && found < 2; bits &= bits - 1) {
        common[found++] = static_cast<Vertex>(w) * Graph::kWordBits + std::countr_zero(bits);
      }
    }
    return C4Check{false, std::array<Vertex, 4>{u, common[0], v, common[1]}};
  }
  return C4Check{};
}

DeficiencyProfile deficiency_profile(const Graph& g, int q) {
  DeficiencyProfile p;
  p.q = q;
  p.f.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::int64_t f = static_cast<std::int64_t>(q) + 1 - g.degree(v);
    p.f[v] = f;
    if (f > 0) {
      p.S.push_back(v);
      p.fS += f;
    } else if (f < 0) {
      p.S_plus.push_back(v);
      p.fSplus += f;
    } else {
      p.S_q1.push_back(v);
    }
  }
  return p;
}

std::int64_t count_2paths_outside(const Graph& g, std::span<const Vertex> X) {
  const auto mask = make_vertex_mask(g.order(), X);
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!((mask[v / Graph::kWordBits] >> (v % Graph::kWordBits)) & 1U)) outside.push_back(v);
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) total += g.codegree(outside[i], outside[j]);
  }
  return total;
}

std::int64_t weight_between(const Graph& g, const DeficiencyProfile& profile,
                            std::span<const Vertex> A, std::span<const Vertex> B) {
  const auto a_mask = make_vertex_mask(g.order(), A);
  for (Vertex v : B) {
    if ((a_mask[v / Graph::kWordBits] >> (v % Graph::kWordBits)) & 1U) {
      throw std::invalid_argument("weight_between: A and B must be disjoint");
    }
  }
  std::int64_t w = 0;
  for (Vertex v : B) w += static_cast<std::int64_t>(popcount_and(g.row(v), a_mask)) * profile.f.at(v);
  return w;
}

std::string adjacency_text(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << " e " << g.edge_count() << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    os << v << ':';
    for (Vertex u : g.neighbors(v)) os << ' ' << u;
    os << '\n';
  }
  return os.str();
}

}  // namespace c4ex
