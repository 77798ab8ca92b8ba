#include "c4ex/polarity.hpp"

#include <string>

namespace c4ex {
namespace {

FieldTable::Element dot(const FieldTable& f, const ProjPoint& a, const ProjPoint& b) {
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

}  // namespace

std::vector<ProjPoint> projective_points(const FieldTable& field) {
  const auto q = static_cast<FieldTable::Element>(field.size());
  std::vector<ProjPoint> pts;
  pts.reserve(static_cast<std::size_t>(q) * q + q + 1);
  // Lexicographic order: (0,0,1) < (0,1,*) < (1,*,*).
  pts.push_back({0, 0, 1});
  for (FieldTable::Element b = 0; b < q; ++b) pts.push_back({0, 1, b});
  for (FieldTable::Element a = 0; a < q; ++a) {
    for (FieldTable::Element b = 0; b < q; ++b) pts.push_back({1, a, b});
  }
  return pts;
}

Graph polarity_graph(const FieldTable& field) {
  const auto pts = projective_points(field);
  const auto q = static_cast<FieldTable::Element>(field.size());
  const int n = static_cast<int>(pts.size());
  auto index = [q](FieldTable::Element a, FieldTable::Element b) { return static_cast<Vertex>(1 + q + a * q + b); };
  Graph g(n);
  std::vector<Vertex> line;
  line.reserve(q + 1);
  for (Vertex u = 0; u < n; ++u) {
    const auto [u0, u1, u2] = pts[u];
    line.clear();
    if (u2 != 0) {
      // x2 = -(u0 x0 + u1 x1) / u2 over the points (1, a, *) and (0, 1, *).
      const auto scale = field.neg(field.inv(u2));
      for (FieldTable::Element a = 0; a < q; ++a) {
        line.push_back(index(a, field.mul(scale, field.add(u0, field.mul(u1, a)))));
      }
      line.push_back(static_cast<Vertex>(1 + field.mul(scale, u1)));
    } else {
      line.push_back(0);
      if (u1 != 0) {
        const auto a = field.neg(field.mul(u0, field.inv(u1)));
        for (FieldTable::Element b = 0; b < q; ++b) line.push_back(index(a, b));
      } else {
        for (FieldTable::Element b = 0; b < q; ++b) line.push_back(static_cast<Vertex>(1 + b));
      }
    }
    for (Vertex v : line) {
      if (v > u) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<Vertex> absolute_points(const FieldTable& field) {
  const auto pts = projective_points(field);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (dot(field, pts[i], pts[i]) == 0) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

Graph delete_low_degree(const Graph& g, int q, int r) {
  if (r < 0 || r > q + 1) {
    throw std::invalid_argument("delete_low_degree: r=" + std::to_string(r) + " outside [0, q+1]");
  }
  std::vector<Vertex> removed;
  for (Vertex v = 0; v < g.order() && static_cast<int>(removed.size()) < r; ++v) {
    if (g.degree(v) == q) removed.push_back(v);
  }
  if (static_cast<int>(removed.size()) < r) {
    throw std::invalid_argument("delete_low_degree: only " + std::to_string(removed.size()) +
                                " vertices of degree " + std::to_string(q) + ", need " + std::to_string(r));
  }
  std::vector<Vertex> keep;
  keep.reserve(static_cast<std::size_t>(g.order() - r));
  std::size_t next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (next < removed.size() && removed[next] == v) {
      ++next;
      continue;
    }
    keep.push_back(v);
  }
  return g.induced(keep);
}

}  // namespace c4ex
