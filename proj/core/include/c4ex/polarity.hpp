#pragma once

#include <array>
#include <vector>

#include "c4ex/gf.hpp"
#include "c4ex/graph.hpp"

namespace c4ex {

// Point of PG(2, q): first nonzero coordinate is 1.
using ProjPoint = std::array<FieldTable::Element, 3>;

// All q^2 + q + 1 normalized points, lexicographic in their coordinates.
std::vector<ProjPoint> projective_points(const FieldTable& field);

// Polarity graph: vertex i is projective_points(field)[i]; u ~ v iff
// u0 v0 + u1 v1 + u2 v2 = 0 and u != v.
Graph polarity_graph(const FieldTable& field);

// Indices (into projective_points) of points with x . x = 0, evaluated
// directly from coordinates.
std::vector<Vertex> absolute_points(const FieldTable& field);

// Removes the r lowest-indexed vertices of degree q. Throws
// std::invalid_argument if r is out of [0, q + 1] or fewer than r such
// vertices exist.
Graph delete_low_degree(const Graph& g, int q, int r);

}  // namespace c4ex
