#pragma once

#include "assoc/diagonal.hpp"

#include <utility>
#include <vector>

namespace assoc {

/// Δ^n = conv{(1,..,1,0,..,0)} with vertex i having i leading ones, cut out by
/// 1 >= z_1 >= ... >= z_n >= 0, oriented by (1, ..., 1). Vertex i is listed at index i.
OrientedPolytope simplex_polytope(std::size_t n);

/// [0, 1]^n oriented by (1, ..., 1). Vertices in lexicographic order.
OrientedPolytope cube_polytope(std::size_t n);

/// ((2z_1-1, ..., 2z_i-1, 0, ..., 0), (1, ..., 1, 2z_{i+1}, ..., 2z_n)) where i
/// counts the coordinates >= 1/2. Throws OutsidePolytopeError off the simplex.
std::pair<QPoint, QPoint> aw_diagonal(std::size_t n, const QPoint& z);

/// Δ^{0..i} x Δ^{i..n} for i = 0..n, as vertex index sets of simplex_polytope(n).
std::vector<ProductCell> aw_cells(std::size_t n);

/// Coordinatewise (max(0, 2z-1), min(1, 2z)). Throws OutsidePolytopeError off the cube.
std::pair<QPoint, QPoint> cube_diagonal(std::size_t n, const QPoint& z);

/// The 2^n products of interval cells, as vertex index sets of cube_polytope(n).
std::vector<ProductCell> cube_cells(std::size_t n);

}  // namespace assoc
