#pragma once

#include <string>

#include "semiclass/types.hpp"

namespace semiclass {

/// Uniform tensor grid on the truncated half-space.
///
/// dim 1: nodes on the normal axis [0, normal_extent].
/// dim 2: (tangential, normal) nodes on [-tangential_extent, tangential_extent]
///        x [0, normal_extent], enumerated with the normal index fastest.
/// Interior grids center the normal axis at zero instead,
/// [-normal_extent/2, normal_extent/2], for experiments on the full space.
///
/// Quadrature weights are composite trapezoid: half weight at axis
/// endpoints, products across axes in dim 2.
class HalfSpaceGrid {
 public:
  int dim = 1;
  Real normal_extent = 0.0;
  Real tangential_extent = 0.0;
  Index points_normal = 0;
  Index points_tangential = 1;
  bool interior = false;

  Real normal_spacing() const { return normal_extent / Real(points_normal - 1); }
  Real tangential_spacing() const {
    return 2.0 * tangential_extent / Real(points_tangential - 1);
  }
  /// Coarsest axis spacing; the resolution checks bound this.
  Real max_spacing() const;

  Real normal_lo() const { return interior ? -0.5 * normal_extent : 0.0; }
  Real normal_coord(Index in) const { return normal_lo() + Real(in) * normal_spacing(); }
  Real tangential_coord(Index it) const {
    return -tangential_extent + Real(it) * tangential_spacing();
  }

  Index size() const { return points_normal * points_tangential; }
  Index node_index(Index it, Index in) const { return it * points_normal + in; }
  Point node(Index i) const;

  /// Trapezoid weight attached to node i.
  Real weight(Index i) const;
  Vec weights() const;

  /// Measure of the truncated box the grid spans.
  Real box_measure() const;

  bool same_layout(const HalfSpaceGrid& other) const;
  std::string describe() const;
};

/// Builds a grid and validates the inputs; throws Error on points < 2 or
/// nonpositive extents.
HalfSpaceGrid make_grid(int dim, Real normal_extent, Real tangential_extent,
                        Index points_normal, Index points_tangential = 1,
                        bool interior = false);

inline HalfSpaceGrid make_grid(Real normal_extent, Index points_normal,
                               bool interior = false) {
  return make_grid(1, normal_extent, 0.0, points_normal, 1, interior);
}

}  // namespace semiclass
