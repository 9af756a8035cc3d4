#pragma once

#include <string>

#include "semiclass/grid.hpp"
#include "semiclass/types.hpp"

namespace semiclass {

/// Dense kernel matrix together with the quadrature weights of its domain.
/// The operator action is  (A xi)_i = sum_j kernel(i,j) w_j xi_j,  i.e. the
/// row-wise quadrature of an integral kernel. Diagonal multiplication
/// operators therefore carry kernel entries m_i / w_i.
struct DiscreteOperator {
  CMat kernel;
  Vec weights;
  std::string label;
  HalfSpaceGrid grid;    // geometric provenance when assembled from a grid
  bool has_grid = false;

  Index size() const { return kernel.rows(); }

  /// kernel * (weights .* xi), evaluated as one matrix product.
  CVec apply(const CVec& xi) const;
  /// Same action accumulated row by row; the two must agree to 1e-12.
  CVec apply_rowwise(const CVec& xi) const;
};

DiscreteOperator make_operator(const HalfSpaceGrid& grid, CMat kernel, std::string label);

/// Identity on the grid's discrete L^2 space (kernel diag(1/w)).
DiscreteOperator identity_operator(const HalfSpaceGrid& grid);

/// Weighted composition: the quadrature weights sit between the kernels.
DiscreteOperator compose(const DiscreteOperator& a, const DiscreteOperator& b);

/// Adjoint in the weighted inner product; <A xi, eta> = <xi, A* eta> exactly.
DiscreteOperator adjoint(const DiscreteOperator& a);

DiscreteOperator operator_sum(const DiscreteOperator& a, const DiscreteOperator& b);
DiscreteOperator operator_diff(const DiscreteOperator& a, const DiscreteOperator& b);
DiscreteOperator operator_scale(const DiscreteOperator& a, Complex c);

/// W^{1/2} K W^{1/2}: the plain 2-norm of this matrix is the operator norm
/// on the weighted discrete L^2 space.
CMat weighted_matrix(const DiscreteOperator& a);

/// Sub-operator on the nodes with normal coordinate in [lo, hi); equals the
/// compression by the corresponding 0/1 projection, without the padding
/// zeros. Requires grid provenance.
DiscreteOperator restrict_interval(const DiscreteOperator& a, Real lo, Real hi);

}  // namespace semiclass
