#pragma once

#include <vector>

#include "semiclass/operators.hpp"
#include "semiclass/quadrature.hpp"
#include "semiclass/spectrum.hpp"
#include "semiclass/symbol.hpp"

namespace semiclass {

/// rho_h(f): kernel(x, w) = h^{-n} f(x, (x-w)/h) on the grid, with the
/// integration over the grid realizing the half-space truncation.
/// Requires grid spacing <= hbar * decay_radius / 8; the error names the
/// finest admissible hbar for the grid.
DiscreteOperator assemble_rho(const Symbol& f, Real hbar, const HalfSpaceGrid& grid);

/// kappa_h(K) in original coordinates:
/// dim 1: kernel(x, w) = h^{-1} K(x/h, w/h);
/// dim 2: kernel(x, w) = h^{-2} K(x', (x'-w')/h, x_n/h, w_n/h).
DiscreteOperator assemble_kappa(const BoundaryKernel& K, Real hbar,
                                const HalfSpaceGrid& grid);

/// Grid over the tangent space: base points carrying a periodic fiber.
/// The fiber wraps at +-fiber_extent, so each base block is circulant and
/// diagonalizes exactly on the matched covariable grid.
struct TangentGrid {
  int dim = 1;
  std::vector<Point> base_nodes;
  Real fiber_extent = 0.0;
  Index fiber_points = 0;

  Real fiber_spacing() const { return 2.0 * fiber_extent / Real(fiber_points); }
  std::vector<Real> base_normals() const;
};

TangentGrid make_tangent_grid(int dim, std::vector<Point> base_nodes, Real fiber_extent,
                              Index fiber_points);

/// pi_0(f): block diagonal over base nodes; each block is the fiber
/// convolution matrix of f(x, .). Its norm must match
/// symbol_sup_norm(fiberwise_fourier(f, matched grid)).
DiscreteOperator assemble_pi0(const Symbol& f, const TangentGrid& tgrid);

/// Matched covariable grid for assemble_pi0 on the same tangent grid.
SpectrumGrid pi0_matched_spectrum(const TangentGrid& tgrid);

/// Frozen tangential frequencies for the dim-2 boundary representation.
struct BoundaryFamily {
  std::vector<Real> sigma_nodes;
};

/// pi_0^d(f, K): dim 1 gives the half-line operator with kernel
/// f(0, v-w) + K(v, w); dim 2 assembles one half-line block per frozen
/// (x', sigma') after the tangential Fourier transform and reports the
/// family supremum through the stacked block-diagonal operator.
DiscreteOperator assemble_pi0_boundary(const Symbol& f, const BoundaryKernel& K,
                                       const HalfSpaceGrid& grid,
                                       const BoundaryFamily& family = {},
                                       const QuadratureSpec& quad = {});

/// P_h: 0/1 diagonal selecting nodes with x_n < thickness. thickness >= L_n
/// yields the identity; thickness below one grid spacing is an error.
DiscreteOperator boundary_projection(const HalfSpaceGrid& grid, Real thickness);

/// Default schedule a_h = hbar^beta.
DiscreteOperator boundary_projection_hbar(const HalfSpaceGrid& grid, Real hbar,
                                          Real beta = 0.5);

/// D_h: (D_h xi)(x', x_n) = sqrt(h) xi(x', h x_n) by linear interpolation
/// on the normal axis; the weight makes it an isometry onto its range.
DiscreteOperator dilation(Real hbar, const HalfSpaceGrid& grid);

}  // namespace semiclass
