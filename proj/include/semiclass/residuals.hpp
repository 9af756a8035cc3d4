#pragma once

#include "semiclass/assemble.hpp"
#include "semiclass/norms.hpp"
#include "semiclass/products.hpp"

namespace semiclass {

/// Composition residuals are measured on a section of a padded grid:
/// truncating the composition integral at the far end of the domain
/// manufactures a spurious leftover term there, so the operators are
/// composed on [0, L + pad] (pad covering the scaled fiber reach) and the
/// norm is taken over the section below L. The physical corner at x_n = 0
/// stays inside the section.

struct GreenResiduals {
  Real exact = 0.0;  // against rho(f *_h g) + kappa(l_h(f,g))
  Real limit = 0.0;  // against rho(f * g) + kappa(l(f,g))
  Real scale = 0.0;  // |rho_h(f)| |rho_h(g)| over the same section
};

GreenResiduals green_decomposition_residuals(const Symbol& f, const Symbol& g,
                                             Real hbar, const HalfSpaceGrid& section,
                                             const QuadratureSpec& quad,
                                             NormMethod method = NormMethod::kAuto,
                                             Real tol = 1e-8, int max_iterations = 5000);

struct ResidualPair {
  Real value = 0.0;
  Real scale = 0.0;
};

/// |rho_h(f) rho_h(g) - rho_h(f*g)| on an interior section (both ends padded).
ResidualPair interior_multiplicativity_residual(const Symbol& f, const Symbol& g,
                                                Real hbar, const HalfSpaceGrid& section,
                                                const QuadratureSpec& quad,
                                                NormMethod method = NormMethod::kAuto,
                                                Real tol = 1e-8,
                                                int max_iterations = 5000);

/// |pi0^d(f) pi0^d(g) - pi0^d(f*g) - pi0^d(l(f,g))| on the half-line section.
ResidualPair boundary_multiplicativity_residual(const Symbol& f, const Symbol& g,
                                                const HalfSpaceGrid& section,
                                                const QuadratureSpec& quad,
                                                NormMethod method = NormMethod::kAuto,
                                                Real tol = 1e-8,
                                                int max_iterations = 5000);

}  // namespace semiclass
