#include "semiclass/residuals.hpp"

#include <cmath>

namespace semiclass {

namespace {

Real combined_radius(const Symbol& f, const Symbol& g) {
  return (f.zero ? 0.0 : f.decay_radius) + (g.zero ? 0.0 : g.decay_radius);
}

/// Same spacing as the section, extended by `pad` (at least four cells).
HalfSpaceGrid padded_grid(const HalfSpaceGrid& section, Real pad, bool both_sides) {
  const Real h = section.normal_spacing();
  const Index extra = std::max<Index>(4, Index(std::ceil(pad / h)));
  const Index pn = section.points_normal + (both_sides ? 2 * extra : extra);
  return make_grid(section.dim, h * Real(pn - 1), section.tangential_extent, pn,
                   section.points_tangential, section.interior);
}

}  // namespace

GreenResiduals green_decomposition_residuals(const Symbol& f, const Symbol& g, Real hbar,
                                             const HalfSpaceGrid& section,
                                             const QuadratureSpec& quad, NormMethod method,
                                             Real tol, int max_iterations) {
  if (section.interior)
    throw Error("green_decomposition_residuals: needs a half-space section");
  GreenResiduals out;
  if (f.zero || g.zero) return out;

  const Real h = section.normal_spacing();
  const HalfSpaceGrid grid =
      padded_grid(section, 1.25 * hbar * combined_radius(f, g), false);
  const Real hi = section.normal_extent + 0.5 * h;

  auto section_norm = [&](const DiscreteOperator& op) {
    return operator_norm(restrict_interval(op, -1.0, hi), method, tol, max_iterations)
        .value;
  };

  const DiscreteOperator rf = assemble_rho(f, hbar, grid);
  const DiscreteOperator rg = assemble_rho(g, hbar, grid);
  out.scale = section_norm(rf) * section_norm(rg);
  const DiscreteOperator product = compose(rf, rg);

  const DiscreteOperator exact_part =
      operator_sum(assemble_rho(convolve_symbols_hbar(f, g, hbar, quad), hbar, grid),
                   assemble_kappa(leftover_l_hbar(f, g, hbar, quad), hbar, grid));
  out.exact = section_norm(operator_diff(product, exact_part));

  const DiscreteOperator limit_part =
      operator_sum(assemble_rho(convolve_symbols(f, g, quad), hbar, grid),
                   assemble_kappa(leftover_l(f, g, quad), hbar, grid));
  out.limit = section_norm(operator_diff(product, limit_part));
  return out;
}

ResidualPair interior_multiplicativity_residual(const Symbol& f, const Symbol& g,
                                                Real hbar, const HalfSpaceGrid& section,
                                                const QuadratureSpec& quad,
                                                NormMethod method, Real tol,
                                                int max_iterations) {
  if (!section.interior)
    throw Error("interior_multiplicativity_residual: needs an interior section");
  ResidualPair out;
  if (f.zero || g.zero) return out;

  const Real h = section.normal_spacing();
  const HalfSpaceGrid grid =
      padded_grid(section, 1.25 * hbar * combined_radius(f, g), true);
  const Real half = 0.5 * section.normal_extent + 0.5 * h;

  auto section_norm = [&](const DiscreteOperator& op) {
    return operator_norm(restrict_interval(op, -half, half), method, tol, max_iterations)
        .value;
  };

  const DiscreteOperator rf = assemble_rho(f, hbar, grid);
  const DiscreteOperator rg = assemble_rho(g, hbar, grid);
  out.scale = section_norm(rf) * section_norm(rg);
  out.value = section_norm(operator_diff(
      compose(rf, rg), assemble_rho(convolve_symbols(f, g, quad), hbar, grid)));
  return out;
}

ResidualPair boundary_multiplicativity_residual(const Symbol& f, const Symbol& g,
                                                const HalfSpaceGrid& section,
                                                const QuadratureSpec& quad,
                                                NormMethod method, Real tol,
                                                int max_iterations) {
  if (section.dim != 1)
    throw Error("boundary_multiplicativity_residual: dim-1 section required");
  ResidualPair out;
  if (f.zero || g.zero) return out;

  const Real h = section.normal_spacing();
  const HalfSpaceGrid grid = padded_grid(section, 1.25 * combined_radius(f, g), false);
  const Real hi = section.normal_extent + 0.5 * h;

  auto section_norm = [&](const DiscreteOperator& op) {
    return operator_norm(restrict_interval(op, -1.0, hi), method, tol, max_iterations)
        .value;
  };

  const DiscreteOperator hf = assemble_pi0_boundary(f, BoundaryKernel{}, grid);
  const DiscreteOperator hg = assemble_pi0_boundary(g, BoundaryKernel{}, grid);
  out.scale = section_norm(hf) * section_norm(hg);
  const DiscreteOperator rhs = assemble_pi0_boundary(
      convolve_symbols(f, g, quad), leftover_l(f, g, quad), grid, {}, quad);
  out.value = section_norm(operator_diff(compose(hf, hg), rhs));
  return out;
}

}  // namespace semiclass
