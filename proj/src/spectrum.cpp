#include "semiclass/spectrum.hpp"

#include <cmath>
#include <sstream>

namespace semiclass {

SpectrumGrid spectrum_line(const std::vector<Real>& base, Real sigma_max,
                           Index sigma_points) {
  if (sigma_points < 2 || sigma_max <= 0.0)
    throw Error("spectrum_line: need sigma_max > 0 and at least 2 points");
  SpectrumGrid g;
  g.dim = 1;
  for (Real x : base) g.base_nodes.push_back(point1(x));
  const Real h = 2.0 * sigma_max / Real(sigma_points - 1);
  for (Index k = 0; k < sigma_points; ++k)
    g.sigma_nodes.push_back(point1(-sigma_max + Real(k) * h));
  return g;
}

SpectrumGrid matched_spectrum_grid(const std::vector<Real>& base, Real fiber_extent,
                                   Index fiber_points) {
  if (fiber_points < 2 || fiber_extent <= 0.0)
    throw Error("matched_spectrum_grid: bad fiber parameters");
  SpectrumGrid g;
  g.dim = 1;
  for (Real x : base) g.base_nodes.push_back(point1(x));
  for (Index k = -fiber_points / 2; k < (fiber_points + 1) / 2; ++k)
    g.sigma_nodes.push_back(point1(kPi * Real(k) / fiber_extent));
  return g;
}

SampledSpectrum fiberwise_fourier(const Symbol& f, const SpectrumGrid& grid,
                                  const QuadratureSpec& quad) {
  if (!grid.base_nodes.empty() && !grid.sigma_nodes.empty() && grid.dim != f.dim &&
      !f.zero)
    throw Error("fiberwise_fourier: dimension mismatch");

  SampledSpectrum out;
  out.grid = grid;
  out.samples = CMat::Zero(Index(grid.base_nodes.size()), Index(grid.sigma_nodes.size()));
  if (f.zero || out.samples.size() == 0) return out;

  const Real h = quad.resolved_spacing(f.decay_radius);
  const Real R = quad.resolved_radius(f.decay_radius);
  Real sigma_max = 0.0;
  for (const auto& s : grid.sigma_nodes)
    sigma_max = std::max(sigma_max, s.cwiseAbs().maxCoeff());
  if (sigma_max * h > 0.5 * kPi) {
    std::ostringstream os;
    os << "fiberwise_fourier: spacing " << h << " cannot resolve |sigma| = " << sigma_max
       << "; required spacing <= " << 0.5 * kPi / sigma_max;
    throw ResolutionError(os.str());
  }
  const LineRule rule = trapezoid_rule(-R, R, h);
  const Index m = rule.size();

  if (f.dim == 1) {
    CVec fv(m);
    for (std::size_t bi = 0; bi < grid.base_nodes.size(); ++bi) {
      const Point& x = grid.base_nodes[bi];
      for (Index j = 0; j < m; ++j)
        fv(j) = rule.weights(j) * f(x, point1(rule.nodes(j)));
      for (std::size_t si = 0; si < grid.sigma_nodes.size(); ++si) {
        const Real sigma = grid.sigma_nodes[si](1);
        // Incremental phase along the uniform rule, re-anchored every 256
        // steps to keep the accumulated rounding below 1e-13.
        const Complex step = std::polar(1.0, -rule.spacing * sigma);
        Complex phase(0.0);
        Complex acc(0.0);
        for (Index j = 0; j < m; ++j) {
          if (j % 256 == 0) phase = std::polar(1.0, -rule.nodes(j) * sigma);
          acc += fv(j) * phase;
          phase *= step;
        }
        out.samples(Index(bi), Index(si)) = acc;
      }
    }
    return out;
  }

  // dim 2: tensor rule over (v_t, v_n); phases factor across the axes.
  for (std::size_t bi = 0; bi < grid.base_nodes.size(); ++bi) {
    const Point& x = grid.base_nodes[bi];
    CMat fv(m, m);
    for (Index jt = 0; jt < m; ++jt)
      for (Index jn = 0; jn < m; ++jn)
        fv(jt, jn) = rule.weights(jt) * rule.weights(jn) *
                     f(x, point2(rule.nodes(jt), rule.nodes(jn)));
    for (std::size_t si = 0; si < grid.sigma_nodes.size(); ++si) {
      const Point& s = grid.sigma_nodes[si];
      CVec pt(m), pn(m);
      for (Index j = 0; j < m; ++j) {
        pt(j) = std::polar(1.0, -rule.nodes(j) * s(0));
        pn(j) = std::polar(1.0, -rule.nodes(j) * s(1));
      }
      out.samples(Index(bi), Index(si)) = pt.transpose() * fv * pn;
    }
  }
  return out;
}

Real symbol_sup_norm(const SampledSpectrum& s) {
  if (s.samples.size() == 0) return 0.0;
  return s.samples.cwiseAbs().maxCoeff();
}

}  // namespace semiclass
