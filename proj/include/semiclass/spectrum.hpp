#pragma once

#include <vector>

#include "semiclass/quadrature.hpp"
#include "semiclass/symbol.hpp"
#include "semiclass/types.hpp"

namespace semiclass {

/// fhat(sigma) = integral exp(-i <v, sigma>) f(v) dv; the inverse carries
/// (2 pi)^{-n}. Recorded on every spectrum so norms are convention-stable.
enum class FourierConvention { kNegativePhaseUnitMeasure };

/// Sample locations for a fiberwise Fourier transform: base points x and
/// covariable points sigma.
struct SpectrumGrid {
  int dim = 1;
  std::vector<Point> base_nodes;
  std::vector<Point> sigma_nodes;
};

/// Uniform dim-1 covariable grid on [-sigma_max, sigma_max].
SpectrumGrid spectrum_line(const std::vector<Real>& base, Real sigma_max,
                           Index sigma_points);

/// Covariable grid matched to a periodic fiber of half-length `fiber_extent`
/// with `fiber_points` nodes: sigma_k = pi k / fiber_extent. The circulant
/// fiber blocks of the convolution representation diagonalize exactly on
/// these frequencies.
SpectrumGrid matched_spectrum_grid(const std::vector<Real>& base, Real fiber_extent,
                                   Index fiber_points);

struct SampledSpectrum {
  SpectrumGrid grid;
  CMat samples;  // (base index, sigma index)
  FourierConvention convention = FourierConvention::kNegativePhaseUnitMeasure;
};

/// Quadrature transform of f in the fiber at every (x, sigma) node.
/// Throws ResolutionError when the integration spacing cannot resolve the
/// largest requested frequency (Nyquist check), naming the required spacing.
SampledSpectrum fiberwise_fourier(const Symbol& f, const SpectrumGrid& grid,
                                  const QuadratureSpec& quad = {});

Real symbol_sup_norm(const SampledSpectrum& s);

}  // namespace semiclass
