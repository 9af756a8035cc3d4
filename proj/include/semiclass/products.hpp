#pragma once

#include "semiclass/quadrature.hpp"
#include "semiclass/symbol.hpp"

namespace semiclass {

/// Fiber convolution (f*g)(x, w) = integral f(x, v) g(x, w-v) dv.
/// The result evaluates by quadrature on demand; dim-1 results memoize on
/// the evaluation lattice.
Symbol convolve_symbols(const Symbol& f, const Symbol& g, const QuadratureSpec& quad = {});

/// Scaled composition (f *_h g)(x, w) = integral f(x, v) g(x - h v, w - v) dv,
/// with f, g evaluated through their smooth extensions in the base.
Symbol convolve_symbols_hbar(const Symbol& f, const Symbol& g, Real hbar,
                             const QuadratureSpec& quad = {});

/// Leftover term of the composition of truncated operators at h = 0:
/// dim 1:  l(f,g)(x_n, y_n) = - integral_{v >= x_n} f(v) g(x_n - v - y_n) dv
/// with f, g frozen at the boundary base point.
BoundaryKernel leftover_l(const Symbol& f, const Symbol& g, const QuadratureSpec& quad = {});

/// Scaled leftover term
/// l_h(f,g)(x',y',x_n,y_n) =
///   - integral_{v_n >= x_n} f(x', h x_n, v)
///       g(x' - h v', h (x_n - v_n), y' - v', x_n - y_n - v_n) dv.
BoundaryKernel leftover_l_hbar(const Symbol& f, const Symbol& g, Real hbar,
                               const QuadratureSpec& quad = {});

/// Element of the boundary symbol algebra: interior part plus Green part.
struct TcElement {
  Symbol sym;
  BoundaryKernel ker;
};

/// Product in the boundary symbol algebra restricted to pure symbols:
/// f *' g = (f*g, l(f,g)).
TcElement star_prime(const Symbol& f, const Symbol& g, const QuadratureSpec& quad = {});

/// Full product with kernel parts: the Green component picks up the
/// symbol/kernel half-convolutions and the kernel-kernel composition.
TcElement star_prime(const TcElement& a, const TcElement& b,
                     const QuadratureSpec& quad = {});

}  // namespace semiclass
