#pragma once

#include <functional>
#include <string>

#include "semiclass/types.hpp"

namespace semiclass {

/// Function f(x, v) on the tangent space of the (truncated) half-space.
/// Catalogue entries are globally defined in the base variable, so
/// evaluation off the half-space is the smooth extension.
///
/// decay_radius bounds the fiber support: |f(x, v)| < kDecayFloor whenever
/// ||v|| >= decay_radius.
struct Symbol {
  int dim = 1;
  std::string label = "zero";
  Real decay_radius = 1.0;
  bool zero = true;
  std::function<Complex(const Point& x, const Point& v)> eval_fn;

  Complex operator()(const Point& x, const Point& v) const {
    return zero ? Complex(0.0) : eval_fn(x, v);
  }
  /// dim-1 evaluation at base coordinate x and fiber coordinate v.
  Complex at(Real x, Real v) const { return (*this)(point1(x), point1(v)); }
};

/// Kernel K(x', u', v_n, w_n) housing singular-Green data on the boundary.
/// dim-1 kernels ignore the tangential slots.
struct BoundaryKernel {
  int dim = 1;
  std::string label = "zero";
  Real decay_radius = 1.0;
  bool zero = true;
  std::function<Complex(Real xp, Real up, Real vn, Real wn)> eval_fn;

  Complex operator()(Real xp, Real up, Real vn, Real wn) const {
    return zero ? Complex(0.0) : eval_fn(xp, up, vn, wn);
  }
  Complex at(Real vn, Real wn) const { return (*this)(0.0, 0.0, vn, wn); }
};

/// Resolve a catalogue id such as "gauss:a=1,b=0.5" or "zero".
/// Throws ConfigError for unknown entries or malformed parameters.
Symbol make_symbol(const std::string& id);
BoundaryKernel make_kernel(const std::string& id);

Symbol conjugate(const Symbol& f);
BoundaryKernel conjugate(const BoundaryKernel& k);

BoundaryKernel add_kernels(const BoundaryKernel& a, const BoundaryKernel& b);

/// Human-readable catalogue grammar for the CLI.
std::string catalog_help();

}  // namespace semiclass
