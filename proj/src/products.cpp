#include "semiclass/products.hpp"

#include <cmath>
#include <sstream>

namespace semiclass {

namespace {

void check_dims(const Symbol& f, const Symbol& g) {
  if (!f.zero && !g.zero && f.dim != g.dim)
    throw Error("symbol product: dimension mismatch (" + f.label + ", " + g.label + ")");
}

void check_resolution(Real spacing, Real feature, const char* where) {
  if (spacing > feature / 8.0) {
    std::ostringstream os;
    os << where << ": quadrature spacing " << spacing << " too coarse for feature size "
       << feature << "; required spacing <= " << feature / 8.0;
    throw ResolutionError(os.str());
  }
}

void check_hbar(Real hbar) {
  if (!(hbar > 0.0) || hbar > 1.0) throw Error("hbar must lie in (0, 1]");
}

Symbol memoized(Symbol f) {
  if (f.zero || f.dim != 1) return f;
  auto cache = std::make_shared<PairCache>();
  auto base = f.eval_fn;
  f.eval_fn = [cache, base](const Point& x, const Point& v) {
    return cache->get(x(1), v(1), [&] { return base(x, v); });
  };
  return f;
}

BoundaryKernel memoized(BoundaryKernel k) {
  if (k.zero || k.dim != 1) return k;
  auto cache = std::make_shared<PairCache>();
  auto base = k.eval_fn;
  k.eval_fn = [cache, base](Real xp, Real up, Real vn, Real wn) {
    return cache->get(vn, wn, [&] { return base(xp, up, vn, wn); });
  };
  return k;
}

/// Shared setup for the two convolutions; `shift_base` distinguishes f*g
/// from f *_h g.
Symbol convolution_impl(const Symbol& f, const Symbol& g, Real hbar,
                        const QuadratureSpec& quad, const std::string& label) {
  check_dims(f, g);
  if (f.zero || g.zero) return Symbol{};

  const Real h = quad.resolved_spacing(std::min(f.decay_radius, g.decay_radius));
  check_resolution(h, std::min(f.decay_radius, g.decay_radius), "convolve_symbols");
  const Real R = quad.resolved_radius(f.decay_radius);
  const LineRule rule = trapezoid_rule(-R, R, h);

  Symbol out;
  out.dim = f.dim;
  out.label = label;
  out.zero = false;
  out.decay_radius = f.decay_radius + g.decay_radius;

  if (f.dim == 1) {
    out.eval_fn = [f, g, hbar, rule](const Point& x, const Point& w) {
      Complex acc(0.0);
      for (Index j = 0; j < rule.size(); ++j) {
        const Real v = rule.nodes(j);
        acc += rule.weights(j) * f(x, point1(v)) *
               g(point1(x(1) - hbar * v), point1(w(1) - v));
      }
      return acc;
    };
  } else {
    out.eval_fn = [f, g, hbar, rule](const Point& x, const Point& w) {
      Complex acc(0.0);
      for (Index jt = 0; jt < rule.size(); ++jt) {
        const Real vt = rule.nodes(jt);
        Complex inner(0.0);
        for (Index jn = 0; jn < rule.size(); ++jn) {
          const Real vn = rule.nodes(jn);
          inner += rule.weights(jn) * f(x, point2(vt, vn)) *
                   g(point2(x(0) - hbar * vt, x(1) - hbar * vn),
                     point2(w(0) - vt, w(1) - vn));
        }
        acc += rule.weights(jt) * inner;
      }
      return acc;
    };
  }
  return memoized(std::move(out));
}

}  // namespace

Symbol convolve_symbols(const Symbol& f, const Symbol& g, const QuadratureSpec& quad) {
  return convolution_impl(f, g, 0.0, quad, "(" + f.label + ")*(" + g.label + ")");
}

Symbol convolve_symbols_hbar(const Symbol& f, const Symbol& g, Real hbar,
                             const QuadratureSpec& quad) {
  check_hbar(hbar);
  std::ostringstream label;
  label << "(" << f.label << ")*_" << hbar << "(" << g.label << ")";
  return convolution_impl(f, g, hbar, quad, label.str());
}

namespace {

BoundaryKernel leftover_impl(const Symbol& f, const Symbol& g, Real hbar,
                             const QuadratureSpec& quad, const std::string& label) {
  check_dims(f, g);
  if (f.zero || g.zero) return BoundaryKernel{};

  const Real h = quad.resolved_spacing(std::min(f.decay_radius, g.decay_radius));
  check_resolution(h, std::min(f.decay_radius, g.decay_radius), "leftover_l");
  const Real upper = quad.resolved_radius(f.decay_radius);

  BoundaryKernel out;
  out.dim = f.dim;
  out.label = label;
  out.zero = false;
  out.decay_radius = f.decay_radius + g.decay_radius;

  if (f.dim == 1) {
    out.eval_fn = [f, g, hbar, h, upper](Real, Real, Real xn, Real yn) {
      if (xn >= upper) return Complex(0.0);
      const LineRule rule = trapezoid_rule(xn, upper, h);
      Complex acc(0.0);
      for (Index j = 0; j < rule.size(); ++j) {
        const Real v = rule.nodes(j);
        acc += rule.weights(j) * f(point1(hbar * xn), point1(v)) *
               g(point1(hbar * (xn - v)), point1(xn - yn - v));
      }
      return -acc;
    };
  } else {
    const Real Rt = quad.resolved_radius(std::max(f.decay_radius, g.decay_radius));
    const LineRule trule = trapezoid_rule(-Rt, Rt, h);
    out.eval_fn = [f, g, hbar, h, upper, trule](Real xp, Real yp, Real xn, Real yn) {
      if (xn >= upper) return Complex(0.0);
      const LineRule nrule = trapezoid_rule(xn, upper, h);
      Complex acc(0.0);
      for (Index jt = 0; jt < trule.size(); ++jt) {
        const Real vt = trule.nodes(jt);
        Complex inner(0.0);
        for (Index jn = 0; jn < nrule.size(); ++jn) {
          const Real vn = nrule.nodes(jn);
          inner += nrule.weights(jn) *
                   f(point2(xp, hbar * xn), point2(vt, vn)) *
                   g(point2(xp - hbar * vt, hbar * (xn - vn)),
                     point2(yp - vt, xn - yn - vn));
        }
        acc += trule.weights(jt) * inner;
      }
      return -acc;
    };
  }
  return memoized(std::move(out));
}

}  // namespace

BoundaryKernel leftover_l(const Symbol& f, const Symbol& g, const QuadratureSpec& quad) {
  return leftover_impl(f, g, 0.0, quad, "l(" + f.label + "," + g.label + ")");
}

BoundaryKernel leftover_l_hbar(const Symbol& f, const Symbol& g, Real hbar,
                               const QuadratureSpec& quad) {
  check_hbar(hbar);
  std::ostringstream label;
  label << "l_" << hbar << "(" << f.label << "," << g.label << ")";
  return leftover_impl(f, g, hbar, quad, label.str());
}

TcElement star_prime(const Symbol& f, const Symbol& g, const QuadratureSpec& quad) {
  return TcElement{convolve_symbols(f, g, quad), leftover_l(f, g, quad)};
}

namespace {

/// Kernel of pi0^d(f) pi0^d(J): half-line composition of the symbol's
/// convolution with the kernel. dim 2 adds the tangential convolution.
BoundaryKernel symbol_kernel_product(const Symbol& f, const BoundaryKernel& J,
                                     const QuadratureSpec& quad) {
  if (f.zero || J.zero) return BoundaryKernel{};
  if (f.dim != J.dim) throw Error("star_prime: dimension mismatch");
  const Real h = quad.resolved_spacing(std::min(f.decay_radius, J.decay_radius));
  const Real U = quad.resolved_radius(J.decay_radius);
  const LineRule nrule = trapezoid_rule(0.0, U, h);

  BoundaryKernel out;
  out.dim = f.dim;
  out.label = "(" + f.label + ")|*(" + J.label + ")";
  out.zero = false;
  out.decay_radius = f.decay_radius + J.decay_radius;
  if (f.dim == 1) {
    out.eval_fn = [f, J, nrule](Real, Real, Real vn, Real wn) {
      Complex acc(0.0);
      for (Index j = 0; j < nrule.size(); ++j) {
        const Real u = nrule.nodes(j);
        acc += nrule.weights(j) * f(point1(0.0), point1(vn - u)) * J(0.0, 0.0, u, wn);
      }
      return acc;
    };
  } else {
    const Real Rt = quad.resolved_radius(std::max(f.decay_radius, J.decay_radius));
    const LineRule trule = trapezoid_rule(-Rt, Rt, h);
    out.eval_fn = [f, J, nrule, trule](Real xp, Real up, Real vn, Real wn) {
      Complex acc(0.0);
      for (Index jt = 0; jt < trule.size(); ++jt) {
        const Real s = trule.nodes(jt);
        Complex inner(0.0);
        for (Index jn = 0; jn < nrule.size(); ++jn) {
          const Real u = nrule.nodes(jn);
          inner += nrule.weights(jn) * f(point2(xp, 0.0), point2(up - s, vn - u)) *
                   J(xp, s, u, wn);
        }
        acc += trule.weights(jt) * inner;
      }
      return acc;
    };
  }
  return memoized(std::move(out));
}

BoundaryKernel kernel_symbol_product(const BoundaryKernel& K, const Symbol& g,
                                     const QuadratureSpec& quad) {
  if (K.zero || g.zero) return BoundaryKernel{};
  if (K.dim != g.dim) throw Error("star_prime: dimension mismatch");
  const Real h = quad.resolved_spacing(std::min(K.decay_radius, g.decay_radius));
  const Real U = quad.resolved_radius(K.decay_radius);
  const LineRule nrule = trapezoid_rule(0.0, U, h);

  BoundaryKernel out;
  out.dim = K.dim;
  out.label = "(" + K.label + ")*|(" + g.label + ")";
  out.zero = false;
  out.decay_radius = K.decay_radius + g.decay_radius;
  if (K.dim == 1) {
    out.eval_fn = [K, g, nrule](Real, Real, Real vn, Real wn) {
      Complex acc(0.0);
      for (Index j = 0; j < nrule.size(); ++j) {
        const Real u = nrule.nodes(j);
        acc += nrule.weights(j) * K(0.0, 0.0, vn, u) * g(point1(0.0), point1(u - wn));
      }
      return acc;
    };
  } else {
    const Real Rt = quad.resolved_radius(std::max(K.decay_radius, g.decay_radius));
    const LineRule trule = trapezoid_rule(-Rt, Rt, h);
    out.eval_fn = [K, g, nrule, trule](Real xp, Real up, Real vn, Real wn) {
      Complex acc(0.0);
      for (Index jt = 0; jt < trule.size(); ++jt) {
        const Real s = trule.nodes(jt);
        Complex inner(0.0);
        for (Index jn = 0; jn < nrule.size(); ++jn) {
          const Real u = nrule.nodes(jn);
          inner += nrule.weights(jn) * K(xp, up - s, vn, u) *
                   g(point2(xp, 0.0), point2(s, u - wn));
        }
        acc += trule.weights(jt) * inner;
      }
      return acc;
    };
  }
  return memoized(std::move(out));
}

BoundaryKernel kernel_kernel_product(const BoundaryKernel& K, const BoundaryKernel& J,
                                     const QuadratureSpec& quad) {
  if (K.zero || J.zero) return BoundaryKernel{};
  if (K.dim != J.dim) throw Error("star_prime: dimension mismatch");
  const Real h = quad.resolved_spacing(std::min(K.decay_radius, J.decay_radius));
  const Real U = quad.resolved_radius(std::min(K.decay_radius, J.decay_radius));
  const LineRule nrule = trapezoid_rule(0.0, U, h);

  BoundaryKernel out;
  out.dim = K.dim;
  out.label = "(" + K.label + ")*(" + J.label + ")";
  out.zero = false;
  out.decay_radius = std::max(K.decay_radius, J.decay_radius);
  if (K.dim == 1) {
    out.eval_fn = [K, J, nrule](Real, Real, Real vn, Real wn) {
      Complex acc(0.0);
      for (Index j = 0; j < nrule.size(); ++j) {
        const Real u = nrule.nodes(j);
        acc += nrule.weights(j) * K(0.0, 0.0, vn, u) * J(0.0, 0.0, u, wn);
      }
      return acc;
    };
  } else {
    const Real Rt = quad.resolved_radius(std::max(K.decay_radius, J.decay_radius));
    const LineRule trule = trapezoid_rule(-Rt, Rt, h);
    out.eval_fn = [K, J, nrule, trule](Real xp, Real up, Real vn, Real wn) {
      Complex acc(0.0);
      for (Index jt = 0; jt < trule.size(); ++jt) {
        const Real s = trule.nodes(jt);
        Complex inner(0.0);
        for (Index jn = 0; jn < nrule.size(); ++jn) {
          const Real u = nrule.nodes(jn);
          inner += nrule.weights(jn) * K(xp, up - s, vn, u) * J(xp, s, u, wn);
        }
        acc += trule.weights(jt) * inner;
      }
      return acc;
    };
  }
  return memoized(std::move(out));
}

}  // namespace

TcElement star_prime(const TcElement& a, const TcElement& b, const QuadratureSpec& quad) {
  TcElement out;
  out.sym = convolve_symbols(a.sym, b.sym, quad);
  out.ker = leftover_l(a.sym, b.sym, quad);
  out.ker = add_kernels(out.ker, symbol_kernel_product(a.sym, b.ker, quad));
  out.ker = add_kernels(out.ker, kernel_symbol_product(a.ker, b.sym, quad));
  out.ker = add_kernels(out.ker, kernel_kernel_product(a.ker, b.ker, quad));
  return out;
}

}  // namespace semiclass
