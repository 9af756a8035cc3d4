#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "semiclass/products.hpp"
#include "semiclass/spectrum.hpp"

using namespace semiclass;

namespace {

// Frozen closed forms.
constexpr Real kSqrtPiOver2 = 1.2533141373155002512;       // integral of e^{-2v^2}
constexpr Real kHalfLeftover = -0.6266570686577501256;     // -(1/2) sqrt(pi/2)
constexpr Real kHbarConvAtOne = 0.69707005721920402637;    // e^{-1} sqrt(8 pi / 7)

/// Independent composite-Simpson oracle on [a, b].
template <class F>
Complex simpson(F&& fn, Real a, Real b, Index n) {
  if (n % 2 == 1) ++n;
  const Real h = (b - a) / Real(n);
  Complex acc(0.0);
  for (Index i = 0; i <= n; ++i) {
    const Real c = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += c * fn(a + Real(i) * h);
  }
  return acc * (h / 3.0);
}

}  // namespace

TEST_CASE("convolve_symbols: zero annihilates") {
  const Symbol z = make_symbol("zero");
  const Symbol f = make_symbol("gauss:b=1");
  CHECK(convolve_symbols(z, f).zero);
  CHECK(convolve_symbols(f, z).zero);
  CHECK(leftover_l(f, z).zero);
  CHECK(leftover_l(z, f).zero);
}

TEST_CASE("convolve_symbols: gaussian value at the origin") {
  // f = g = e^{-v^2}: (f*g)(x, 0) = integral e^{-2v^2} dv = sqrt(pi/2).
  const Symbol f = make_symbol("gauss:b=1");
  const Symbol c = convolve_symbols(f, f);
  CHECK(c.at(0.3, 0.0).real() == doctest::Approx(kSqrtPiOver2).epsilon(1e-10));
  CHECK(c.decay_radius == doctest::Approx(2.0 * f.decay_radius));
}

TEST_CASE("convolution theorem against the transform") {
  const Symbol f = make_symbol("gauss:b=0.5");
  const Symbol g = make_symbol("gauss:b=1,v0=1");
  const Symbol fg = convolve_symbols(f, g);
  const SpectrumGrid sg = spectrum_line({0.0}, 3.0, 13);
  const SampledSpectrum sf = fiberwise_fourier(f, sg);
  const SampledSpectrum sgm = fiberwise_fourier(g, sg);
  const SampledSpectrum sfg = fiberwise_fourier(fg, sg);
  for (Index k = 0; k < sf.samples.cols(); ++k)
    CHECK(std::abs(sfg.samples(0, k) - sf.samples(0, k) * sgm.samples(0, k)) <= 1e-8);
}

TEST_CASE("convolve_symbols_hbar: base-independent g collapses to f*g") {
  const Symbol f = make_symbol("gauss:a=1,b=0.5");
  const Symbol g = make_symbol("gauss:b=1");  // no base dependence
  const Symbol plain = convolve_symbols(f, g);
  const Symbol scaled = convolve_symbols_hbar(f, g, 0.7);
  for (Real x : {0.0, 0.5, 2.0})
    for (Real w : {-1.0, 0.0, 1.5})
      CHECK(std::abs(plain.at(x, w) - scaled.at(x, w)) <= 1e-12);
}

TEST_CASE("convolve_symbols_hbar: frozen value and quadrature oracle") {
  const Symbol f = make_symbol("gauss:a=1,b=0.5");
  const Symbol g = make_symbol("gauss:a=0.5,b=0.25,x0=1");
  const Symbol c = convolve_symbols_hbar(f, g, 0.5);
  // Closed form at (x=1, w=0): e^{-1} sqrt(8 pi / 7).
  CHECK(c.at(1.0, 0.0).real() == doctest::Approx(kHbarConvAtOne).epsilon(1e-9));
  // Independent quadrature oracle at a second point.
  const Complex oracle = simpson(
      [&](Real v) {
        return f.at(0.5, v) * g.at(0.5 - 0.5 * v, 1.0 - v);
      },
      -1.5 * f.decay_radius, 1.5 * f.decay_radius, 6000);
  CHECK(std::abs(c.at(0.5, 1.0) - oracle) <= 1e-8);
  CHECK_THROWS_AS(convolve_symbols_hbar(f, g, 0.0), Error);
  CHECK_THROWS_AS(convolve_symbols_hbar(f, g, 1.5), Error);
}

TEST_CASE("leftover_l: frozen gaussian value at the corner") {
  // f = g = e^{-v^2}: l(f,g)(0,0) = -integral_0^inf e^{-2v^2} dv.
  const Symbol f = make_symbol("gauss:b=1");
  const BoundaryKernel l = leftover_l(f, f);
  CHECK(l.at(0.0, 0.0).real() == doctest::Approx(kHalfLeftover).epsilon(1e-10));
}

TEST_CASE("leftover_l: vanishes when f lives in the lower half fiber") {
  // f supported in v < 0 makes the integral over v >= x_n empty on x_n >= 0.
  const Symbol f = make_symbol("bump:w=2,v0=-3");
  const Symbol g = make_symbol("gauss:b=1");
  const BoundaryKernel l = leftover_l(f, g);
  for (Real xn : {0.0, 0.5, 1.0, 4.0})
    for (Real yn : {0.0, 1.0}) CHECK(std::abs(l.at(xn, yn)) <= 1e-14);
}

TEST_CASE("leftover_l_hbar: matches direct quadrature at hbar = 1") {
  const Symbol f = make_symbol("gauss:a=1,b=0.5");
  const Symbol g = make_symbol("gauss:a=0.5,b=0.25,x0=1");
  const Real xn = 0.25, yn = 0.5;
  const Complex oracle = -simpson(
      [&](Real v) {
        return f.at(xn, v) * g.at(xn - v, xn - yn - v);
      },
      xn, 1.5 * f.decay_radius, 6000);
  // The half-infinite integral starts on a kink, so the trapezoid carries an
  // O(h^2) endpoint term; check the value at that scale and the order by
  // refining.
  const BoundaryKernel l1 = leftover_l_hbar(f, g, 1.0);
  const Real err = std::abs(l1.at(xn, yn) - oracle);
  CHECK(err <= 5e-4);
  QuadratureSpec fine;
  fine.spacing = f.decay_radius / 1024.0;
  const BoundaryKernel l1f = leftover_l_hbar(f, g, 1.0, fine);
  const Real err_fine = std::abs(l1f.at(xn, yn) - oracle);
  CHECK(err_fine * 8.0 <= err);
}

TEST_CASE("leftover_l_hbar: difference to l vanishes linearly in hbar") {
  const Symbol f = make_symbol("gauss:a=1,b=0.5");
  const Symbol g = make_symbol("gauss:a=0.5,b=0.25,x0=1");
  const BoundaryKernel l0 = leftover_l(f, g);
  std::vector<Real> maxdiff;
  for (int k = 3; k <= 6; ++k) {
    const Real hbar = std::exp2(-k);
    const BoundaryKernel lh = leftover_l_hbar(f, g, hbar);
    Real m = 0.0;
    for (Real xn : {0.0, 0.5, 1.0, 2.0})
      for (Real yn : {0.0, 0.5, 1.0}) m = std::max(m, std::abs(lh.at(xn, yn) - l0.at(xn, yn)));
    maxdiff.push_back(m);
  }
  for (std::size_t i = 0; i + 1 < maxdiff.size(); ++i) {
    CHECK(maxdiff[i + 1] < maxdiff[i]);                    // decreasing
    CHECK(maxdiff[i] / maxdiff[i + 1] == doctest::Approx(2.0).epsilon(0.35));  // ~ O(hbar)
  }
}

TEST_CASE("conjugation distributes through the products") {
  const Symbol f = make_symbol("gauss:b=0.5,vphase=1.3");
  const Symbol g = make_symbol("gauss:a=1,b=1,vphase=-0.4");
  const Symbol conv = convolve_symbols(f, g);
  const Symbol conv_conj = convolve_symbols(conjugate(f), conjugate(g));
  const BoundaryKernel lef = leftover_l(f, g);
  const BoundaryKernel lef_conj = leftover_l(conjugate(f), conjugate(g));
  for (Real a : {0.0, 0.7})
    for (Real b : {-0.5, 1.0}) {
      CHECK(std::abs(std::conj(conv.at(a, b)) - conv_conj.at(a, b)) <= 1e-12);
      if (a >= 0.0 && b >= 0.0)
        CHECK(std::abs(std::conj(lef.at(a, b)) - lef_conj.at(a, b)) <= 1e-12);
    }
}

TEST_CASE("star_prime: components are the convolution and the leftover") {
  const Symbol f = make_symbol("gauss:b=0.5");
  const Symbol g = make_symbol("gauss:b=1");
  const TcElement p = star_prime(f, g);
  const Symbol conv = convolve_symbols(f, g);
  const BoundaryKernel lef = leftover_l(f, g);
  for (Real a : {0.0, 1.0})
    for (Real b : {0.0, 0.5}) {
      CHECK(std::abs(p.sym.at(a, b) - conv.at(a, b)) <= 1e-13);
      CHECK(std::abs(p.ker.at(a, b) - lef.at(a, b)) <= 1e-13);
    }
  const TcElement zp = star_prime(make_symbol("zero"), g);
  CHECK(zp.sym.zero);
  CHECK(zp.ker.zero);
}

TEST_CASE("products reject dimension mismatches and coarse quadrature") {
  const Symbol f1 = make_symbol("gauss:b=1");
  const Symbol f2 = make_symbol("gauss2:bt=1,bn=1");
  CHECK_THROWS_AS(convolve_symbols(f1, f2), Error);
  QuadratureSpec coarse;
  coarse.spacing = 4.0;
  CHECK_THROWS_AS(convolve_symbols(f1, f1, coarse), ResolutionError);
}
