#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <string>

#include "semiclass/io.hpp"
#include "semiclass/spectrum.hpp"
#include "semiclass/symbol.hpp"

using namespace semiclass;

namespace {

constexpr Real kSqrtPi = 1.7724538509055160273;

std::vector<Real> uniform(Real lo, Real hi, Index n) {
  std::vector<Real> out;
  for (Index i = 0; i < n; ++i) out.push_back(lo + Real(i) * (hi - lo) / Real(n - 1));
  return out;
}

}  // namespace

TEST_CASE("catalogue: gaussian entry evaluates and decays") {
  const Symbol f = make_symbol("gauss:a=1,b=0.5");
  CHECK(!f.zero);
  CHECK(f.at(0.0, 0.0) == Complex(1.0));
  CHECK(std::abs(f.at(1.0, 2.0)) ==
        doctest::Approx(std::exp(-1.0 - 0.5 * 4.0)).epsilon(1e-14));
  CHECK(std::abs(f.at(0.0, f.decay_radius)) < kDecayFloor * 1.0001);
}

TEST_CASE("catalogue: bump has compact support") {
  const Symbol f = make_symbol("bump:w=8");
  CHECK(f.at(3.0, 0.0) == Complex(1.0));  // x-independent, peak value e^(1-1) = 1
  CHECK(f.at(0.0, 8.0) == Complex(0.0));
  CHECK(f.at(0.0, 9.0) == Complex(0.0));
  CHECK(f.decay_radius == 8.0);
}

TEST_CASE("catalogue: rank-one kernel factorizes") {
  const BoundaryKernel k = make_kernel("rank1:as=1,ac=1,bs=1,bc=1");
  const Real a = std::exp(-(2.0 - 1.0) * (2.0 - 1.0));
  const Real b = std::exp(-(0.5 - 1.0) * (0.5 - 1.0));
  CHECK(k.at(2.0, 0.5).real() == doctest::Approx(a * b).epsilon(1e-14));
}

TEST_CASE("catalogue: ids reject typos") {
  CHECK_THROWS_AS(make_symbol("gauss:q=1"), ConfigError);
  CHECK_THROWS_AS(make_symbol("gauss:a"), ConfigError);
  CHECK_THROWS_AS(make_symbol("gauss:a=x"), ConfigError);
  CHECK_THROWS_AS(make_symbol("gaussian:a=1"), ConfigError);
  CHECK_THROWS_AS(make_kernel("rank2:as=1"), ConfigError);
}

TEST_CASE("fiberwise_fourier: zero symbol gives zero spectrum") {
  const SpectrumGrid sg = spectrum_line({0.0, 1.0}, 4.0, 9);
  const SampledSpectrum s = fiberwise_fourier(make_symbol("zero"), sg);
  CHECK(symbol_sup_norm(s) == 0.0);
}

TEST_CASE("fiberwise_fourier: gaussian closed form") {
  // f(v) = exp(-v^2/2) has fhat(sigma) = sqrt(2 pi) exp(-sigma^2/2).
  const Symbol f = make_symbol("gauss:b=0.5");
  const SpectrumGrid sg = spectrum_line({0.0}, 4.0, 129);
  QuadratureSpec quad;
  quad.spacing = 1.0 / 32.0;
  quad.box_radius = 8.0;
  const SampledSpectrum s = fiberwise_fourier(f, sg, quad);
  Real max_err = 0.0;
  for (Index k = 0; k < s.samples.cols(); ++k) {
    const Real sigma = sg.sigma_nodes[std::size_t(k)](1);
    const Real expected = kSqrt2Pi * std::exp(-0.5 * sigma * sigma);
    max_err = std::max(max_err, std::abs(s.samples(0, k) - Complex(expected)));
  }
  CHECK(max_err <= 1e-8);
}

TEST_CASE("fiberwise_fourier: sup tracks the base profile") {
  // f(x,v) = e^{-v^2/2} / (1+x^2): sup |fhat| = sqrt(2 pi) at x = 0.
  Symbol f;
  f.dim = 1;
  f.label = "lorentz-gauss";
  f.zero = false;
  f.decay_radius = 8.1;
  f.eval_fn = [](const Point& x, const Point& v) {
    return Complex(std::exp(-0.5 * v(1) * v(1)) / (1.0 + x(1) * x(1)));
  };
  const SpectrumGrid sg = spectrum_line(uniform(-4.0, 4.0, 33), 4.0, 65);
  CHECK(symbol_sup_norm(fiberwise_fourier(f, sg)) ==
        doctest::Approx(kSqrt2Pi).epsilon(1e-10));
}

TEST_CASE("fiberwise_fourier: nyquist violation names the required spacing") {
  const Symbol f = make_symbol("gauss:b=0.5");
  const SpectrumGrid sg = spectrum_line({0.0}, 400.0, 9);
  QuadratureSpec quad;
  quad.spacing = 0.25;
  CHECK_THROWS_AS(fiberwise_fourier(f, sg, quad), ResolutionError);
  try {
    fiberwise_fourier(f, sg, quad);
  } catch (const ResolutionError& e) {
    CHECK(std::string(e.what()).find("required spacing") != std::string::npos);
  }
}

TEST_CASE("fiberwise_fourier: vphase shifts the spectrum") {
  // e^{i c v} f(v) has transform fhat(sigma - c).
  const Symbol f = make_symbol("gauss:b=0.5,vphase=1");
  const SpectrumGrid sg = spectrum_line({0.0}, 4.0, 33);
  const SampledSpectrum s = fiberwise_fourier(f, sg);
  for (Index k = 0; k < s.samples.cols(); ++k) {
    const Real sigma = sg.sigma_nodes[std::size_t(k)](1);
    const Real expected = kSqrt2Pi * std::exp(-0.5 * (sigma - 1.0) * (sigma - 1.0));
    CHECK(std::abs(s.samples(0, k)) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("fiberwise_fourier: dim 2 separable gaussian") {
  const Symbol f = make_symbol("gauss2:bt=1,bn=1");
  SpectrumGrid sg;
  sg.dim = 2;
  sg.base_nodes.push_back(point2(0.0, 0.0));
  for (Real st : {-1.0, 0.0, 2.0})
    for (Real sn : {0.0, 1.0}) sg.sigma_nodes.push_back(point2(st, sn));
  QuadratureSpec quad;
  quad.spacing = 1.0 / 16.0;
  const SampledSpectrum s = fiberwise_fourier(f, sg, quad);
  for (std::size_t k = 0; k < sg.sigma_nodes.size(); ++k) {
    const Point& sig = sg.sigma_nodes[k];
    const Real expected =
        kSqrtPi * kSqrtPi * std::exp(-0.25 * (sig(0) * sig(0) + sig(1) * sig(1)));
    CHECK(std::abs(s.samples(0, Index(k))) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("symbol_sup_norm: constant-modulus samples") {
  SampledSpectrum s;
  s.grid = spectrum_line({0.0}, 1.0, 5);
  s.samples = CMat::Constant(1, 5, Complex(0.0, 0.7));
  CHECK(symbol_sup_norm(s) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("spectrum invariant: samples match an independent quadrature") {
  const Symbol f = make_symbol("gauss:a=0.5,b=0.25,x0=1");
  const SpectrumGrid sg = spectrum_line({0.5}, 2.0, 7);
  const SampledSpectrum s = fiberwise_fourier(f, sg);
  // Composite Simpson on the same box, written independently.
  const Real R = 1.5 * f.decay_radius;
  const Index n = 4096;
  const Real h = 2.0 * R / Real(n);
  for (std::size_t k = 0; k < sg.sigma_nodes.size(); ++k) {
    const Real sigma = sg.sigma_nodes[k](1);
    Complex acc(0.0);
    for (Index i = 0; i <= n; ++i) {
      const Real v = -R + Real(i) * h;
      const Real c = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      acc += c * f.at(0.5, v) * std::polar(1.0, -v * sigma);
    }
    acc *= h / 3.0;
    CHECK(std::abs(s.samples(0, Index(k)) - acc) <= 1e-10);
  }
}

TEST_CASE("spectrum csv export is stable and complete") {
  const Symbol f = make_symbol("gauss:b=1");
  const SpectrumGrid sg = spectrum_line({0.0, 1.0}, 2.0, 3);
  const SampledSpectrum s = fiberwise_fourier(f, sg);
  const std::string path = "spectrum_test.csv";
  write_spectrum_csv(s, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,sigma,re,im");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 6);
}
