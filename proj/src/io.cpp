#include "semiclass/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace semiclass {

std::string format_real(Real x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_spectrum_csv(const SampledSpectrum& spectrum, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  const bool flat = spectrum.grid.dim == 1;
  out << (flat ? "x,sigma,re,im\n" : "x_t,x_n,sigma_t,sigma_n,re,im\n");
  for (Index b = 0; b < spectrum.samples.rows(); ++b) {
    const Point& x = spectrum.grid.base_nodes[std::size_t(b)];
    for (Index s = 0; s < spectrum.samples.cols(); ++s) {
      const Point& sig = spectrum.grid.sigma_nodes[std::size_t(s)];
      const Complex val = spectrum.samples(b, s);
      if (flat) {
        out << format_real(x(1)) << ',' << format_real(sig(1));
      } else {
        out << format_real(x(0)) << ',' << format_real(x(1)) << ','
            << format_real(sig(0)) << ',' << format_real(sig(1));
      }
      out << ',' << format_real(val.real()) << ',' << format_real(val.imag()) << '\n';
    }
  }
  if (!out) throw IoError("failed while writing '" + path + "'");
}

namespace {

constexpr char kMagic[4] = {'S', 'C', 'O', 'P'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T take(std::ifstream& in, const std::string& path) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) throw IoError("truncated operator dump '" + path + "'");
  return v;
}

}  // namespace

void write_operator_binary(const DiscreteOperator& op, const std::string& path) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(kMagic, 4);
  put(out, kVersion);
  put(out, std::uint64_t(op.kernel.rows()));
  put(out, std::uint64_t(op.kernel.cols()));
  for (Index i = 0; i < op.kernel.rows(); ++i)
    for (Index j = 0; j < op.kernel.cols(); ++j) {
      put(out, op.kernel(i, j).real());
      put(out, op.kernel(i, j).imag());
    }
  if (!out) throw IoError("failed while writing '" + path + "'");
}

CMat read_operator_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw IoError("'" + path + "' is not an operator dump");
  const auto version = take<std::uint32_t>(in, path);
  if (version != kVersion) throw IoError("unsupported operator dump version");
  const Index rows = Index(take<std::uint64_t>(in, path));
  const Index cols = Index(take<std::uint64_t>(in, path));
  CMat m{rows, cols};
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const Real re = take<Real>(in, path);
      const Real im = take<Real>(in, path);
      m(i, j) = Complex(re, im);
    }
  return m;
}

}  // namespace semiclass
