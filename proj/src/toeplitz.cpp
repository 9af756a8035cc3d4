#include "semiclass/toeplitz.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SVD>
#include <json.hpp>

#include "semiclass/norms.hpp"
#include "semiclass/spectrum.hpp"

namespace semiclass {

CircleSymbol cayley_symbol(const Symbol& f, Index sample_count,
                           const QuadratureSpec& quad) {
  if (sample_count < 4 || sample_count % 2 != 0)
    throw Error("cayley_symbol: need an even sample count >= 4");
  if (!f.zero && f.dim != 1) throw Error("cayley_symbol: dim-1 fiber data required");

  CircleSymbol phi;
  phi.source = "cayley(" + f.label + ")";
  phi.samples = CVec::Zero(sample_count);
  if (f.zero) return phi;

  const Real h = quad.resolved_spacing(f.decay_radius);
  const Real sigma_cap = 0.5 * kPi / h;

  // The Moebius map sends z = e^{i theta} to the real frequency -tan(theta/2).
  std::vector<Real> freq;
  std::vector<Index> where;
  for (Index k = 0; k < sample_count; ++k) {
    if (2 * k == sample_count) continue;  // z = -1: phi fixed to 0
    const Real theta = 2.0 * kPi * Real(k) / Real(sample_count);
    const Real t = -std::tan(0.5 * theta);
    if (std::abs(t) > sigma_cap) continue;
    freq.push_back(t);
    where.push_back(k);
  }

  SpectrumGrid sg;
  sg.dim = 1;
  sg.base_nodes.push_back(point1(0.0));
  for (Real t : freq) sg.sigma_nodes.push_back(point1(t));
  // Decay guard: the clipped band must already be below threshold.
  sg.sigma_nodes.push_back(point1(sigma_cap));
  sg.sigma_nodes.push_back(point1(-sigma_cap));

  const SampledSpectrum spec = fiberwise_fourier(f, sg, quad);
  const Index m = Index(freq.size());
  if (std::abs(spec.samples(0, m)) > 1e-12 || std::abs(spec.samples(0, m + 1)) > 1e-12) {
    std::ostringstream os;
    os << "cayley_symbol: |fhat| = " << std::abs(spec.samples(0, m))
       << " at the Nyquist frequency " << sigma_cap
       << "; refine the quadrature spacing";
    throw ResolutionError(os.str());
  }
  for (Index i = 0; i < m; ++i) phi.samples(where[std::size_t(i)]) = spec.samples(0, i);
  return phi;
}

CircleSymbol constant_circle_symbol(Complex c, Index sample_count) {
  CircleSymbol phi;
  phi.source = "constant";
  phi.samples = CVec::Constant(sample_count, c);
  return phi;
}

CircleSymbol monomial_circle_symbol(int power, Index sample_count) {
  CircleSymbol phi;
  phi.source = "monomial";
  phi.samples = CVec::Zero(sample_count);
  for (Index k = 0; k < sample_count; ++k)
    phi.samples(k) = std::polar(1.0, 2.0 * kPi * Real(k * power) / Real(sample_count));
  return phi;
}

CMat ToeplitzMatrix::dense() const {
  CMat out(size, size);
  for (Index j = 0; j < size; ++j)
    for (Index k = 0; k < size; ++k) out(j, k) = (*this)(j, k);
  return out;
}

ToeplitzMatrix toeplitz_assemble(const CircleSymbol& phi, Index section_size) {
  const Index n = phi.size();
  if (section_size < 1 || section_size > n)
    throw Error("toeplitz_assemble: section size must lie in [1, sample count]");
  ToeplitzMatrix t;
  t.size = section_size;
  t.coeff = CVec::Zero(2 * section_size - 1);
  for (Index m = -(section_size - 1); m <= section_size - 1; ++m) {
    Complex acc(0.0);
    for (Index k = 0; k < n; ++k)
      acc += phi.samples(k) * std::polar(1.0, -2.0 * kPi * Real(k * m) / Real(n));
    t.coeff(m + section_size - 1) = acc / Real(n);
  }
  return t;
}

Real toeplitz_norm(const ToeplitzMatrix& t) {
  Eigen::BDCSVD<CMat> svd(t.dense());
  return svd.singularValues()(0);
}

Vec toeplitz_singular_values(const ToeplitzMatrix& t) {
  Eigen::BDCSVD<CMat> svd(t.dense());
  return svd.singularValues();
}

DiscreteOperator half_convolution_assemble(const Symbol& f, const HalfSpaceGrid& grid) {
  if (grid.dim != 1) throw Error("half_convolution_assemble: dim-1 data required");
  DiscreteOperator op = assemble_pi0_boundary(f, BoundaryKernel{}, grid);
  op.label = "halfconv(" + f.label + ")";
  return op;
}

Vec commutator_singular_values(const CircleSymbol& phi, const CircleSymbol& psi,
                               Index section_size) {
  const CMat a = toeplitz_assemble(phi, section_size).dense();
  const CMat b = toeplitz_assemble(psi, section_size).dense();
  const CMat c = a * b - b * a;
  Eigen::BDCSVD<CMat> svd(c);
  return svd.singularValues();
}

EquivalenceReport equivalence_report(const Symbol& f, const HalfSpaceGrid& grid,
                                     Index section_size, const QuadratureSpec& quad) {
  EquivalenceReport rep;
  rep.symbol_id = f.label;
  rep.section_size = section_size;

  const DiscreteOperator hc = half_convolution_assemble(f, grid);
  Eigen::BDCSVD<CMat> hsvd(weighted_matrix(hc));
  const Vec hs = hsvd.singularValues();

  const CircleSymbol phi = cayley_symbol(f, 4 * section_size, quad);
  rep.cayley_at_minus_one = std::abs(phi.at_minus_one());
  const ToeplitzMatrix t = toeplitz_assemble(phi, section_size);
  Eigen::BDCSVD<CMat> tsvd(t.dense());
  const Vec ts = tsvd.singularValues();

  rep.half_convolution_norm = hs.size() ? hs(0) : 0.0;
  rep.toeplitz_section_norm = ts.size() ? ts(0) : 0.0;
  const Real top = std::max(rep.half_convolution_norm, rep.toeplitz_section_norm);
  rep.norm_gap_rel =
      top > 0.0 ? std::abs(rep.half_convolution_norm - rep.toeplitz_section_norm) / top
                : 0.0;

  const Index keep = std::min<Index>({10, hs.size(), ts.size()});
  rep.leading_singular_half = hs.head(keep);
  rep.leading_singular_toeplitz = ts.head(keep);
  for (Index i = 0; i < keep; ++i) {
    const Real gap = top > 0.0 ? std::abs(hs(i) - ts(i)) / top : 0.0;
    rep.max_singular_gap_rel = std::max(rep.max_singular_gap_rel, gap);
  }
  return rep;
}

std::string to_json(const EquivalenceReport& report) {
  nlohmann::ordered_json j;
  j["symbol"] = report.symbol_id;
  j["section_size"] = report.section_size;
  j["half_convolution_norm"] = report.half_convolution_norm;
  j["toeplitz_section_norm"] = report.toeplitz_section_norm;
  j["norm_gap_rel"] = report.norm_gap_rel;
  j["cayley_at_minus_one"] = report.cayley_at_minus_one;
  j["singular_values_half"] = std::vector<Real>(
      report.leading_singular_half.data(),
      report.leading_singular_half.data() + report.leading_singular_half.size());
  j["singular_values_toeplitz"] = std::vector<Real>(
      report.leading_singular_toeplitz.data(),
      report.leading_singular_toeplitz.data() + report.leading_singular_toeplitz.size());
  j["max_singular_gap_rel"] = report.max_singular_gap_rel;
  return j.dump(2);
}

}  // namespace semiclass
