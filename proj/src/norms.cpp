#include "semiclass/norms.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/SVD>

namespace semiclass {

namespace {

constexpr Index kSvdNodeLimit = 2048;
constexpr std::uint64_t kPowerSeed = 0x5eedc0de2024ULL;

NormEstimate svd_norm(const CMat& s) {
  NormEstimate est;
  est.method = NormMethod::kSvd;
  if (s.size() == 0) return est;
  Eigen::BDCSVD<CMat> svd(s);
  est.value = svd.singularValues()(0);
  return est;
}

NormEstimate power_norm(const CMat& s, Real tol, int max_iterations) {
  NormEstimate est;
  est.method = NormMethod::kPower;
  const Index n = s.rows();

  std::mt19937_64 gen(kPowerSeed);
  std::uniform_real_distribution<Real> dist(-1.0, 1.0);
  CVec v(n);
  for (Index i = 0; i < n; ++i) v(i) = Complex(dist(gen), dist(gen));
  v.normalize();

  Real lambda = 0.0;
  int settled = 0;
  for (int it = 1; it <= max_iterations; ++it) {
    CVec u = s * v;
    const Real next = u.squaredNorm();  // Rayleigh quotient of S^H S at v
    if (next == 0.0) {
      est.iterations = it;
      est.value = 0.0;
      return est;
    }
    const Real increment = std::abs(next - lambda) / next;
    lambda = next;
    est.iterations = it;
    est.residual = increment;
    if (increment < tol) {
      if (++settled >= 3) {
        est.value = std::sqrt(lambda);
        return est;
      }
    } else {
      settled = 0;
    }
    v = s.adjoint() * u;
    v.normalize();
  }
  std::ostringstream os;
  os << "operator_norm: power iteration did not converge within " << max_iterations
     << " iterations (last residual " << est.residual << ", value "
     << std::sqrt(lambda) << ")";
  throw ConvergenceError(os.str());
}

}  // namespace

NormEstimate operator_norm(const DiscreteOperator& a, NormMethod method, Real tol,
                           int max_iterations) {
  if (!(tol > 0.0)) throw Error("operator_norm: tol must be positive");
  const CMat s = weighted_matrix(a);
  if (method == NormMethod::kAuto)
    method = a.size() <= kSvdNodeLimit ? NormMethod::kSvd : NormMethod::kPower;
  return method == NormMethod::kSvd ? svd_norm(s) : power_norm(s, tol, max_iterations);
}

const char* norm_method_name(NormMethod m) {
  switch (m) {
    case NormMethod::kAuto: return "auto";
    case NormMethod::kSvd: return "svd";
    case NormMethod::kPower: return "power-iteration";
  }
  return "?";
}

}  // namespace semiclass
