#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "semiclass/norms.hpp"

using namespace semiclass;

namespace {

DiscreteOperator with_unit_weights(CMat kernel) {
  DiscreteOperator op;
  op.weights = Vec::Ones(kernel.rows());
  op.kernel = std::move(kernel);
  op.label = "raw";
  return op;
}

}  // namespace

TEST_CASE("diagonal matrix with unit weights") {
  CMat k = CMat::Zero(3, 3);
  k(0, 0) = 1.0;
  k(1, 1) = -3.0;
  k(2, 2) = 2.0;
  const auto est = operator_norm(with_unit_weights(k));
  CHECK(est.value == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(est.method == NormMethod::kSvd);
}

TEST_CASE("rank-one a b^* has norm ||a|| ||b||") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<Real> dist(-1.0, 1.0);
  CVec a(40), b(40);
  for (Index i = 0; i < 40; ++i) {
    a(i) = Complex(dist(gen), dist(gen));
    b(i) = Complex(dist(gen), dist(gen));
  }
  const CMat k = a * b.adjoint();
  const Real expected = a.norm() * b.norm();
  CHECK(operator_norm(with_unit_weights(k), NormMethod::kSvd).value ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(operator_norm(with_unit_weights(k), NormMethod::kPower, 1e-12, 100).value ==
        doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("power iteration matches the SVD on a random 200x200 matrix") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<Real> dist(-1.0, 1.0);
  CMat k(200, 200);
  for (Index i = 0; i < 200; ++i)
    for (Index j = 0; j < 200; ++j) k(i, j) = Complex(dist(gen), dist(gen));
  const Real svd = operator_norm(with_unit_weights(k), NormMethod::kSvd).value;
  const auto power = operator_norm(with_unit_weights(k), NormMethod::kPower, 1e-12, 5000);
  CHECK(std::abs(power.value - svd) <= 1e-6 * svd);
  CHECK(power.iterations > 0);
  CHECK(power.residual <= 1e-12);
}

TEST_CASE("power iteration is deterministic") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<Real> dist(-1.0, 1.0);
  CMat k(64, 64);
  for (Index i = 0; i < 64; ++i)
    for (Index j = 0; j < 64; ++j) k(i, j) = Complex(dist(gen), dist(gen));
  const auto a = operator_norm(with_unit_weights(k), NormMethod::kPower, 1e-10, 5000);
  const auto b = operator_norm(with_unit_weights(k), NormMethod::kPower, 1e-10, 5000);
  CHECK(a.value == b.value);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("zero operator has zero norm under both methods") {
  const CMat k = CMat::Zero(16, 16);
  CHECK(operator_norm(with_unit_weights(k), NormMethod::kSvd).value == 0.0);
  CHECK(operator_norm(with_unit_weights(k), NormMethod::kPower).value == 0.0);
}

TEST_CASE("non-convergence reports the last residual") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<Real> dist(-1.0, 1.0);
  CMat k(50, 50);
  for (Index i = 0; i < 50; ++i)
    for (Index j = 0; j < 50; ++j) k(i, j) = Complex(dist(gen), dist(gen));
  CHECK_THROWS_AS(operator_norm(with_unit_weights(k), NormMethod::kPower, 1e-15, 2),
                  ConvergenceError);
  try {
    operator_norm(with_unit_weights(k), NormMethod::kPower, 1e-15, 2);
  } catch (const ConvergenceError& e) {
    CHECK(std::string(e.what()).find("residual") != std::string::npos);
  }
  CHECK_THROWS_AS(operator_norm(with_unit_weights(k), NormMethod::kSvd, 0.0), Error);
}

TEST_CASE("weights enter the norm as W^(1/2) K W^(1/2)") {
  // Multiplication by m on a weighted space has norm max |m| regardless of
  // the weights.
  DiscreteOperator op;
  op.weights = Vec::Zero(4);
  op.weights << 0.5, 1.0, 1.0, 0.5;
  op.kernel = CMat::Zero(4, 4);
  const Real m[4] = {0.2, -1.7, 0.4, 1.0};
  for (Index i = 0; i < 4; ++i) op.kernel(i, i) = m[i] / op.weights(i);
  CHECK(operator_norm(op).value == doctest::Approx(1.7).epsilon(1e-14));
}
