#pragma once

#include "semiclass/operators.hpp"

namespace semiclass {

enum class NormMethod { kAuto, kSvd, kPower };

struct NormEstimate {
  Real value = 0.0;
  NormMethod method = NormMethod::kSvd;
  int iterations = 0;
  Real residual = 0.0;  // relative Rayleigh-quotient increment at termination
};

/// Largest singular value of W^{1/2} K W^{1/2}, the operator norm on the
/// weighted discrete L^2 space. kAuto takes the dense SVD up to 2048 nodes
/// and power iteration beyond. Power iteration runs on A*A from a fixed
/// deterministic start vector and stops once the relative Rayleigh
/// increment stays below tol; non-convergence within max_iterations throws
/// ConvergenceError carrying the last residual.
NormEstimate operator_norm(const DiscreteOperator& a, NormMethod method = NormMethod::kAuto,
                           Real tol = 1e-8, int max_iterations = 5000);

const char* norm_method_name(NormMethod m);

}  // namespace semiclass
