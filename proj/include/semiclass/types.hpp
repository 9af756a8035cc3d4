#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace semiclass {

using Real = double;
using Complex = std::complex<Real>;
using Index = Eigen::Index;

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

/// Point in the (tangential, normal) plane; dim-1 data keeps the
/// tangential slot at zero.
using Point = Eigen::Vector2d;

inline Point point1(Real normal) { return Point(0.0, normal); }
inline Point point2(Real tangential, Real normal) { return Point(tangential, normal); }

/// Magnitudes below this are treated as numerically absent; decay radii
/// of catalogue entries are derived from it.
inline constexpr Real kDecayFloor = 1e-14;

inline constexpr Real kPi = 3.14159265358979323846;
inline constexpr Real kSqrt2Pi = 2.5066282746310005024;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A grid or quadrature is too coarse for the requested evaluation.
/// The message names the admissible resolution.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Iterative norm estimation did not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace semiclass
