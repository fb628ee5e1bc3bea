#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pearcey {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};
// e^{2 pi i / 3}
inline const cplx kOmega = std::polar(1.0, 2.0 * kPi / 3.0);

struct PearceyParams {
  double rho = 0.0;
};

// Precondition violations: bad index, point on a branch cut or ray, etc.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failure that carries whatever error estimate was reached.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

inline double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

// z^a with arg z taken in (lo, lo + 2 pi]
inline cplx pow_branch(cplx z, double a, double lo) {
  double t = std::arg(z);
  while (t <= lo) t += 2.0 * kPi;
  while (t > lo + 2.0 * kPi) t -= 2.0 * kPi;
  return std::polar(std::pow(std::abs(z), a), a * t);
}

}  // namespace pearcey
