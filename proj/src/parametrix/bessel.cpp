#include "pearcey/bessel.hpp"

#include <cmath>

namespace pearcey {

namespace {

bool is_integer(double nu) { return std::abs(nu - std::round(nu)) < 1e-14; }

// e^{-z} I_n(z) = (1/pi) int_0^pi e^{z(cos t - 1)} cos(n t) dt; the
// trapezoid rule is spectrally accurate for this periodic integrand.
cplx i_scaled_integer(int n, cplx z) {
  const int m = 48 + static_cast<int>(1.5 * std::abs(z));
  cplx sum = 0.5 * (std::exp(z * 0.0) + std::exp(-2.0 * z) * ((n % 2) ? -1.0 : 1.0));
  for (int k = 1; k < m; ++k) {
    double t = kPi * k / m;
    sum += std::exp(z * (std::cos(t) - 1.0)) * std::cos(n * t);
  }
  return sum / static_cast<double>(m);
}

cplx i_series(double nu, cplx z) {
  cplx q = 0.25 * z * z;
  cplx term = std::pow(0.5 * z, nu) / std::tgamma(nu + 1.0);
  cplx sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Hankel expansion of e^{-z} I_nu(z), both exponentials kept.
cplx i_scaled_hankel(double nu, cplx z) {
  const double mu = 4.0 * nu * nu;
  cplx s1 = 1.0, s2 = 1.0, a = 1.0;
  double last = 1e300;
  for (int k = 1; k < 200; ++k) {
    a *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k) / z;
    if (std::abs(a) > last) break;
    last = std::abs(a);
    s1 += (k % 2 ? -1.0 : 1.0) * a;
    s2 += a;
    if (last < 1e-17) break;
  }
  const double sg = z.imag() >= 0 ? 1.0 : -1.0;
  cplx pre = 1.0 / std::sqrt(2.0 * kPi * z);
  return pre * (s1 + sg * kI * std::exp(sg * kI * kPi * nu) * std::exp(-2.0 * z) * s2);
}


// e^{z} K_nu(z) = sqrt(pi) (z/2)^nu / Gamma(nu + 1/2) int_0^inf e^{-z tau}
// (tau (2 + tau))^{nu - 1/2} d tau. The path is rotated onto e^{-i arg z} R+
// and scaled by |z| so the exponential is e^{-sigma}; exp-sinh quadrature.
// Valid for |arg z| < pi: 2 + tau e^{-i arg z} never crosses the negative axis.
cplx k_scaled(double nu, cplx z) {
  nu = std::abs(nu);
  const double phi = std::arg(z), r = std::abs(z);
  const cplx rot = std::polar(1.0, -phi);
  const double h = 1.0 / 32.0;
  cplx sum = 0.0;
  for (int k = -192; k <= 160; ++k) {
    double t = k * h;
    double sigma = std::exp(0.5 * kPi * std::sinh(t));
    if (sigma == 0.0 || sigma > 750.0) continue;
    double tau = sigma / r;
    double jac = sigma * 0.5 * kPi * std::cosh(t) / r;
    sum += std::exp(-sigma) * std::pow(tau, nu - 0.5) * std::pow(2.0 + tau * rot, nu - 0.5) * jac;
  }
  sum *= h * std::polar(1.0, -phi * (nu + 0.5));
  return std::sqrt(kPi) * std::pow(0.5 * z, nu) / std::tgamma(nu + 0.5) * sum;
}

// e^{-z} I_nu(z) from K at z and -z, used where the power series cancels.
// Needs Re z >= 0 and Im z != 0.
cplx i_scaled_connection(double nu, cplx z) {
  const double sg = z.imag() > 0 ? 1.0 : -1.0;
  cplx k_minus = k_scaled(nu, -z);                  // e^{-z} K(-z)
  cplx k_plus = k_scaled(nu, z) * std::exp(-2.0 * z);  // e^{-z} K(z)
  return sg * (k_minus - std::exp(sg * kI * kPi * nu) * k_plus) / (kPi * kI);
}

cplx i_scaled(double nu, cplx z) {
  if (is_integer(nu)) nu = std::abs(std::round(nu));
  // the series loses about (|z| - Re z) / ln 10 digits
  if (std::abs(z) <= 20.0 && std::abs(z) - z.real() <= 6.0) return i_series(nu, z) * std::exp(-z);
  if (is_integer(nu)) return i_scaled_integer(static_cast<int>(nu), z);
  if (std::abs(z) > 20.0) return i_scaled_hankel(nu, z);
  return i_scaled_connection(nu, z);
}

void check_args(double alpha, cplx zeta) {
  if (std::abs(alpha) > 1.0 + 1e-14) throw DomainError("modified_bessel: |alpha| must be <= 1");
  if (zeta == cplx(0.0, 0.0)) throw DomainError("modified_bessel: zeta = 0");
  if (zeta.imag() == 0.0 && zeta.real() < 0.0)
    throw DomainError("modified_bessel: zeta on the negative axis");
}

}  // namespace

BesselPair modified_bessel_scaled(double alpha, cplx zeta) {
  check_args(alpha, zeta);
  if (zeta.real() < 0.0) throw DomainError("modified_bessel_scaled: needs Re zeta >= 0");
  BesselPair b;
  b.i_val = i_scaled(alpha, zeta);
  b.k_val = k_scaled(alpha, zeta);
  b.di_val = i_scaled(alpha + 1.0, zeta) + alpha / zeta * b.i_val;
  b.dk_val = -k_scaled(alpha + 1.0, zeta) + alpha / zeta * b.k_val;
  return b;
}

BesselPair modified_bessel(double alpha, cplx zeta) {
  check_args(alpha, zeta);
  if (zeta.real() >= 0.0) {
    BesselPair b = modified_bessel_scaled(alpha, zeta);
    cplx ep = std::exp(zeta), em = std::exp(-zeta);
    return {b.i_val * ep, b.k_val * em, b.di_val * ep, b.dk_val * em};
  }
  // Re zeta < 0: reflect through xi = -zeta, zeta = xi e^{m pi i}
  const cplx xi = -zeta;
  const double m = zeta.imag() > 0 ? 1.0 : -1.0;
  BesselPair b = modified_bessel(alpha, xi);
  const cplx e = std::exp(kI * (m * alpha * kPi));
  BesselPair out;
  // I_nu(xi e^{m pi i}) = e^{m nu pi i} I_nu(xi)
  out.i_val = e * b.i_val;
  out.di_val = -e * b.di_val;
  // K_nu(xi e^{m pi i}) = e^{-m nu pi i} K_nu(xi) - m pi i I_nu(xi)
  out.k_val = b.k_val / e - m * kPi * kI * b.i_val;
  out.dk_val = -(b.dk_val / e - m * kPi * kI * b.di_val);
  return out;
}

}  // namespace pearcey
