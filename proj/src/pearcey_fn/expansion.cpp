#include <cmath>
#include <map>

#include "pearcey/pearcey_fn.hpp"

namespace pearcey {

namespace {

// Laurent polynomial in u = z^{1/3}
using Laurent = std::map<int, cplx>;

Laurent derivative_u(const Laurent& l) {
  Laurent out;
  for (auto [n, c] : l)
    if (n != 0) out[n - 1] += c * static_cast<double>(n);
  return out;
}

// d/dz of e^{theta(u)} L(u) divided by e^{theta(u)}, theta = alpha u^4 + beta u^2
Laurent derivative_z(const Laurent& l, cplx alpha, cplx beta) {
  Laurent out = derivative_u(l);
  for (auto [n, c] : l) {
    out[n + 3] += 4.0 * alpha * c;
    out[n + 1] += 2.0 * beta * c;
  }
  Laurent scaled;
  for (auto [n, c] : out) scaled[n - 2] += c / 3.0;
  return scaled;
}

cplx eval(const Laurent& l, cplx u) {
  cplx acc = 0.0;
  for (auto [n, c] : l) acc += c * std::pow(u, n);
  return acc;
}

}  // namespace

KappaCoeffs kappa_coeffs(PearceyParams params) {
  double r = params.rho, r2 = r * r;
  KappaCoeffs k;
  k.kappa3 = r2 * r / 54.0 - r / 6.0;
  k.kappa6 = r2 * r2 * r2 / 5832.0 - r2 * r2 / 162.0 - r2 / 72.0 + 7.0 / 36.0;
  k.kappa6_tilde = k.kappa6 + r / 3.0 * k.kappa3 - 1.0 / 3.0;
  k.kappa6_hat = k.kappa6 - k.kappa3 * k.kappa3 + r2 / 9.0 - 1.0 / 3.0;
  return k;
}

cplx AsymptoticFrame::theta(int k, cplx z) const {
  cplx z23 = std::pow(z, 2.0 / 3.0);
  return 0.75 * std::pow(kOmega, 2 * k) * z23 * z23 + 0.5 * rho * std::pow(kOmega, k) * z23;
}

AsymptoticFrame asymptotic_frame(PearceyParams params) {
  KappaCoeffs k = kappa_coeffs(params);
  double r = params.rho;
  AsymptoticFrame f;
  f.rho = r;
  f.psi0 << 1, 0, 0, 0, 1, 0, k.kappa3 + 2.0 * r / 3.0, 0, 1;
  f.psi1 << 0, k.kappa3, 0, k.kappa6_tilde, 0, k.kappa3 + r / 3.0, 0, k.kappa6_hat, 0;
  cplx w = kOmega, w2 = kOmega * kOmega;
  f.l_plus << -w, w2, 1, -1, 1, 1, -w2, w, 1;
  f.l_minus << w2, w, 1, 1, 1, 1, w, w2, 1;
  return f;
}

PearceyTriple pearcey_asymptotic(int j, cplx z, PearceyParams params, bool with_kappa6) {
  KappaCoeffs kc = kappa_coeffs(params);
  const cplx amp = std::sqrt(2.0 * kPi / 3.0) * kI * std::exp(params.rho * params.rho / 6.0);
  const cplx w = kOmega;
  cplx pre, om, om2;
  int k;
  double lo;  // arg z is taken in (lo, lo + 2 pi]
  switch (j) {
    case 0:
      if (z.imag() > 0) {
        pre = -amp * w, k = 1, om = w, om2 = w * w;
      } else if (z.imag() < 0) {
        pre = amp * w * w, k = 2, om = w * w, om2 = std::pow(w, 4);
      } else {
        throw DomainError("pearcey_asymptotic: p0 needs Im z != 0");
      }
      lo = -kPi;
      break;
    case 1:
      pre = amp * w * w, k = 2, om = w * w, om2 = std::pow(w, 4), lo = -0.75 * kPi;
      break;
    case 4:
      pre = amp, k = 3, om = 1.0, om2 = 1.0, lo = -0.25 * kPi;
      break;
    default:
      throw DomainError("pearcey_asymptotic: only j in {0, 1, 4}");
  }
  cplx u = pow_branch(z, 1.0 / 3.0, lo);
  cplx alpha = 0.75 * std::pow(w, 2 * k), beta = 0.5 * params.rho * std::pow(w, k);
  Laurent l0{{-1, pre}, {-3, pre * kc.kappa3 / om}};
  if (with_kappa6) l0[-5] = pre * kc.kappa6 / om2;
  Laurent l1 = derivative_z(l0, alpha, beta);
  Laurent l2 = derivative_z(l1, alpha, beta);
  cplx u2 = u * u;
  cplx e = std::exp(alpha * u2 * u2 + beta * u2);
  return {e * eval(l0, u), e * eval(l1, u), e * eval(l2, u)};
}

}  // namespace pearcey
