#include "checks.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <mutex>

#include "pearcey/asymptotics.hpp"
#include "pearcey/fredholm.hpp"
#include "pearcey/kernel.hpp"
#include "pearcey/parametrix.hpp"
#include "pearcey/pearcey_fn.hpp"
#include "pearcey/surface.hpp"

namespace pearcey::checks {

namespace {

using Samples = std::vector<GapSample>;

// F at s = 4..8, m = 100, shared by the criterion-3 checks
const Samples& large_gap_samples(double rho) {
  static std::mutex mu;
  static std::map<double, Samples> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rho);
  if (it != cache.end()) return it->second;
  Samples v;
  for (double s : {4.0, 5.0, 6.0, 7.0, 8.0})
    v.push_back({s, fredholm_logdet(s, PearceyParams{rho}, 100, false).F});
  return cache.emplace(rho, v).first->second;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---- pearcey_fn ----

double psi_jump_residual(int k) {
  const PearceyParams prm{0.7};
  const int plus = psi_ray_orientation(k) > 0 ? k : (k + 5) % 6;
  const int minus = psi_ray_orientation(k) > 0 ? (k + 5) % 6 : k;
  double worst = 0.0;
  for (double r : {0.5, 2.0, 5.0}) {
    const cplx z = std::polar(r, psi_ray_angle(k));
    const Mat3 mp = psi_in_sector(plus, z, prm), mm = psi_in_sector(minus, z, prm);
    worst = std::max(worst, max_abs(Mat3(mp - mm * psi_jump(k))) / (1.0 + max_abs(mm)));
  }
  return worst;
}

double ode_residual_max() {
  const cplx zs[] = {{0, 0}, {3, 0}, {-1, 1}, {0, 5}, {7, -7}, {-9.5, 0}, {4, 6}};
  double worst = 0.0;
  for (double rho : {-4.0, 0.0, 2.5, 4.0})
    for (int j = 0; j < 6; ++j)
      for (cplx z : zs) {
        const cplx p = pearcey_p(j, z, {rho}).p;
        worst = std::max(worst, std::abs(ode_residual(j, z, {rho})) / (1.0 + std::abs(p)));
      }
  return worst;
}

double wronskian_spread() {
  const cplx zs[] = {{0, 0}, {2, 0}, {-1.5, 1}, {0, 3}, {4, -2}};
  double worst = 0.0;
  for (double rho : {0.0, 1.0, -2.0}) {
    const cplx ref = psi_tilde(zs[0], {rho}).determinant();
    for (cplx z : zs)
      worst = std::max(worst, std::abs(psi_tilde(z, {rho}).determinant() - ref) / std::abs(ref));
  }
  return worst;
}

double frame_slope(int j, double angle, double rho) {
  std::vector<double> x, y;
  for (double r : {15.0, 30.0, 60.0}) {
    const cplx z = std::polar(r, angle);
    const cplx p = pearcey_p(j, z, {rho}).p;
    const cplx a = pearcey_asymptotic(j, z, {rho}).p;
    x.push_back(std::log(r));
    y.push_back(std::log(std::abs(a - p) / std::abs(p)));
  }
  return slope(x, y);
}

// ---- kernel ----

double kernel_agreement(double rho) {
  double worst = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      const double x = -3.0 + 1.5 * i, y = -3.0 + 1.5 * j;
      const double k = kernel_bh(x, y, {rho});
      worst = std::max(worst, std::abs(k - kernel_rh(x, y, {rho}).value) / (1.0 + std::abs(k)));
    }
  return worst;
}

// ---- surface ----

double vieta_max() {
  const cplx zs[] = {{0.2, 0.3}, {-2, 1}, {5, -3}, {-0.5, -2}, {0.9, 0.01}, {0, -40}};
  double worst = 0.0;
  for (cplx z : zs) {
    const cplx a = w(1, z), b = w(2, z), c = w(3, z);
    worst = std::max({worst, std::abs(a + b + c), std::abs(a * b + b * c + c * a + 3.0),
                      std::abs(a * b * c + 2.0 * z) / (1.0 + std::abs(z))});
  }
  return worst;
}

double sum_lambda_residual() {
  double worst = 0.0;
  for (double s : {2.0, 5.0})
    for (double rho : {0.0, 1.5}) {
      const cplx z(0.2, 0.3);
      const cplx sum = lambda(1, z, s, {rho}) + lambda(2, z, s, {rho}) + lambda(3, z, s, {rho});
      const double closed = -9.0 / std::pow(2.0, 7.0 / 3.0) +
                            3.0 * rho / (std::pow(2.0, 2.0 / 3.0) * std::pow(s, 2.0 / 3.0));
      worst = std::max(worst, std::abs(sum - closed));
    }
  return worst;
}

double cut_continuation_max() {
  const PearceyParams prm{0.8};
  const double s = 3.0;
  const auto U = CutSide::Upper, L = CutSide::Lower;
  double worst = 0.0;
  for (double x : {-2.0, -1.3, -5.0}) {
    worst = std::max(worst, std::abs(w(1, x, U) - w(3, x, L)));
    worst = std::max(worst, std::abs(w(1, x, L) - w(3, x, U)));
    worst = std::max(worst, std::abs(lambda(1, x, s, prm, U) - lambda(3, x, s, prm, L)));
  }
  for (double x : {2.0, 1.3, 5.0}) {
    worst = std::max(worst, std::abs(w(1, x, U) - w(2, x, L)));
    worst = std::max(worst, std::abs(w(1, x, L) - w(2, x, U)));
    worst = std::max(worst, std::abs(lambda(1, x, s, prm, U) - lambda(2, x, s, prm, L)));
  }
  return worst;
}

double lambda_123_max() {
  double worst = 0.0;
  for (double s : {1.0, 4.0, 9.0})
    for (double rho : {-2.0, 0.0, 1.0})
      worst = std::max(worst, std::abs(lambda_123_direct(s, {rho}) - lambda_123_closed(s, {rho})));
  return worst;
}

// ---- parametrix ----

double bessel_jump_max() {
  double worst = 0.0;
  for (double a : {0.0, 0.3}) {
    const cplx z1 = std::polar(4.0, 0.75 * kPi), z3 = std::polar(4.0, -0.75 * kPi);
    worst = std::max(worst, max_abs(Mat2(phi_bessel_in_sector(a, z1, 1) -
                                         phi_bessel_in_sector(a, z1, 2) * phi_bessel_jump(a, 1))));
    worst = std::max(worst, max_abs(Mat2(phi_bessel_in_sector(a, z3, 3) -
                                         phi_bessel_in_sector(a, z3, 1) * phi_bessel_jump(a, 3))));
    // +0 and -0 imaginary parts give the two boundary values on the negative axis
    worst = std::max(worst, max_abs(Mat2(phi_bessel(a, cplx(-4.0, 0.0)) -
                                         phi_bessel(a, cplx(-4.0, -0.0)) * phi_bessel_jump(a, 2))));
  }
  return worst;
}

double bessel_det_max() {
  const cplx zs[] = {{2, 1}, {-3, 0.5}, {0.1, -4}, {-2, -0.1}, {30, 20}, {0.01, 0.0}};
  double worst = 0.0;
  for (double a : {0.0, 0.5})
    for (cplx z : zs) worst = std::max(worst, std::abs(phi_bessel(a, z).determinant() - 1.0));
  return worst;
}

double n_jump_max() {
  Mat3 j0;
  j0 << 0.0, 1.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0;
  const Mat3 j3 = local_jump_sigma3();
  double worst = 0.0;
  for (double x : {1.5, 2.0, 3.5})
    worst = std::max(worst, max_abs(Mat3(global_N(x, CutSide::Upper) -
                                         global_N(x, CutSide::Lower) * j0)));
  for (double x : {-1.5, -2.0, -3.5})
    worst = std::max(worst, max_abs(Mat3(global_N(x, CutSide::Upper) -
                                         global_N(x, CutSide::Lower) * j3)));
  return worst;
}

double n_symmetry() {
  const auto& g = global_constants();
  double worst = 0.0;
  for (cplx z : {cplx(0.3, 0.4), cplx(-2, 1), cplx(0.5, -3)})
    worst = std::max(worst, max_abs(Mat3(global_N(z) - g.ups * global_N(-z) * g.lam)));
  return worst;
}

// z (N_norm - I) - N1 = a/z + b/z^2 + ...
double n1_recovery() {
  const auto& g = global_constants();
  double worst = 0.0;
  for (cplx dir : {cplx(0, 1), std::polar(1.0, -0.3), std::polar(1.0, 2.0)}) {
    auto m = [&](double r) {
      const cplx z = r * dir;
      return Mat3((global_N_normalized(z) - Mat3::Identity()) * z);
    };
    // remainder a/z + b/z^2: eliminate both over |z| = 50, 100, 200
    const Mat3 n1 = (8.0 * m(200.0) - 6.0 * m(100.0) + m(50.0)) / 3.0;
    worst = std::max(worst, max_abs(Mat3(n1 - g.n1)));
  }
  return worst;
}

double matching_exponent(int sign, bool remove_j1) {
  std::vector<double> x, y;
  const PearceyParams prm{0.0};
  const cplx z = sign < 0 ? cplx(-1.0, 0.0) + std::polar(kDefaultDelta - 1e-9, 0.7)
                          : cplx(1.0, 0.0) + std::polar(kDefaultDelta - 1e-9, 2.0);
  for (double s : {4.0, 8.0, 16.0}) {
    Mat3 d = local_P(sign, z, s, prm) * global_N(z).inverse() - Mat3::Identity();
    if (remove_j1)
      d -= (sign < 0 ? j1_minus(z, s, prm) : j1_plus(z, s, prm)) / std::pow(s, 4.0 / 3.0);
    x.push_back(std::log(s));
    y.push_back(std::log(max_abs(d)));
  }
  return slope(x, y);
}

// coefficient of u^k in g(-1 + u) from a circle of radius r
cplx taylor_coeff(const std::function<cplx(cplx)>& g, int k, double r = 0.05, int n = 64) {
  cplx sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx u = std::polar(r, 2.0 * kPi * (i + 0.5) / n);
    sum += g(-1.0 + u) / std::pow(u, k);
  }
  return sum / static_cast<double>(n);
}

std::vector<Check> build() {
  std::vector<Check> v;
  auto add = [&](std::string name, std::string module, int crit, double target, double tol,
                 std::function<double()> f) {
    v.push_back({std::move(name), std::move(module), crit, target, tol, std::move(f)});
  };

  // 1. differential identities at m = 60
  for (double s : {1.0, 2.0, 3.0})
    for (double rho : {-1.0, 0.0, 1.0}) {
      const std::string tag = "(s=" + std::to_string(static_cast<int>(s)) +
                              ", rho=" + std::to_string(static_cast<int>(rho)) + ")";
      add("dF_ds resolvent vs central difference " + tag, "fredholm", 1, 0.0, 1e-6, [=] {
        return std::abs(dF_ds(s, {rho}, 60) - dF_ds_fd(s, {rho}, 60, 0.0, true));
      });
      add("dF_drho integral vs central difference " + tag, "fredholm", 1, 0.0, 1e-6, [=] {
        return std::abs(dF_drho(s, {rho}, 60) - dF_drho_fd(s, {rho}, 60, 0.0, true));
      });
    }

  // 2. moment identities
  add("Y1 moment gives dF_drho (s=2, rho=1)", "fredholm", 2, 0.0, 1e-8, [] {
    const auto mm = y1_x1_moments(2.0, {1.0}, 80);
    return std::abs(-0.5 * (mm.y1(0, 1) + mm.y1(1, 2)).real() - dF_drho(2.0, {1.0}, 80));
  });
  add("X1 moment plus rho^3/54 gives dF_drho (s=2, rho=1)", "fredholm", 2, 0.0, 1e-8, [] {
    const auto mm = y1_x1_moments(2.0, {1.0}, 80);
    return std::abs(-0.5 * (mm.x1(0, 1) + mm.x1(1, 2)).real() + 1.0 / 54.0 -
                    dF_drho(2.0, {1.0}, 80));
  });

  // 3. large-gap law
  add("log-log slope of -F over s=4..8 (rho=0)", "asymptotics", 3, 8.0 / 3.0, 0.05,
      [] { return forrester_exponent(large_gap_samples(0.0)); });
  add("fitted residual exponent (rho=0)", "asymptotics", 3, -0.7, 0.3,
      [] { return fit_constant(large_gap_samples(0.0), 0.0).residual_exponent; });
  add("c_hat(rho=0) - c_hat(rho=1) in combined standard errors", "asymptotics", 3, 0.0, 3.0, [] {
    const auto a = fit_constant(large_gap_samples(0.0), 0.0);
    const auto b = fit_constant(large_gap_samples(1.0), 1.0);
    return std::abs(a.c_hat - b.c_hat) / std::hypot(a.c_stderr, b.c_stderr);
  });

  // 4. derivative asymptotics
  add("dF_ds(7) vs closed form, relative (rho=0)", "asymptotics", 4, 0.0, 0.015,
      [] { return rel(dF_ds(7.0, {0.0}, 100), dFds_expansion(7.0, 0.0)); });
  add("dF_drho(7) vs closed form, relative (rho=0.5)", "asymptotics", 4, 0.0, 0.02,
      [] { return rel(dF_drho(7.0, {0.5}, 100), dFdrho_expansion(7.0, 0.5)); });

  // 5. Pearcey functions
  add("ODE residuals on |z| <= 10, |rho| <= 4", "pearcey_fn", 5, 0.0, 1e-8, ode_residual_max);
  for (int k = 0; k < 6; ++k)
    add("Psi jump on ray " + std::to_string(k), "pearcey_fn", 5, 0.0, 1e-8,
        [k] { return psi_jump_residual(k); });
  add("Wronskian z-independence", "pearcey_fn", 5, 0.0, 1e-9, wronskian_spread);
  for (double rho : {1.0, -2.0}) {
    const std::string tag = " (rho=" + std::to_string(static_cast<int>(rho)) + ")";
    add("asymptotic frame slope p0 along +i" + tag, "pearcey_fn", 5, -2.0, 0.3,
        [rho] { return frame_slope(0, 0.5 * kPi, rho); });
    add("asymptotic frame slope p1 along -i" + tag, "pearcey_fn", 5, -2.0, 0.3,
        [rho] { return frame_slope(1, -0.5 * kPi, rho); });
    add("asymptotic frame slope p4 along arg 2" + tag, "pearcey_fn", 5, -2.0, 0.3,
        [rho] { return frame_slope(4, 2.0, rho); });
  }

  // 6. kernel representations
  for (double rho : {-1.0, 0.0, 1.0})
    add("kernel_bh vs kernel_rh on 5x5 grid (rho=" + std::to_string(static_cast<int>(rho)) + ")",
        "kernel", 6, 0.0, 1e-8, [rho] { return kernel_agreement(rho); });

  // 7. surface
  add("Vieta identities", "surface", 7, 0.0, 1e-11, vieta_max);
  add("sum of lambda_j", "surface", 7, 0.0, 1e-12, sum_lambda_residual);
  add("cut continuations", "surface", 7, 0.0, 1e-6, cut_continuation_max);
  add("lambda1 + lambda3 - 2 lambda2 at -1", "surface", 7, 0.0, 1e-10, lambda_123_max);
  {
    struct S {
      SeriesTarget t;
      SeriesPoint p;
      int j;
      double order;
      const char* label;
    };
    const S list[] = {
        {SeriesTarget::W, SeriesPoint::MinusOne, 1, 2.0, "w1 at -1"},
        {SeriesTarget::W, SeriesPoint::MinusOne, 3, 2.0, "w3 at -1"},
        {SeriesTarget::W, SeriesPoint::PlusOne, 1, 2.0, "w1 at +1"},
        {SeriesTarget::W, SeriesPoint::PlusOne, 2, 2.0, "w2 at +1"},
        {SeriesTarget::W, SeriesPoint::Infinity, 1, -13.0 / 3.0, "w1 at infinity"},
        {SeriesTarget::W, SeriesPoint::Infinity, 3, -13.0 / 3.0, "w3 at infinity"},
        {SeriesTarget::Lambda, SeriesPoint::MinusOne, 1, 2.0, "lambda1 at -1"},
        {SeriesTarget::Lambda, SeriesPoint::MinusOne, 3, 2.0, "lambda3 at -1"},
        {SeriesTarget::Lambda, SeriesPoint::PlusOne, 1, 2.0, "lambda1 at +1"},
        {SeriesTarget::Lambda, SeriesPoint::PlusOne, 2, 2.0, "lambda2 at +1"},
        {SeriesTarget::Lambda, SeriesPoint::Infinity, 1, -4.0 / 3.0, "lambda1 at infinity"},
        {SeriesTarget::Lambda, SeriesPoint::Infinity, 3, -4.0 / 3.0, "lambda3 at infinity"},
    };
    for (const S& e : list)
      add(std::string("series order ") + e.label, "surface", 7, e.order, 0.2,
          [e] { return series_check(e.t, e.p, e.j, 5.0, {0.5}).empirical_order; });
  }

  // 8. parametrix
  add("Bessel model jumps", "parametrix", 8, 0.0, 1e-9, bessel_jump_max);
  add("det Phi = 1", "parametrix", 8, 0.0, 1e-10, bessel_det_max);
  add("N jumps", "parametrix", 8, 0.0, 1e-8, n_jump_max);
  add("N symmetry", "parametrix", 8, 0.0, 1e-10, n_symmetry);
  add("N1 recovery from large z", "parametrix", 8, 0.0, 1e-5, n1_recovery);
  add("E analytic across (-1-delta, -1)", "parametrix", 8, 0.0, 1e-8, [] {
    double worst = 0.0;
    for (double x : {-1.1, -1.25})
      worst = std::max(worst, max_abs(Mat3(prefactor_E(x, 6.0, {0.0}, CutSide::Upper) -
                                           prefactor_E(x, 6.0, {0.0}, CutSide::Lower))));
    return worst;
  });
  add("E(-1) vs closed form", "parametrix", 8, 0.0, 1e-7, [] {
    double worst = 0.0;
    for (double rho : {0.0, 1.0})
      worst = std::max(worst, max_abs(Mat3(e_at_minus_one(6.0, {rho}).value -
                                           e_minus_one_closed(6.0, {rho}))));
    return worst;
  });
  add("J_{-1} contour integral vs closed form", "parametrix", 8, 0.0, 1e-8, [] {
    double worst = 0.0;
    for (double rho : {0.0, 1.0})
      worst = std::max(worst, max_abs(Mat3(j1_laurent(6.0, {rho}).jm1 -
                                           j1_residue_closed(6.0, {rho}))));
    return worst;
  });
  add("matching order P(-1) N^{-1} - I", "parametrix", 8, -4.0 / 3.0, 0.3,
      [] { return matching_exponent(-1, false); });
  add("matching order P(-1) N^{-1} - I - J1/s^{4/3}", "parametrix", 8, -8.0 / 3.0, 0.3,
      [] { return matching_exponent(-1, true); });
  add("matching order P(+1) N^{-1} - I", "parametrix", 8, -4.0 / 3.0, 0.3,
      [] { return matching_exponent(1, false); });
  add("matching order P(+1) N^{-1} - I - J1/s^{4/3}", "parametrix", 8, -8.0 / 3.0, 0.3,
      [] { return matching_exponent(1, true); });

  // 9. Nystrom convergence
  add("|F_40 - F_80| at s=3", "fredholm", 9, 0.0, 1e-9, [] {
    return std::abs(fredholm_logdet(3.0, {0.0}, 40, false).F -
                    fredholm_logdet(3.0, {0.0}, 80, false).F);
  });
  add("|F_100 - F_200| at s=8", "fredholm", 9, 0.0, 1e-8, [] {
    return std::abs(fredholm_logdet(8.0, {0.0}, 100, false).F -
                    fredholm_logdet(8.0, {0.0}, 200, false).F);
  });

  // 10. small-s oracle
  add("Nystrom vs trace series at s=0.1", "fredholm", 10, 0.0, 1e-10, [] {
    return std::abs(fredholm_logdet(0.1, {0.0}, 24, false).F - trace_series_logdet(0.1, {0.0}, 20));
  });

  // module checks outside the acceptance list
  add("p0(0) = Gamma(1/4)/sqrt2", "pearcey_fn", 0, 0.0, 1e-12,
      [] { return std::abs(pearcey_p(0, 0.0, {0.0}).p - std::tgamma(0.25) / std::sqrt(2.0)); });
  add("q odd in y", "pearcey_fn", 0, 0.0, 1e-12, [] {
    return std::abs(pearcey_q(1.7, {0.6}).p + pearcey_q(-1.7, {0.6}).p);
  });
  add("kappa6(0) = 7/36", "pearcey_fn", 0, 0.0, 1e-15,
      [] { return std::abs(kappa_coeffs({0.0}).kappa6 - 7.0 / 36.0); });
  add("near-diagonal Taylor branch vs difference quotient", "kernel", 0, 0.0, 1e-9, [] {
    const double x = 0.4, y = 0.4 + 5e-5;
    return std::abs(kernel_bh(x, y, {0.5}) - kernel_bh(x, y, {0.5}, 0.0));
  });
  add("expansion at s=2, rho=0", "asymptotics", 0, 0.0, 1e-14, [] {
    return std::abs(F_expansion(2.0, 0.0).total() - (-9.0 / 8.0 - 2.0 / 9.0 * std::log(2.0)));
  });
  add("dFds_expansion is d/ds of F_expansion", "asymptotics", 0, 0.0, 1e-7, [] {
    const double s = 3.0, rho = 0.7, h = 1e-4;
    const double fd = (F_expansion(s + h, rho).total() - F_expansion(s - h, rho).total()) / (2 * h);
    return std::abs(fd - dFds_expansion(s, rho));
  });
  add("synthetic fit recovers c", "asymptotics", 0, 0.0, 1e-6, [] {
    Samples v;
    for (double s : {4.0, 5.0, 6.0, 7.0, 8.0})
      v.push_back({s, F_expansion(s, 0.0).total() + 0.7 + 0.3 * std::pow(s, -2.0 / 3.0)});
    return std::abs(fit_constant(v, 0.0).c_hat - 0.7);
  });
  add("eta(0) = i and eta(z) eta(-z) = -1", "surface", 0, 0.0, 1e-14, [] {
    const cplx z(0.3, 0.2);
    return std::max(std::abs(eta(0.0) - kI), std::abs(eta(z) * eta(-z) + 1.0));
  });
  add("-D0 by Richardson at |z| in {50, 100}", "surface", 0, 0.0, 1e-6, [] {
    return std::abs(lambda_constant_richardson(5.0, {0.5}) + surface_constants(5.0, {0.5}).d0);
  });
  // positive part of the margins, so the check passes iff all are negative
  add("decay margins Re(lambda2 - lambda1), Re(lambda2 - lambda3) on Sigma_1", "surface", 0, 0.0,
      0.0, [] {
        double worst = decay_margin(1.0 + std::polar(2.0, kPi / 4), 2, 1, 10.0, {0.0}).normalized;
        for (double r : {0.5, 1.0, 3.0, 8.0, 20.0})
          worst = std::max(worst, decay_margin(1.0 + std::polar(r, kPi / 4), 2, 3, 10.0, {0.0}).value);
        return std::max(0.0, worst);
      });
  add("Bessel Wronskian at 3+4i", "parametrix", 0, 0.0, 1e-10, [] {
    const cplx z(3, 4);
    const auto b = modified_bessel(0.0, z);
    return std::abs(b.i_val * b.dk_val - b.di_val * b.k_val + 1.0 / z) * std::abs(z);
  });
  add("f'(-1) = C1^2", "parametrix", 0, 0.0, 1e-8, [] {
    const auto k = surface_constants(6.0, {0.5});
    return std::abs(taylor_coeff([](cplx z) { return conformal_f(z, 6.0, {0.5}); }, 1) -
                    k.c1 * k.c1);
  });
  add("second Taylor coefficient of f = 2 C1 C3", "parametrix", 0, 0.0, 1e-6, [] {
    const auto k = surface_constants(6.0, {0.5});
    return std::abs(taylor_coeff([](cplx z) { return conformal_f(z, 6.0, {0.5}); }, 2) -
                    2.0 * k.c1 * k.c3);
  });
  add("first column of E'(-1)", "parametrix", 0, 0.0, 1e-6, [] {
    return (e_at_minus_one(6.0, {0.0}).derivative.col(0) -
            e_prime_minus_one_first_column_closed(6.0, {0.0}))
        .cwiseAbs()
        .maxCoeff();
  });
  add("P(-1) jump on (-1-delta, -1)", "parametrix", 0, 0.0, 1e-8, [] {
    return max_abs(Mat3(local_P(-1, -1.1, 6.0, {0.0}, CutSide::Upper) -
                        local_P(-1, -1.1, 6.0, {0.0}, CutSide::Lower) * local_jump_sigma3()));
  });
  add("residue at +1 equals -Ups J_{-1} Ups", "parametrix", 0, 0.0, 1e-8, [] {
    const auto& u = global_constants().ups;
    Mat3 res = Mat3::Zero();
    const int n = 64;
    for (int i = 0; i < n; ++i) {
      const cplx d = std::polar(0.05, 2.0 * kPi * (i + 0.5) / n);
      res += j1_plus(1.0 + d, 6.0, {0.0}) * d;
    }
    res /= static_cast<double>(n);
    return max_abs(Mat3(res + u * j1_residue_closed(6.0, {0.0}) * u));
  });
  add("R1 jump on the circle around -1", "parametrix", 0, 0.0, 1e-9, [] {
    const auto r = r1_data(6.0, {0.0});
    const cplx z = -1.0 + std::polar(kDefaultDelta, 1.0);
    return max_abs(Mat3(r(z, R1Region::Outer) - r(z, R1Region::MinusDisk) - j1_minus(z, 6.0, {0.0})));
  });
  add("lim (B^{-1} B')_{31} = pi i / 2", "parametrix", 0, 0.0, 1e-6,
      [] { return std::abs(b_inv_db(0.0, cplx(1e-9, 1e-10))(2, 0) - 0.5 * kPi * kI); });
  add("(A^{-1} A')_{21} and _{31} vanish", "parametrix", 0, 0.0, 1e-15, [] {
    const auto f = script_factors(cplx(-0.95, 0.02), 6.0, {0.0});
    return std::max(std::abs(f.a_inv_da(1, 0)), std::abs(f.a_inv_da(2, 0)));
  });
  return v;
}

}  // namespace

double criterion_budget_seconds(int criterion) {
  if (criterion == 1) return 120.0;
  if (criterion == 3) return 600.0;
  return 0.0;
}

std::string criterion_title(int c) {
  switch (c) {
    case 1: return "differential-identity closure";
    case 2: return "moment identities";
    case 3: return "asymptotic law";
    case 4: return "derivative asymptotics";
    case 5: return "Pearcey suite";
    case 6: return "kernel representation agreement";
    case 7: return "surface suite";
    case 8: return "parametrix suite";
    case 9: return "Nystrom convergence";
    case 10: return "small-s oracle";
    default: return "module checks";
  }
}

std::vector<Check> all_checks() { return build(); }

Result run(const Check& c, double tol_scale) {
  Result r{c.name, c.module, c.criterion, std::nan(""), c.target, c.tolerance * tol_scale,
           std::nan(""), false, 0.0, ""};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.measured = c.measure();
    r.deviation = std::abs(r.measured - c.target);
    r.passed = r.deviation <= r.tolerance;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace pearcey::checks
