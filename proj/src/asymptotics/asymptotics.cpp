#include "pearcey/asymptotics.hpp"

#include <cmath>

namespace pearcey {

namespace {

void check_s(double s) {
  if (!(s > 0.0)) throw DomainError("expansion: s must be positive");
}

// slope and intercept of y on x
std::pair<double, double> line_fit(const std::vector<double>& x, const std::vector<double>& y) {
  Eigen::MatrixXd a(x.size(), 2);
  Eigen::VectorXd b(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    a(i, 0) = 1.0;
    a(i, 1) = x[i];
    b(i) = y[i];
  }
  Eigen::Vector2d c = a.colPivHouseholderQr().solve(b);
  return {c(1), c(0)};
}

}  // namespace

ExpansionTerms F_expansion(double s, double rho, double c) {
  check_s(s);
  ExpansionTerms t;
  t.s = s;
  t.rho = rho;
  t.leading = -9.0 * std::pow(s, 8.0 / 3.0) / std::pow(2.0, 17.0 / 3.0);
  t.quad = rho * s * s / 4.0;
  t.frac = -rho * rho * std::pow(s, 4.0 / 3.0) / std::pow(2.0, 10.0 / 3.0);
  t.log = -2.0 / 9.0 * std::log(s);
  t.rho4 = std::pow(rho, 4) / 216.0;
  t.c = c;
  return t;
}

double dFds_expansion(double s, double rho) {
  check_s(s);
  return -3.0 * std::pow(s, 5.0 / 3.0) / std::pow(2.0, 8.0 / 3.0) + rho * s / 2.0 -
         rho * rho * std::cbrt(s) / (3.0 * std::pow(2.0, 4.0 / 3.0)) - 2.0 / (9.0 * s);
}

double dFdrho_expansion(double s, double rho) {
  check_s(s);
  return s * s / 4.0 - rho * std::pow(s, 4.0 / 3.0) / std::pow(2.0, 7.0 / 3.0) +
         std::pow(rho, 3) / 54.0;
}

FitReport fit_constant(const std::vector<GapSample>& samples, double rho, int extra_terms) {
  if (samples.size() < 5) throw DomainError("fit_constant: need at least 5 samples");
  if (extra_terms < 0) throw DomainError("fit_constant: extra_terms must be >= 0");
  double lo = 1e300, hi = -1e300;
  for (const auto& p : samples) {
    if (p.s < 4.0 || p.s > 8.0) throw DomainError("fit_constant: samples must have s in [4, 8]");
    lo = std::min(lo, p.s);
    hi = std::max(hi, p.s);
  }
  const int n = static_cast<int>(samples.size()), k = 2 + extra_terms;
  if (n <= k) throw DomainError("fit_constant: more parameters than samples");

  FitReport r;
  r.rho = rho;
  Eigen::MatrixXd a(n, k);
  Eigen::VectorXd g(n);
  for (int i = 0; i < n; ++i) {
    const double s = samples[i].s;
    const double gi = samples[i].F - F_expansion(s, rho).total();
    r.samples.push_back({s, samples[i].F, gi});
    g(i) = gi;
    a(i, 0) = 1.0;
    for (int j = 1; j < k; ++j) a(i, j) = std::pow(s, -2.0 * j / 3.0);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(0) / sv(k - 1);
  if (!(hi / lo > 1.2) || !(cond < 1e10))
    throw NumericalError("fit_constant: ill-conditioned fit (s-range too narrow)", cond);
  Eigen::VectorXd coef = svd.solve(g);
  r.c_hat = coef(0);
  for (int j = 1; j < k; ++j) r.coeffs.push_back(coef(j));

  const double rss = (a * coef - g).squaredNorm();
  Eigen::MatrixXd cov = (a.transpose() * a).inverse() * (rss / (n - k));
  r.c_stderr = std::sqrt(cov(0, 0));

  std::vector<double> x, y;
  for (const auto& p : r.samples) {
    x.push_back(std::log(p.s));
    y.push_back(std::log(std::abs(p.G - r.c_hat)));
  }
  r.residual_exponent = line_fit(x, y).first;
  return r;
}

double forrester_exponent(const std::vector<GapSample>& samples) {
  if (samples.size() < 5) throw DomainError("forrester_exponent: need at least 5 samples");
  std::vector<double> x, y;
  for (const auto& p : samples) {
    if (!(p.s > 0.0) || !(p.F < 0.0)) throw DomainError("forrester_exponent: needs s > 0, F < 0");
    x.push_back(std::log(p.s));
    y.push_back(std::log(-p.F));
  }
  return line_fit(x, y).first;
}

}  // namespace pearcey
