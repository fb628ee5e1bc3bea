#include "pearcey/fredholm.hpp"

#include <cmath>

#include "pearcey/parallel.hpp"
#include "pearcey/quadrature.hpp"

namespace pearcey {

NystromGrid build_grid(double s, int m) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("build_grid: s must be positive");
  if (m < 4 || m % 2 != 0) throw DomainError("build_grid: m must be even and >= 4");
  auto rule = gauss_legendre(m, -s, s);
  return {s, m, std::move(rule.nodes), std::move(rule.weights)};
}

DiscreteOperator assemble(double s, PearceyParams params, int m) {
  DiscreteOperator op;
  op.grid = build_grid(s, m);
  op.params = params;
  op.data.resize(m);
  parallel_for(m, [&](std::size_t i) { op.data[i] = node_data(op.grid.nodes[i], params); });
  op.a.resize(m, m);
  parallel_for(m, [&](std::size_t i) {
    double wi = std::sqrt(op.grid.weights[i]);
    for (int j = 0; j < m; ++j)
      op.a(i, j) = wi * kernel_pair(op.data[i], op.data[j]) * std::sqrt(op.grid.weights[j]);
  });
  if (!op.a.allFinite()) throw NumericalError("assemble: non-finite kernel entry", 0.0);
  return op;
}

double logdet(const DiscreteOperator& op) {
  const int m = op.grid.m;
  Eigen::MatrixXd b = Eigen::MatrixXd::Identity(m, m) - op.a;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(b);
  const auto& u = lu.matrixLU();
  double sum = 0.0;
  int sign = lu.permutationP().determinant();
  for (int i = 0; i < m; ++i) {
    double d = u(i, i);
    if (d == 0.0) throw NumericalError("fredholm_logdet: singular I - A", 0.0);
    if (d < 0) sign = -sign;
    sum += std::log(std::abs(d));
  }
  if (sign < 0) throw NumericalError("fredholm_logdet: det(I - A) <= 0, increase m", sum);
  return sum;
}

GapResult fredholm_logdet(double s, PearceyParams params, int m, bool with_error) {
  GapResult r;
  r.s = s;
  r.rho = params.rho;
  r.m = m;
  r.F = logdet(assemble(s, params, m));
  if (with_error) {
    int half = std::max(4, (m / 2 + 1) / 2 * 2);
    r.est_error = std::abs(r.F - logdet(assemble(s, params, half)));
  }
  return r;
}

double trace_series_logdet(double s, PearceyParams params, int n_terms, int m) {
  if (n_terms < 1) throw DomainError("trace_series_logdet: n_terms must be >= 1");
  auto op = assemble(s, params, m);
  double norm = Eigen::JacobiSVD<Eigen::MatrixXd>(op.a).singularValues()(0);
  if (norm >= 1.0) throw NumericalError("trace_series_logdet: ||A|| >= 1, series diverges", norm);
  Eigen::MatrixXd pw = op.a;
  double sum = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    sum -= pw.trace() / n;
    if (n < n_terms) pw = pw * op.a;
  }
  return sum;
}

Resolvent::Resolvent(DiscreteOperator op) : op_(std::move(op)) {
  const int m = op_.grid.m;
  lu_.compute(Eigen::MatrixXd::Identity(m, m) - op_.a);
  if (std::abs(lu_.determinant()) == 0.0) throw NumericalError("resolvent: singular I - A", 0.0);
  sqrt_w_.resize(m);
  for (int i = 0; i < m; ++i) sqrt_w_(i) = std::sqrt(op_.grid.weights[i]);
}

Eigen::VectorXd Resolvent::row(const NodeData& u) const {
  Eigen::VectorXd r(op_.grid.m);
  for (int i = 0; i < op_.grid.m; ++i) r(i) = sqrt_w_(i) * kernel_pair(u, op_.data[i]);
  return r;
}

Eigen::VectorXd Resolvent::col(const NodeData& v) const {
  Eigen::VectorXd c(op_.grid.m);
  for (int j = 0; j < op_.grid.m; ++j) c(j) = sqrt_w_(j) * kernel_pair(op_.data[j], v);
  return c;
}

double Resolvent::operator()(double u, double v) const {
  auto du = node_data(u, op_.params);
  auto dv = node_data(v, op_.params);
  return kernel_pair(du, dv) + row(du).dot(lu_.solve(col(dv)));
}

Eigen::MatrixXd Resolvent::at_nodes() const { return lu_.solve(op_.a); }

Eigen::VectorXcd Resolvent::solve(const Eigen::VectorXcd& b) const {
  Eigen::VectorXd re = lu_.solve(Eigen::VectorXd(b.real()));
  Eigen::VectorXd im = lu_.solve(Eigen::VectorXd(b.imag()));
  Eigen::VectorXcd out(b.size());
  out.real() = re;
  out.imag() = im;
  return out;
}

Resolvent resolvent(double s, PearceyParams params, int m) {
  return Resolvent(assemble(s, params, m));
}

double dF_ds(const Resolvent& r) {
  double s = r.op().grid.s;
  return -r(s, s) - r(-s, -s);
}

double dF_ds(double s, PearceyParams params, int m) { return dF_ds(resolvent(s, params, m)); }

namespace {

// Y1 = sum_i w_i F(x_i) h(x_i)^t with (I - K W) F = f.
Mat3 y1_moment(const Resolvent& r) {
  const auto& op = r.op();
  const int m = op.grid.m;
  std::vector<IntegrableVectors> fh(m);
  parallel_for(m, [&](std::size_t i) { fh[i] = vectors_fh(op.grid.nodes[i], op.params); });
  Mat3 y1 = Mat3::Zero();
  for (int c = 0; c < 3; ++c) {
    Eigen::VectorXcd b(m);
    for (int i = 0; i < m; ++i) b(i) = std::sqrt(op.grid.weights[i]) * fh[i].f(c);
    Eigen::VectorXcd g = r.solve(b);  // sqrt(w) F_c
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < 3; ++k) y1(c, k) += std::sqrt(op.grid.weights[i]) * g(i) * fh[i].h(k);
  }
  return y1;
}

}  // namespace

double dF_drho(double s, PearceyParams params, int m) {
  Mat3 y1 = y1_moment(resolvent(s, params, m));
  return (-0.5 * (y1(0, 1) + y1(1, 2))).real();
}

MomentMatrices y1_x1_moments(double s, PearceyParams params, int m) {
  MomentMatrices out;
  out.y1 = y1_moment(resolvent(s, params, m));
  auto frame = asymptotic_frame(params);
  out.x1 = frame.psi1 + frame.psi0.inverse() * out.y1 * frame.psi0;
  return out;
}

namespace {

template <class F>
double central(F&& f, double h, bool richardson) {
  double d1 = (f(h) - f(-h)) / (2.0 * h);
  if (!richardson) return d1;
  double d2 = (f(h / 2) - f(-h / 2)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

double dF_ds_fd(double s, PearceyParams params, int m, double h, bool richardson) {
  if (h <= 0.0) h = 1e-3 * std::max(1.0, s);
  return central([&](double d) { return fredholm_logdet(s + d, params, m, false).F; }, h,
                 richardson);
}

double dF_drho_fd(double s, PearceyParams params, int m, double h, bool richardson) {
  if (h <= 0.0) h = 1e-3;
  return central(
      [&](double d) { return fredholm_logdet(s, PearceyParams{params.rho + d}, m, false).F; }, h,
      richardson);
}

}  // namespace pearcey
