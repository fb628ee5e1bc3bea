#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "pearcey/kernel.hpp"
#include "pearcey/types.hpp"

namespace pearcey {

struct NystromGrid {
  double s = 0.0;
  int m = 0;
  std::vector<double> nodes, weights;
};

// a(i,j) = sqrt(w_i) K(x_i, x_j) sqrt(w_j)
struct DiscreteOperator {
  NystromGrid grid;
  PearceyParams params;
  std::vector<NodeData> data;
  Eigen::MatrixXd a;
};

struct GapResult {
  double s = 0.0, rho = 0.0;
  int m = 0;
  double F = 0.0;
  double est_error = 0.0;
  std::optional<double> dF_ds, dF_drho;
};

struct MomentMatrices {
  Mat3 y1, x1;
};

// Gauss-Legendre on [-s, s]; m >= 4 and even.
NystromGrid build_grid(double s, int m);

// Node data is evaluated in parallel (see parallel.hpp).
DiscreteOperator assemble(double s, PearceyParams params, int m);

// ln det(I - A) from pivoted LU. est_error = |F_m - F_m'| with m' = m/2
// rounded up to even (skipped when with_error is false).
// Throws NumericalError if det(I - A) <= 0.
GapResult fredholm_logdet(double s, PearceyParams params, int m,
                          bool with_error = true);
double logdet(const DiscreteOperator& op);

// -sum_{n <= n_terms} tr(A^n) / n. Throws NumericalError if ||A||_2 >= 1.
double trace_series_logdet(double s, PearceyParams params, int n_terms,
                           int m = 24);

class Resolvent {
 public:
  explicit Resolvent(DiscreteOperator op);

  // R(u, v) = K(u, v) + sum_i sqrt(w_i) K(u, x_i) [(I - A)^{-1} b_v]_i,
  // b_v(j) = sqrt(w_j) K(x_j, v). Valid for any real u, v.
  double operator()(double u, double v) const;
  // (I - A)^{-1} A, i.e. sqrt(w) R sqrt(w) at the nodes.
  Eigen::MatrixXd at_nodes() const;
  const DiscreteOperator& op() const { return op_; }
  // Solves (I - A) y = b.
  Eigen::VectorXcd solve(const Eigen::VectorXcd& b) const;

 private:
  Eigen::VectorXd row(const NodeData& u) const;
  Eigen::VectorXd col(const NodeData& v) const;
  DiscreteOperator op_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  Eigen::VectorXd sqrt_w_;
};

Resolvent resolvent(double s, PearceyParams params, int m);

// -R(s,s) - R(-s,-s)
double dF_ds(double s, PearceyParams params, int m);
double dF_ds(const Resolvent& r);

// -1/2 int_{-s}^{s} (F1 h2 + F2 h3) dv with (I - K) F = f on the grid.
double dF_drho(double s, PearceyParams params, int m);

// y1 = int F h^t dv; x1 = Psi1 + Psi0^{-1} y1 Psi0.
MomentMatrices y1_x1_moments(double s, PearceyParams params, int m);

// Central differences of fredholm_logdet. h <= 0 picks the defaults:
// 1e-3 max(1, s) in s and 1e-3 in rho. richardson combines steps h, h/2.
double dF_ds_fd(double s, PearceyParams params, int m, double h = 0.0,
                bool richardson = false);
double dF_drho_fd(double s, PearceyParams params, int m, double h = 0.0,
                  bool richardson = false);

}  // namespace pearcey
