#include "pearcey/kernel.hpp"

#include <cmath>

namespace pearcey {

NodeData node_data(double x, PearceyParams params) {
  NodeData d;
  d.x = x;
  d.rho = params.rho;
  auto p = pearcey_p(0, x, params);
  d.p = {p.p / (2.0 * kPi), p.dp / (2.0 * kPi), p.d2p / (2.0 * kPi)};
  d.q = pearcey_q(x, params);
  return d;
}

namespace {

double numerator(const NodeData& a, const NodeData& b) {
  const auto& p = a.p;
  const auto& q = b.q;
  return (p.p * q.d2p - p.dp * q.dp + p.d2p * q.p - a.rho * p.p * q.p).real();
}

// Expansion of N(x, x + h) = N1 h + N2 h^2/2 + N3 h^3/6 in h, with the
// higher q derivatives taken from q''' = -x q + rho q'.
double near_diagonal(const NodeData& a, double h) {
  const double x = a.x, r = a.rho;
  const cplx p = a.p.p, p1 = a.p.dp, p2 = a.p.d2p;
  const cplx q = a.q.p, q1 = a.q.dp, q2 = a.q.d2p;
  const cplx q3 = -x * q + r * q1;
  const cplx q4 = -q - x * q1 + r * q2;
  const cplx q5 = -2.0 * q1 - x * q2 + r * q3;
  const cplx n1 = -x * p * q - p1 * q2 + p2 * q1;
  const cplx n2 = p * q4 - p1 * q3 + p2 * q2 - r * p * q2;
  const cplx n3 = p * q5 - p1 * q4 + p2 * q3 - r * p * q3;
  return -(n1 + n2 * h / 2.0 + n3 * h * h / 6.0).real();
}

}  // namespace

double kernel_pair(const NodeData& a, const NodeData& b, double near_diag) {
  const double h = b.x - a.x;
  if (std::abs(h) < near_diag) return near_diagonal(a, h);
  return numerator(a, b) / (a.x - b.x);
}

double kernel_bh(double x, double y, PearceyParams params, double near_diag) {
  auto a = node_data(x, params);
  if (std::abs(y - x) < near_diag) return near_diagonal(a, y - x);
  return numerator(a, node_data(y, params)) / (x - y);
}

double kernel_diag(double x, PearceyParams params) {
  return near_diagonal(node_data(x, params), 0.0);
}

double kernel_numerator(double x, double y, PearceyParams params) {
  return numerator(node_data(x, params), node_data(y, params));
}

KernelRH kernel_rh(double x, double y, PearceyParams params) {
  if (x == y) throw DomainError("kernel_rh: requires x != y");
  Mat3 px = psi_tilde(x, params);
  Mat3 py = psi_tilde(y, params);
  Vec3 col = py.partialPivLu().solve(px.col(0));
  cplx v = (col(1) + col(2)) / (2.0 * kPi * kI * (x - y));
  return {v.real(), std::abs(v.imag())};
}

IntegrableVectors vectors_fh(double x, PearceyParams params) {
  Mat3 px = psi_tilde(x, params);
  auto lu = px.transpose().fullPivLu();
  if (!lu.isInvertible()) throw NumericalError("vectors_fh: singular Psi~", 0.0);
  Vec3 h = lu.solve(Vec3(0.0, 1.0, 1.0)) / (2.0 * kPi * kI);
  return {px.col(0), h};
}

double symmetry_defect(double x, double y, PearceyParams params) {
  return std::abs(kernel_bh(x, y, params) - kernel_bh(y, x, params));
}

}  // namespace pearcey
