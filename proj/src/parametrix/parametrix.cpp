#include "pearcey/parametrix.hpp"

#include <cmath>

namespace pearcey {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

bool on_left_cut(cplx z) { return z.imag() == 0.0 && z.real() < -1.0; }

CutSide flip(CutSide side) {
  if (side == CutSide::Upper) return CutSide::Lower;
  if (side == CutSide::Lower) return CutSide::Upper;
  return side;
}

void check_s(double s) {
  if (!(s > 0.0)) throw DomainError("parametrix: s must be positive");
}

void check_disk(cplx z, cplx center, double delta, const char* who) {
  if (!(std::abs(z - center) < delta))
    throw DomainError(std::string(who) + ": z outside the local disk");
}

// Phi diag(e^{-sqrt z}, e^{sqrt z}) with the given sector's formula.
Mat2 phi_scaled_sector(double alpha, cplx z, int sector) {
  if (z == cplx(0.0, 0.0)) throw DomainError("phi_bessel: z = 0");
  const cplx r = std::sqrt(z);
  const BesselPair b = modified_bessel_scaled(alpha, r);
  Mat2 m;
  m << b.i_val, kI / kPi * b.k_val, kPi * kI * r * b.di_val, -r * b.dk_val;
  if (sector == 2 || sector == 3) {
    const double sg = sector == 2 ? -1.0 : 1.0;
    const cplx c = sg * std::exp(-sg * kI * kPi * alpha) * std::exp(-2.0 * r);
    m.col(0) += c * m.col(1);
  }
  return m;
}

// bounded for large z in every sector
Mat2 phi_scaled(double alpha, cplx z) {
  if (z == cplx(0.0, 0.0)) throw DomainError("phi_bessel: z = 0");
  const double t = std::arg(z);
  if (std::abs(std::abs(t) - 0.75 * kPi) < 1e-13)
    throw DomainError("phi_bessel: z on a ray arg = +-3pi/4");
  return phi_scaled_sector(alpha, z, std::abs(t) < 0.75 * kPi ? 1 : (t > 0 ? 2 : 3));
}

Mat3 embed(const Mat2& p) {
  Mat3 b = Mat3::Zero();
  b(0, 0) = p(0, 0);
  b(0, 2) = p(0, 1);
  b(2, 0) = p(1, 0);
  b(2, 2) = p(1, 1);
  b(1, 1) = 1.0;
  return b;
}

// (1 - w^2)^{1/2} as used by N_k on sheet j
cplx g_branch(cplx v, int sheet) {
  const cplx p = std::sqrt(1.0 - v * v);
  if (sheet == 1) return p;
  if (v.imag() > 0.0) return p;
  if (v.imag() < 0.0) return -p;
  if (std::abs(v.real()) > 1.0)
    return -kI * (v.real() > 0 ? 1.0 : -1.0) * std::sqrt(v.real() * v.real() - 1.0);
  return p;
}

Vec3 n_column(cplx v, int sheet) {
  const cplx g = g_branch(v, sheet);
  const cplx v2 = v * v;
  Vec3 c;
  c << (1.0 - v2 / 3.0) / g, -kI / kSqrt6 * (v - v2 / kSqrt3) / g,
      -kI / kSqrt6 * (v + v2 / kSqrt3) / g;
  return c;
}

struct Lambdas {
  cplx l1, l2, l3;
};

Lambdas lambdas(cplx z, double s, PearceyParams params, CutSide side) {
  return {lambda(1, z, s, params, side), lambda(2, z, s, params, side),
          lambda(3, z, s, params, side)};
}

CutSide default_side(cplx z, CutSide side) {
  return (on_left_cut(z) && side == CutSide::None) ? CutSide::Upper : side;
}

// f with a signed zero imaginary part on the cut so that principal
// powers pick the requested boundary value.
cplx f_on_side(cplx z, double s, PearceyParams params, CutSide side) {
  side = default_side(z, side);
  const Lambdas l = lambdas(z, s, params, side);
  cplx d = 0.5 * (l.l1 - l.l3);
  cplx f = d * d;
  if (on_left_cut(z)) f = cplx(f.real(), side == CutSide::Upper ? 0.0 : -0.0);
  return f;
}

double c1_checked(double s, PearceyParams params) {
  const double c1 = surface_constants(s, params).c1;
  if (!(c1 > 0.0)) throw DomainError("closed forms need C1 > 0");
  return c1;
}

}  // namespace

Mat2 phi_bessel(double alpha, cplx z) {
  Mat2 m = phi_scaled(alpha, z);
  const cplx r = std::sqrt(z);
  m.col(0) *= std::exp(r);
  m.col(1) *= std::exp(-r);
  return m;
}

Mat2 phi_bessel_in_sector(double alpha, cplx z, int sector) {
  if (sector < 1 || sector > 3) throw DomainError("phi_bessel_in_sector: sector must be 1, 2 or 3");
  if (z.imag() == 0.0 && z.real() < 0.0) throw DomainError("phi_bessel_in_sector: z on (-inf, 0)");
  Mat2 m = phi_scaled_sector(alpha, z, sector);
  const cplx r = std::sqrt(z);
  m.col(0) *= std::exp(r);
  m.col(1) *= std::exp(-r);
  return m;
}

Mat2 phi_bessel_jump(double alpha, int k) {
  Mat2 j;
  switch (k) {
    case 1: j << 1.0, 0.0, std::exp(kI * kPi * alpha), 1.0; break;
    case 2: j << 0.0, 1.0, -1.0, 0.0; break;
    case 3: j << 1.0, 0.0, std::exp(-kI * kPi * alpha), 1.0; break;
    default: throw DomainError("phi_bessel_jump: ray index must be 1, 2 or 3");
  }
  return j;
}

Mat2 phi_bessel_infinity(double alpha, cplx z) {
  const cplx q = std::pow(kPi * kPi * z, 0.25);
  const cplx r = std::sqrt(z);
  const double a2 = 4.0 * alpha * alpha;
  Mat2 pre, u, corr;
  pre << 1.0 / q, 0.0, 0.0, q;
  u << 1.0, kI, kI, 1.0;
  corr << -1.0 - a2, -2.0 * kI, -2.0 * kI, 1.0 + a2;
  Mat2 m = pre * u / kSqrt2 * (Mat2::Identity() + corr / (8.0 * r));
  m.col(0) *= std::exp(r);
  m.col(1) *= std::exp(-r);
  return m;
}

const GlobalConstants& global_constants() {
  static const GlobalConstants g = [] {
    GlobalConstants c;
    Mat3 d = Mat3::Zero();
    d(0, 0) = 4.0 / std::pow(2.0, 1.0 / 6.0);
    d(1, 1) = kSqrt6;
    d(2, 2) = 3.0 * std::pow(2.0, 1.0 / 6.0);
    Mat3 m;
    m << kSqrt2 * kI, 1.0, -1.0, 0.0, 2.0, 2.0, -kSqrt2 * kI, 1.0, -1.0;
    c.n0 = 0.25 * d * m;
    c.lam << -1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0;
    c.ups = c.n0 * c.lam * c.n0.inverse();
    const double a = std::pow(2.0, -5.0 / 3.0), b = 5.0 / (16.0 * std::cbrt(2.0));
    c.n1 << 0.0, -a, 0.0, -b, 0.0, a, 0.0, b, 0.0;
    const cplx w = kOmega, w2 = kOmega * kOmega;
    c.l_plus << -w, w2, 1.0, -1.0, 1.0, 1.0, -w2, w, 1.0;
    c.l_minus << w2, w, 1.0, 1.0, 1.0, 1.0, w, w2, 1.0;
    return c;
  }();
  return g;
}

Mat3 global_N(cplx z, CutSide side) {
  if (z == cplx(1.0, 0.0) || z == cplx(-1.0, 0.0))
    throw DomainError("global_N: singular at z = +-1");
  const GlobalConstants& g = global_constants();
  Mat3 m;
  m.col(0) = n_column(w(1, z, side), 1);
  m.col(1) = n_column(w(3, z, side), 3);
  m.col(2) = n_column(w(2, z, side), 2);
  return g.n0 * m * g.lam;
}

Mat3 global_N_normalized(cplx z) {
  if (z.imag() == 0.0) throw DomainError("global_N_normalized: z must be off the real axis");
  const GlobalConstants& g = global_constants();
  const Mat3& l = z.imag() > 0 ? g.l_plus : g.l_minus;
  const cplx c = std::pow(z, 1.0 / 3.0);
  Mat3 d = Mat3::Zero();
  d(0, 0) = c;
  d(1, 1) = 1.0;
  d(2, 2) = 1.0 / c;
  return global_N(z) * l.inverse() * d;
}

cplx conformal_f(cplx z, double s, PearceyParams params, double delta) {
  check_s(s);
  check_disk(z, -1.0, delta, "conformal_f");
  return f_on_side(z, s, params, CutSide::None);
}

cplx conformal_f_tilde(cplx z, double s, PearceyParams params, double delta) {
  check_s(s);
  check_disk(z, 1.0, delta, "conformal_f_tilde");
  const CutSide side = (z.imag() == 0.0 && z.real() > 1.0) ? CutSide::Upper : CutSide::None;
  cplx d = 0.5 * (lambda(1, z, s, params, side) - lambda(2, z, s, params, side));
  cplx ft = d * d;
  cplx fm = f_on_side(-z, s, params, CutSide::None);
  if (std::abs(ft - fm) > 1e-12 * (1.0 + std::abs(ft)))
    throw NumericalError("conformal_f_tilde: f~(z) != f(-z)", std::abs(ft - fm));
  return ft;
}

Mat3 prefactor_E(cplx z, double s, PearceyParams params, CutSide side, double delta) {
  check_s(s);
  check_disk(z, -1.0, delta, "prefactor_E");
  if (z == cplx(-1.0, 0.0)) throw DomainError("prefactor_E: z = -1 (use e_at_minus_one)");
  side = default_side(z, side);
  const cplx f = f_on_side(z, s, params, side);
  const cplx q = std::sqrt(kPi) * std::pow(s, 2.0 / 3.0) * std::pow(f, 0.25);
  Mat3 m;
  m << 1.0, 0.0, -kI, 0.0, kSqrt2, 0.0, -kI, 0.0, 1.0;
  Mat3 d = Mat3::Zero();
  d(0, 0) = q;
  d(1, 1) = 1.0;
  d(2, 2) = 1.0 / q;
  return global_N(z, side) * m * d / kSqrt2;
}

EAtMinusOne e_at_minus_one(double s, PearceyParams params, double radius, int nodes) {
  if (nodes < 4 || nodes % 2) throw DomainError("e_at_minus_one: nodes must be even and >= 4");
  EAtMinusOne out{Mat3::Zero(), Mat3::Zero()};
  for (int k = 0; k < nodes; ++k) {
    const double t = 2.0 * kPi * (k + 0.5) / nodes;
    const cplx u = std::polar(radius, t);
    const Mat3 e = prefactor_E(-1.0 + u, s, params);
    out.value += e;
    out.derivative += e / u;
  }
  out.value /= static_cast<double>(nodes);
  out.derivative /= static_cast<double>(nodes);
  return out;
}

Mat3 e_minus_one_closed(double s, PearceyParams params) {
  const double c = std::sqrt(c1_checked(s, params));
  const double sp = std::sqrt(kPi) * std::pow(s, 2.0 / 3.0);
  const double t = std::pow(3.0, 0.25), t5 = std::pow(3.0, 1.25);
  auto p2 = [](double e) { return std::pow(2.0, e); };
  Mat3 m;
  m << -kI * p2(1.0 / 12) * t * c * sp, -p2(1.0 / 3) / kSqrt3, -1.0 / (p2(5.0 / 12) * t5 * c * sp),
      -kI * p2(-0.25) * t * c * sp, 2.0 / kSqrt3, 5.0 / (p2(0.75) * t5 * c * sp),
      kI * t * c * sp / p2(19.0 / 12), -5.0 / (p2(4.0 / 3) * kSqrt3),
      25.0 / (p2(25.0 / 12) * t5 * c * sp);
  return m;
}

Vec3 e_prime_minus_one_first_column_closed(double s, PearceyParams params) {
  const SurfaceConstants k = surface_constants(s, params);
  const double c1 = c1_checked(s, params), c3 = k.c3, c = std::sqrt(c1);
  const double sp = std::sqrt(kPi) * std::pow(s, 2.0 / 3.0);
  const double t = std::pow(3.0, 0.75);
  auto p2 = [](double e) { return std::pow(2.0, e); };
  Vec3 v;
  v << -kI * (13.0 * c1 + 108.0 * c3) * sp / (36.0 * p2(11.0 / 12) * t * c),
      kI * (35.0 * c1 - 108.0 * c3) * sp / (72.0 * p2(0.25) * t * c),
      -kI * (83.0 * c1 - 108.0 * c3) * sp / (144.0 * p2(7.0 / 12) * t * c);
  return v;
}

Mat3 local_P(int sign, cplx z, double s, PearceyParams params, CutSide side, double delta) {
  check_s(s);
  const GlobalConstants& g = global_constants();
  if (sign == 1) {
    check_disk(z, 1.0, delta, "local_P");
    return g.ups * local_P(-1, -z, s, params, flip(side), delta) * g.lam;
  }
  if (sign != -1) throw DomainError("local_P: sign must be +1 or -1");
  check_disk(z, -1.0, delta, "local_P");
  if (z == cplx(-1.0, 0.0)) throw DomainError("local_P: z = -1");
  if (on_left_cut(z) && side == CutSide::None)
    throw DomainError("local_P: z on the jump segment needs a side");

  const double s43 = std::pow(s, 4.0 / 3.0);
  const Lambdas l = lambdas(z, s, params, side);
  const cplx f = f_on_side(z, s, params, side);
  const cplx zeta = std::pow(s, 8.0 / 3.0) * f;
  const cplx r = std::sqrt(zeta);
  const Mat3 b = embed(phi_scaled(0.0, zeta));

  const cplx e1 = r + 0.5 * s43 * (l.l3 - l.l1);
  const cplx e3 = -r + 0.5 * s43 * (l.l1 - l.l3);
  Mat3 m = b;
  m.col(0) *= std::exp(e1);
  m.col(2) *= std::exp(e3);
  if (std::abs(std::arg(zeta)) < 0.75 * kPi)
    m.col(1) += b.col(2) * std::exp(e3 + s43 * (l.l3 - l.l2));
  return prefactor_E(z, s, params, default_side(z, side), delta) * m;
}

Mat3 local_jump_sigma3() {
  Mat3 j;
  j << 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, -1.0, 0.0, 0.0;
  return j;
}

Mat3 j1_minus(cplx z, double s, PearceyParams params, CutSide side) {
  check_s(s);
  check_disk(z, -1.0, kDefaultDelta, "j1_minus");
  if (z == cplx(-1.0, 0.0)) throw DomainError("j1_minus: pole at z = -1");
  side = default_side(z, side);
  const cplx f = f_on_side(z, s, params, side);
  const Mat3 n = global_N(z, side);
  Mat3 m;
  m << -1.0, 0.0, -2.0 * kI, 0.0, 0.0, 0.0, -2.0 * kI, 0.0, 1.0;
  return n * m * n.inverse() / (8.0 * std::sqrt(f));
}

Mat3 j1_plus(cplx z, double s, PearceyParams params, CutSide side) {
  const Mat3& u = global_constants().ups;
  return u * j1_minus(-z, s, params, flip(side)) * u;
}

J1Pair j1_matrices(cplx z, double s, PearceyParams params) {
  return {j1_minus(z, s, params), j1_plus(-z, s, params)};
}

Laurent j1_laurent(double s, PearceyParams params, double radius, int nodes) {
  if (nodes < 8 || nodes % 2) throw DomainError("j1_laurent: nodes must be even and >= 8");
  auto run = [&](int n) {
    Laurent c{Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
    for (int k = 0; k < n; ++k) {
      const cplx u = std::polar(radius, 2.0 * kPi * (k + 0.5) / n);
      const Mat3 j = j1_minus(-1.0 + u, s, params);
      c.jm1 += j * u;
      c.j0 += j;
      c.j1 += j / u;
    }
    c.jm1 /= static_cast<double>(n);
    c.j0 /= static_cast<double>(n);
    c.j1 /= static_cast<double>(n);
    return c;
  };
  Laurent full = run(nodes), half = run(nodes / 2);
  const double err = max_abs(Mat3(full.j1 - half.j1)) * radius;
  if (!(err < 1e-6 * (1.0 + max_abs(full.jm1))))
    throw NumericalError("j1_laurent: contour integrals not converged", err);
  return full;
}

Mat3 j1_residue_closed(double s, PearceyParams params) {
  const double c1 = surface_constants(s, params).c1;
  auto p2 = [](double e) { return std::pow(2.0, e); };
  Mat3 m;
  m << 1.0, -p2(4.0 / 3), -p2(5.0 / 3), p2(-1.0 / 3), -2.0, -p2(4.0 / 3), -p2(-5.0 / 3),
      p2(-1.0 / 3), 1.0;
  return m / (16.0 * kSqrt6 * c1);
}

Mat3 R1Data::operator()(cplx z, R1Region region) const {
  if (region == R1Region::Auto) {
    if (std::abs(z + 1.0) < delta)
      region = R1Region::MinusDisk;
    else if (std::abs(z - 1.0) < delta)
      region = R1Region::PlusDisk;
    else
      region = R1Region::Outer;
  }
  Mat3 out = res_minus / (z + 1.0) + res_plus / (z - 1.0);
  if (region == R1Region::MinusDisk) out -= j1_minus(z, s, params);
  if (region == R1Region::PlusDisk) out -= j1_plus(z, s, params);
  return out;
}

R1Data r1_data(double s, PearceyParams params, double delta) {
  check_s(s);
  const Mat3& u = global_constants().ups;
  R1Data d;
  d.s = s;
  d.params = params;
  d.delta = delta;
  d.laurent = j1_laurent(s, params);
  d.res_minus = d.laurent.jm1;
  d.res_plus = -u * d.laurent.jm1 * u;
  d.derivative_at_minus_one = -d.laurent.j1 - 0.25 * d.res_plus;
  d.leading = (d.res_minus + d.res_plus) / std::pow(s, 4.0 / 3.0);
  return d;
}

LocalFrame local_frame(double s, PearceyParams params, double delta) {
  LocalFrame fr;
  fr.f = [=](cplx z) { return conformal_f(z, s, params, delta); };
  fr.f_tilde = [=](cplx z) { return conformal_f_tilde(z, s, params, delta); };
  fr.e_matrix = [=](cplx z) { return prefactor_E(z, s, params, CutSide::None, delta); };
  fr.j1_minus = [=](cplx z) { return j1_minus(z, s, params); };
  fr.j1_plus = [=](cplx z) { return j1_plus(z, s, params); };
  fr.laurent = j1_laurent(s, params);
  return fr;
}

cplx lambda_prime(int j, cplx z, double s, PearceyParams params, CutSide side) {
  check_s(s);
  const cplx v = w(j, z, side);
  const double b = params.rho / (std::pow(2.0, 5.0 / 3.0) * std::pow(s, 2.0 / 3.0)) -
                   3.0 / std::pow(2.0, 4.0 / 3.0);
  const cplx dl_dw = 12.0 / std::pow(4.0, 5.0 / 3.0) * v * v * v + 2.0 * b * v;
  // w^3 - 3w + 2z = 0
  return dl_dw * 2.0 / (3.0 * (1.0 - v * v));
}

Mat3 ScriptFactors::a_value() const {
  const cplx a = std::exp(log_a), b = std::exp(log_b);
  Mat3 m = Mat3::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 1) = a;
  m(2, 2) = a;
  return m;
}

Mat3 ScriptFactors::b_value() const {
  Mat3 m = b_scaled;
  m.col(0) *= std::exp(sqrt_zeta);
  m.col(2) *= std::exp(-sqrt_zeta);
  return m;
}

Mat3 ScriptFactors::conjugate_a(const Mat3& m) const {
  const cplx ratio = std::exp(log_a - log_b);  // a / b
  Mat3 c = m;
  for (int i = 0; i < 3; ++i) {
    if (i != 1) c(i, 1) /= ratio;
  }
  c(1, 0) *= ratio;
  c(1, 2) *= ratio;
  Mat3 u = Mat3::Identity(), ui = Mat3::Identity();
  u(2, 1) = 1.0;
  ui(2, 1) = -1.0;
  return ui * c * u;
}

ScriptFactors script_factors(cplx z, double s, PearceyParams params) {
  check_s(s);
  check_disk(z, -1.0, kDefaultDelta, "script_factors");
  if (z == cplx(-1.0, 0.0) || on_left_cut(z))
    throw DomainError("script_factors: z must avoid -1 and the left segment");
  const double s43 = std::pow(s, 4.0 / 3.0);
  const Lambdas l = lambdas(z, s, params, CutSide::None);
  const cplx f = f_on_side(z, s, params, CutSide::None);
  if (!(std::abs(std::arg(f)) < 0.75 * kPi))
    throw DomainError("script_factors: needs |arg f| < 3pi/4");
  ScriptFactors sf;
  sf.log_a = 0.5 * s43 * (l.l1 + l.l3);
  sf.log_b = s43 * l.l2;
  sf.sqrt_zeta = s43 * std::sqrt(f);
  sf.b_scaled = embed(phi_scaled(0.0, std::pow(s, 8.0 / 3.0) * f));

  const cplx la = 0.5 * s43 * (lambda_prime(1, z, s, params) + lambda_prime(3, z, s, params));
  const cplx lb = s43 * lambda_prime(2, z, s, params);
  sf.a_inv_da = Mat3::Zero();
  sf.a_inv_da(0, 0) = la;
  sf.a_inv_da(1, 1) = lb;
  sf.a_inv_da(2, 1) = la - lb;
  sf.a_inv_da(2, 2) = la;
  return sf;
}

Mat3 b_inv_db(double alpha, cplx zeta) {
  if (zeta == cplx(0.0, 0.0)) throw DomainError("b_inv_db: zeta = 0");
  if (!(std::abs(std::arg(zeta)) < 0.75 * kPi)) throw DomainError("b_inv_db: zeta outside sector I");
  const cplx x = std::sqrt(zeta);
  const BesselPair b = modified_bessel(alpha, x);
  const cplx k = 1.0 + alpha * alpha / (x * x);
  Mat2 p, dp;
  p << b.i_val, kI / kPi * b.k_val, kPi * kI * x * b.di_val, -x * b.dk_val;
  dp << b.di_val / (2.0 * x), kI / kPi * b.dk_val / (2.0 * x), 0.5 * kPi * kI * k * b.i_val,
      -0.5 * k * b.k_val;
  Mat3 out = embed(p.inverse() * dp);
  out(1, 1) = 0.0;
  return out;
}

}  // namespace pearcey
