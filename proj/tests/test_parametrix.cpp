#include <doctest.h>

#include <cmath>

#include "pearcey/parametrix.hpp"

using namespace pearcey;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
const cplx kZ[] = {{0.5, 0.2}, {3.0, -4.0}, {-6.0, 2.0}, {12.0, 0.0}, {-25.0, -8.0}, {40.0, 30.0}};
}  // namespace

TEST_SUITE("parametrix") {

TEST_CASE("I0(1) against its power series") {
  double sum = 0.0, term = 1.0;
  for (int k = 0; k < 30; ++k) {
    sum += term;
    term *= 0.25 / ((k + 1.0) * (k + 1.0));
  }
  CHECK(std::abs(modified_bessel(0.0, 1.0).i_val - sum) < 1e-15);
}

TEST_CASE("half-integer orders in closed form") {
  for (cplx z : kZ) {
    auto b = modified_bessel(0.5, z);
    auto m = modified_bessel(-0.5, z);
    const cplx c = std::sqrt(2.0 / (kPi * z));
    CHECK(rel(b.i_val, c * std::sinh(z)) < 1e-12);
    CHECK(rel(m.i_val, c * std::cosh(z)) < 1e-12);
    CHECK(rel(b.k_val, std::sqrt(kPi / (2.0 * z)) * std::exp(-z)) < 1e-12);
    CHECK(rel(b.k_val, m.k_val) < 1e-12);
  }
}

TEST_CASE("Wronskian I K' - I' K = -1/z") {
  for (double a : {0.0, 0.3, -0.7, 1.0})
    for (cplx z : kZ) {
      auto b = modified_bessel_scaled(a, z.real() >= 0 ? z : -z);
      const cplx zz = z.real() >= 0 ? z : -z;
      CHECK(std::abs((b.i_val * b.dk_val - b.di_val * b.k_val) * zz + 1.0) < 1e-11);
    }
}

TEST_CASE("integer order symmetry and scaling") {
  for (cplx z : kZ) {
    auto p = modified_bessel(1.0, z);
    auto m = modified_bessel(-1.0, z);
    CHECK(rel(m.i_val, p.i_val) < 1e-12);
    CHECK(rel(m.k_val, p.k_val) < 1e-12);
    if (z.real() >= 0 && std::abs(z) < 30) {
      auto s = modified_bessel_scaled(1.0, z);
      CHECK(rel(s.i_val, p.i_val * std::exp(-z)) < 1e-12);
      CHECK(rel(s.k_val, p.k_val * std::exp(z)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(modified_bessel(1.5, 1.0), DomainError);
  CHECK_THROWS_AS(modified_bessel(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(modified_bessel(0.0, -2.0), DomainError);
}

TEST_CASE("Bessel model: unit determinant and jumps") {
  for (double a : {0.0, 0.5}) {
    for (cplx z : kZ)
      if (z.imag() != 0.0) CHECK(std::abs(phi_bessel(a, z).determinant() - 1.0) < 1e-10);
    const cplx z1 = std::polar(4.0, 0.75 * kPi), z3 = std::polar(4.0, -0.75 * kPi);
    CHECK(max_abs(Mat2(phi_bessel_in_sector(a, z1, 1) -
                       phi_bessel_in_sector(a, z1, 2) * phi_bessel_jump(a, 1))) < 1e-9);
    CHECK(max_abs(Mat2(phi_bessel_in_sector(a, z3, 3) -
                       phi_bessel_in_sector(a, z3, 1) * phi_bessel_jump(a, 3))) < 1e-9);
    CHECK(max_abs(Mat2(phi_bessel(a, cplx(-4.0, 0.0)) -
                       phi_bessel(a, cplx(-4.0, -0.0)) * phi_bessel_jump(a, 2))) < 1e-9);
  }
}

TEST_CASE("Bessel model approaches its behaviour at infinity") {
  auto dev = [](double r) {
    const cplx z = std::polar(r, 0.4);
    const cplx q = std::pow(kPi * kPi * z, 0.25);
    const cplx e = std::exp(std::sqrt(z));
    Mat2 l, rr;
    l << q, 0, 0, 1.0 / q;
    rr << 1.0 / e, 0, 0, e;
    return max_abs(Mat2(l * (phi_bessel(0.0, z) - phi_bessel_infinity(0.0, z)) * rr));
  };
  CHECK(dev(400.0) < dev(100.0));
  CHECK(dev(400.0) < 1e-2);
}

TEST_CASE("global parametrix") {
  const auto& g = global_constants();
  for (cplx z : {cplx(0.3, 0.4), cplx(-2, 1), cplx(0.5, -3)}) {
    CHECK(std::abs(global_N(z).determinant() - cplx(0, -3 * std::sqrt(3.0))) < 1e-12);
    CHECK(max_abs(Mat3(global_N(z) - g.ups * global_N(-z) * g.lam)) < 1e-10);
  }
  Mat3 j0;
  j0 << 0, 1, 0, -1, 0, 0, 0, 0, 1;
  for (double x : {1.5, 3.5})
    CHECK(max_abs(Mat3(global_N(x, CutSide::Upper) - global_N(x, CutSide::Lower) * j0)) < 1e-8);
  for (double x : {-1.5, -3.5})
    CHECK(max_abs(Mat3(global_N(x, CutSide::Upper) -
                       global_N(x, CutSide::Lower) * local_jump_sigma3())) < 1e-8);
  CHECK_THROWS_AS(global_N_normalized(2.0), DomainError);
}

TEST_CASE("conformal maps") {
  const double s = 6.0;
  CHECK(std::abs(conformal_f(cplx(-1.0, 0.0), s, {0.0})) < 1e-12);
  // f is real on the real axis near -1 with a nonzero slope there
  const double h = 1e-4;
  const cplx slope = (conformal_f(cplx(-1.0, h), s, {0.0}) - conformal_f(cplx(-1.0, -h), s, {0.0})) /
                     cplx(0.0, 2 * h);
  CHECK(std::abs(slope) > 1e-3);
  CHECK(std::abs(slope.imag()) < 1e-6 * std::abs(slope));
  for (cplx z : {cplx(0.9, 0.1), cplx(1.2, -0.05)})
    CHECK(std::abs(conformal_f_tilde(z, s, {0.5}) - conformal_f(-z, s, {0.5})) < 1e-12);
  CHECK_THROWS_AS(conformal_f(cplx(0.0, 0.0), s, {0.0}), DomainError);
}

TEST_CASE("prefactor E is analytic near -1") {
  for (double rho : {0.0, 1.0}) {
    for (double x : {-1.1, -1.25})
      CHECK(max_abs(Mat3(prefactor_E(x, 6.0, {rho}, CutSide::Upper) -
                         prefactor_E(x, 6.0, {rho}, CutSide::Lower))) < 1e-8);
    auto e = e_at_minus_one(6.0, {rho});
    CHECK(max_abs(Mat3(e.value - e_minus_one_closed(6.0, {rho}))) < 1e-7);
    CHECK((e.derivative.col(0) - e_prime_minus_one_first_column_closed(6.0, {rho})).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("residue of J1 at -1") {
  for (double rho : {-1.0, 0.0, 1.0})
    CHECK(max_abs(Mat3(j1_laurent(6.0, {rho}).jm1 - j1_residue_closed(6.0, {rho}))) < 1e-8);
}

TEST_CASE("local parametrix matches N better as s grows") {
  const cplx z = cplx(-1.0, 0.0) + std::polar(kDefaultDelta - 1e-9, 0.7);
  double prev = 1e9;
  for (double s : {4.0, 8.0, 16.0}) {
    const double d = max_abs(Mat3(local_P(-1, z, s, {0.0}) * global_N(z).inverse() - Mat3::Identity()));
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("local parametrix symmetry between the two disks") {
  const auto& g = global_constants();
  const cplx z(0.9, 0.15);
  const Mat3 lhs = local_P(1, z, 6.0, {0.0});
  const Mat3 rhs = g.ups * local_P(-1, -z, 6.0, {0.0}) * g.lam;
  CHECK(max_abs(Mat3(lhs - rhs)) < 1e-10 * (1 + max_abs(lhs)));
}

}
