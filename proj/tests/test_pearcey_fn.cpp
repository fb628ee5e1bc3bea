#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "pearcey/pearcey_fn.hpp"

using namespace pearcey;

namespace {

// Trapezoid rule on the real line for the k-th moment of p_0; the integrand
// is entire and decays like e^{-s^4/4}, so the rule converges geometrically.
cplx p0_trapezoid(int k, double x, double rho) {
  const double h = 0.01, L = 12.0;
  cplx sum = 0.0;
  for (double s = -L; s <= L + 1e-12; s += h)
    sum += std::pow(cplx(0, s), k) * std::exp(cplx(-s * s * s * s / 4 - rho * s * s / 2, s * x));
  return sum * h;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_SUITE("pearcey_fn") {

TEST_CASE("p0 on the real axis matches a trapezoid oracle") {
  for (double rho : {-1.0, 0.0, 1.5})
    for (double x : {-2.5, 0.0, 0.7, 3.0}) {
      auto t = pearcey_p(0, x, {rho});
      CHECK(rel(t.p, p0_trapezoid(0, x, rho)) < 1e-12);
      CHECK(rel(t.dp, p0_trapezoid(1, x, rho)) < 1e-12);
      CHECK(rel(t.d2p, p0_trapezoid(2, x, rho)) < 1e-12);
    }
}

TEST_CASE("p0(0) = Gamma(1/4)/sqrt(2)") {
  CHECK(std::abs(pearcey_p(0, 0.0, {0.0}).p - std::tgamma(0.25) / std::sqrt(2.0)) < 1e-13);
}

TEST_CASE("third-order ODE residual is small for every contour") {
  for (int j = 0; j < 6; ++j)
    for (cplx z : {cplx(0.3, 0.2), cplx(-4, 3), cplx(6, -7), cplx(0, 9.5)})
      for (double rho : {-4.0, 0.0, 2.0}) {
        auto t = pearcey_p(j, z, {rho});
        double scale = 1.0 + std::abs(t.p) + std::abs(t.dp) + std::abs(t.d2p);
        CHECK(std::abs(ode_residual(j, z, {rho})) / scale < 1e-8);
      }
}

TEST_CASE("q is odd and its moments satisfy the adjoint ODE") {
  for (double y : {0.4, 1.7, 3.2}) {
    CHECK(std::abs(pearcey_q(y, {0.6}).p + pearcey_q(-y, {0.6}).p) < 1e-12);
    auto m = pearcey_q_moments(y, {0.6});
    // q''' = -y q + rho q'
    CHECK(std::abs(m[3] - (-y * m[0] + 0.6 * m[1])) < 1e-10 * (1 + std::abs(m[0])));
  }
}

TEST_CASE("kappa coefficients") {
  for (double r : {-2.0, 0.0, 0.5, 3.0}) {
    auto k = kappa_coeffs({r});
    CHECK(k.kappa3 == doctest::Approx(r * r * r / 54 - r / 6).epsilon(1e-14));
    double k6 = std::pow(r, 6) / 5832 - std::pow(r, 4) / 162 - r * r / 72 + 7.0 / 36;
    CHECK(k.kappa6 == doctest::Approx(k6).epsilon(1e-14));
    CHECK(k.kappa6_tilde == doctest::Approx(k6 + r / 3 * k.kappa3 - 1.0 / 3).epsilon(1e-14));
    CHECK(k.kappa6_hat ==
          doctest::Approx(k6 - k.kappa3 * k.kappa3 + r * r / 9 - 1.0 / 3).epsilon(1e-14));
  }
}

TEST_CASE("Psi jumps on all six rays") {
  for (double rho : {-1.0, 0.0, 1.0})
    for (int k = 0; k < 6; ++k) {
      const cplx z = std::polar(2.0, psi_ray_angle(k));
      const int left = psi_ray_orientation(k) > 0 ? k : (k + 5) % 6;
      const int right = psi_ray_orientation(k) > 0 ? (k + 5) % 6 : k;
      Mat3 plus = psi_in_sector(left, z, {rho});
      Mat3 minus = psi_in_sector(right, z, {rho});
      CHECK(max_abs(Mat3(minus.inverse() * plus - psi_jump(k))) < 1e-8);
    }
}

TEST_CASE("Wronskian of psi_tilde does not depend on z") {
  const cplx w0 = psi_tilde(cplx(0.1, 0.1), {0.7}).determinant();
  CHECK(std::abs(w0) > 1e-3);
  for (cplx z : {cplx(2, 1), cplx(-3, -2), cplx(0, 5)})
    CHECK(std::abs(psi_tilde(z, {0.7}).determinant() - w0) < 1e-9 * std::abs(w0));
}

TEST_CASE("large-z expansion improves with |z|") {
  for (int j : {0, 1, 4}) {
    const cplx dir = j == 0 ? cplx(0, 1) : std::polar(1.0, j == 1 ? -kPi / 2 : 2.0);
    auto err = [&](double r) {
      auto a = pearcey_asymptotic(j, r * dir, {1.0});
      auto e = pearcey_p(j, r * dir, {1.0});
      return std::abs(a.p / e.p - 1.0);
    };
    const double e15 = err(15.0), e30 = err(30.0);
    CHECK(e30 < e15);
    CHECK(e30 < 1e-3);
  }
  CHECK_THROWS_AS(pearcey_asymptotic(0, 20.0, {0.0}), DomainError);
  CHECK_THROWS_AS(pearcey_asymptotic(2, cplx(0, 20), {0.0}), DomainError);
}

TEST_CASE("sector lookup") {
  CHECK_THROWS_AS(psi_sector_index(0.0), DomainError);
  CHECK_THROWS_AS(psi_sector_index(std::polar(3.0, psi_ray_angle(2))), DomainError);
  for (int k = 0; k < 6; ++k) {
    const double mid = 0.5 * (psi_ray_angle(k) + psi_ray_angle((k + 1) % 6) +
                              (k == 5 ? 2 * kPi : 0.0));
    CHECK(psi_sector_index(std::polar(1.5, mid)) == k);
  }
  CHECK_THROWS_AS(pearcey_p(6, 1.0, {0.0}), DomainError);
}

TEST_CASE("memo cache is consistent under concurrent use") {
  clear_pearcey_cache();
  CHECK(pearcey_cache_size() == 0);
  std::vector<cplx> pts;
  for (int i = 0; i < 40; ++i) pts.push_back(cplx(-4 + 0.2 * i, 0.1 * (i % 7)));
  std::vector<cplx> serial;
  for (cplx z : pts) serial.push_back(pearcey_p(2, z, {0.3}).p);
  clear_pearcey_cache();
  std::vector<cplx> parallel(pts.size());
  std::vector<std::thread> th;
  for (int t = 0; t < 4; ++t)
    th.emplace_back([&, t] {
      for (std::size_t i = t; i < pts.size(); i += 4) parallel[i] = pearcey_p(2, pts[i], {0.3}).p;
    });
  for (auto& x : th) x.join();
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(parallel[i] == serial[i]);
  CHECK(pearcey_cache_size() > 0);
}

}
