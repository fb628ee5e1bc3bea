#include <doctest.h>

#include <cmath>

#include "pearcey/surface.hpp"

using namespace pearcey;

namespace {
const cplx kPts[] = {{0.3, 0.4}, {-2.0, 1.5}, {1.7, -0.6}, {-0.5, -3.0}, {4.0, 2.0}};
}

TEST_SUITE("surface") {

TEST_CASE("w_j are the roots of w^3 - 3w + 2z") {
  for (cplx z : kPts) {
    cplx w1 = w(1, z), w2 = w(2, z), w3 = w(3, z);
    CHECK(std::abs(w1 + w2 + w3) < 1e-12);
    CHECK(std::abs(w1 * w2 + w2 * w3 + w3 * w1 + 3.0) < 1e-11);
    CHECK(std::abs(w1 * w2 * w3 + 2.0 * z) < 1e-11);
    for (cplx x : {w1, w2, w3}) CHECK(std::abs(x * x * x - 3.0 * x + 2.0 * z) < 1e-11);
  }
}

TEST_CASE("eta") {
  CHECK(std::abs(eta(0.0) - kI) < 1e-15);
  for (cplx z : kPts) {
    CHECK(eta(z).imag() > 0);
    CHECK(std::abs(eta(z) * eta(-z) + 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(eta(2.0), DomainError);
}

TEST_CASE("lambda sum and symmetries") {
  const double s = 5.0;
  for (double rho : {-1.0, 0.0, 2.0}) {
    const double sum = -9.0 / std::pow(2.0, 7.0 / 3) + 3 * rho / (std::pow(2.0, 2.0 / 3) * std::pow(s, 2.0 / 3));
    for (cplx z : kPts) {
      cplx l1 = lambda(1, z, s, {rho}), l2 = lambda(2, z, s, {rho}), l3 = lambda(3, z, s, {rho});
      CHECK(std::abs(l1 + l2 + l3 - sum) < 1e-12 * (1 + std::abs(l1)));
      for (int j = 1; j <= 3; ++j)
        CHECK(std::abs(lambda(j, std::conj(z), s, {rho}) - std::conj(lambda(j, z, s, {rho}))) < 1e-12);
      CHECK(std::abs(lambda(1, -z, s, {rho}) - l1) < 1e-12);
      CHECK(std::abs(lambda(2, -z, s, {rho}) - l3) < 1e-12);
    }
  }
}

TEST_CASE("boundary values are exact limits") {
  for (double x : {1.5, 3.0}) {
    for (int j = 1; j <= 2; ++j) {
      cplx up = w(j, x, CutSide::Upper);
      cplx near = w(j, cplx(x, 1e-10));
      CHECK(std::abs(up - near) < 1e-8);
    }
    // sheet 1 continues into sheet 2 across (1, inf)
    CHECK(std::abs(w(1, x, CutSide::Upper) - w(2, x, CutSide::Lower)) < 1e-13);
  }
}

TEST_CASE("lambda_1 + lambda_3 - 2 lambda_2 at -1") {
  for (double rho : {-1.0, 0.0, 1.0}) {
    auto d = lambda_123_direct(6.0, {rho});
    CHECK(std::abs(d - lambda_123_closed(6.0, {rho})) < 1e-10);
    CHECK(lambda_123_closed(6.0, {rho}) ==
          doctest::Approx(-9.0 / std::pow(2.0, 7.0 / 3) -
                          3 * rho / (std::pow(2.0, 2.0 / 3) * std::pow(6.0, 2.0 / 3))));
  }
}

TEST_CASE("local series orders") {
  using T = SeriesTarget;
  using P = SeriesPoint;
  struct Case { T t; P p; int j; };
  for (Case c : {Case{T::W, P::MinusOne, 1}, Case{T::W, P::PlusOne, 2}, Case{T::Lambda, P::MinusOne, 3},
                 Case{T::Lambda, P::Infinity, 1}}) {
    auto r = series_check(c.t, c.p, c.j, 5.0, {0.5});
    CHECK(std::isfinite(r.empirical_order));
    CHECK(r.max_residual < 1e-2);
    CHECK(r.residuals.size() == r.distances.size());
  }
}

TEST_CASE("decay of Re(lambda_2 - lambda_1) on the right") {
  for (cplx z : {cplx(2, 2), cplx(1.5, 0.5), cplx(3, -1)})
    CHECK((lambda_star(2, z) - lambda_star(1, z)).real() < 0);
}

TEST_CASE("sign chart symmetries") {
  const int n = 21;
  auto c12 = sign_chart(1, 2, -3, 3, -3, 3, n, n);
  auto c13 = sign_chart(1, 3, -3, 3, -3, 3, n, n);
  auto c23 = sign_chart(2, 3, -3, 3, -3, 3, n, n);
  REQUIRE(c12.size() == std::size_t(n * n));
  auto at = [&](const std::vector<SignSample>& c, int ix, int iy) {
    const auto& p = c[std::size_t(iy) * n + ix];
    return p;
  };
  auto sgn = [](double v) { return std::abs(v) < 1e-11 ? 0 : (v > 0 ? 1 : -1); };
  // grid layout: x fastest
  CHECK(at(c12, 1, 0).x > at(c12, 0, 0).x);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      if (iy == n / 2) continue;  // real axis carries the cuts
      const int jx = n - 1 - ix, jy = n - 1 - iy;
      CHECK(sgn(at(c12, ix, iy).value) == sgn(at(c12, ix, jy).value));
      CHECK(sgn(at(c23, ix, iy).value) == sgn(at(c23, ix, jy).value));
      CHECK(sgn(at(c12, ix, iy).value) == sgn(at(c13, jx, iy).value));
      CHECK(sgn(at(c23, ix, iy).value) == -sgn(at(c23, jx, iy).value));
    }
}

TEST_CASE("sheet index is checked") {
  CHECK_THROWS_AS(w(0, 1.0), DomainError);
  CHECK_THROWS_AS(w(4, 1.0), DomainError);
}

}
