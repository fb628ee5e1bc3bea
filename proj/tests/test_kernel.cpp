#include <doctest.h>

#include <cmath>

#include "pearcey/kernel.hpp"

using namespace pearcey;

TEST_SUITE("kernel") {

TEST_CASE("Brezin-Hikami and RH representations agree") {
  for (double rho : {-1.0, 0.0, 1.0})
    for (double x : {-3.0, -1.5, 0.0, 1.5, 3.0})
      for (double y : {-2.9, -1.4, 0.1, 1.6, 2.95}) {
        double bh = kernel_bh(x, y, {rho});
        auto rh = kernel_rh(x, y, {rho});
        CHECK(std::abs(bh - rh.value) <= 1e-8 * (1 + std::abs(bh)));
        CHECK(std::abs(rh.imag_residual) < 1e-8);
      }
}

TEST_CASE("diagonal value is the limit of the off-diagonal kernel") {
  for (double x : {-2.0, 0.0, 0.8}) {
    const double d = kernel_diag(x, {0.4});
    // quotient branch forced, step large enough to avoid cancellation
    const double h = 1e-3;
    const double sym = 0.5 * (kernel_bh(x, x + h, {0.4}, 0.0) + kernel_bh(x, x - h, {0.4}, 0.0));
    CHECK(std::abs(sym - d) < 1e-5);
    CHECK(kernel_bh(x, x, {0.4}) == doctest::Approx(d).epsilon(1e-14));
  }
}

TEST_CASE("Taylor branch joins the quotient branch") {
  for (double x : {-1.0, 0.4, 2.5}) {
    const double y = x + 0.9 * kNearDiagonal;
    CHECK(std::abs(kernel_bh(x, y, {0.5}) - kernel_bh(x, y, {0.5}, 0.0)) < 1e-9);
  }
}

TEST_CASE("node data path matches the direct path") {
  auto a = node_data(0.3, {-0.5});
  auto b = node_data(-1.2, {-0.5});
  CHECK(kernel_pair(a, b) == doctest::Approx(kernel_bh(0.3, -1.2, {-0.5})).epsilon(1e-14));
  CHECK(std::abs(kernel_numerator(0.7, 0.7, {0.0})) < 1e-14);
}

TEST_CASE("integrable form reproduces the kernel") {
  // K(x, y) = f(x)^t h(y) / (x - y)
  const double x = 0.6, y = -1.1;
  auto fx = vectors_fh(x, {0.2});
  auto fy = vectors_fh(y, {0.2});
  const cplx k = fx.f.transpose() * fy.h;
  CHECK(std::abs(k / (x - y) - kernel_bh(x, y, {0.2})) < 1e-9);
}

TEST_CASE("symmetry defect is finite and reported") {
  CHECK(std::isfinite(symmetry_defect(0.5, -0.3, {1.0})));
  CHECK_THROWS_AS(kernel_rh(1.0, 1.0, {0.0}), DomainError);
}

}
