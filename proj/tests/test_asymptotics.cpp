#include <doctest.h>

#include <cmath>

#include "pearcey/asymptotics.hpp"

using namespace pearcey;

TEST_SUITE("asymptotics") {

TEST_CASE("expansion terms at s = 1, rho = 1") {
  auto t = F_expansion(1.0, 1.0, 0.25);
  CHECK(t.leading == doctest::Approx(-9.0 / std::pow(2.0, 17.0 / 3)).epsilon(1e-15));
  CHECK(t.quad == doctest::Approx(0.25));
  CHECK(t.frac == doctest::Approx(-1.0 / std::pow(2.0, 10.0 / 3)).epsilon(1e-15));
  CHECK(t.log == 0.0);
  CHECK(t.rho4 == doctest::Approx(1.0 / 216));
  CHECK(t.total() == doctest::Approx(t.leading + t.quad + t.frac + t.rho4 + 0.25));
  CHECK_THROWS_AS(F_expansion(0.0, 0.0), DomainError);
}

TEST_CASE("derivative expansions are derivatives of the expansion") {
  const double h = 1e-5;
  for (double s : {2.0, 5.0, 7.0})
    for (double rho : {-1.0, 0.5}) {
      const double ds = (F_expansion(s + h, rho).total() - F_expansion(s - h, rho).total()) / (2 * h);
      const double dr = (F_expansion(s, rho + h).total() - F_expansion(s, rho - h).total()) / (2 * h);
      CHECK(dFds_expansion(s, rho) == doctest::Approx(ds).epsilon(1e-8));
      CHECK(dFdrho_expansion(s, rho) == doctest::Approx(dr).epsilon(1e-8));
    }
  // closed form quoted for the rho derivative
  const double s = 7.0, r = 0.5;
  CHECK(dFdrho_expansion(s, r) ==
        doctest::Approx(s * s / 4 - r * std::pow(s, 4.0 / 3) / std::pow(2.0, 7.0 / 3) +
                        r * r * r / 54)
            .epsilon(1e-14));
}

namespace {
std::vector<GapSample> synthetic(double rho, double c, double a, double b = 0.0) {
  std::vector<GapSample> v;
  for (double s : {4.0, 5.0, 6.0, 7.0, 8.0})
    v.push_back({s, F_expansion(s, rho, c).total() + a * std::pow(s, -2.0 / 3) +
                        b * std::pow(s, -4.0 / 3)});
  return v;
}
}  // namespace

TEST_CASE("fit recovers an injected constant") {
  auto rep = fit_constant(synthetic(0.0, 0.7, 0.3), 0.0);
  CHECK(std::abs(rep.c_hat - 0.7) < 1e-10);
  CHECK(rep.coeffs.size() == 1);
  CHECK(rep.coeffs[0] == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(rep.residual_exponent == doctest::Approx(-2.0 / 3).epsilon(1e-8));
  CHECK(rep.samples.size() == 5);

  auto two = fit_constant(synthetic(1.0, -0.2, 0.1, 0.05), 1.0, 1);
  CHECK(std::abs(two.c_hat + 0.2) < 1e-9);
  CHECK(two.coeffs.size() == 2);
}

TEST_CASE("fit preconditions") {
  auto v = synthetic(0.0, 0.0, 0.1);
  v.pop_back();
  CHECK_THROWS_AS(fit_constant(v, 0.0), DomainError);
  auto w = synthetic(0.0, 0.0, 0.1);
  w[0].s = 3.0;
  CHECK_THROWS_AS(fit_constant(w, 0.0), DomainError);
  std::vector<GapSample> narrow;
  for (int i = 0; i < 5; ++i) narrow.push_back({4.0 + 1e-3 * i, -7.0 - i});
  CHECK_THROWS_AS(fit_constant(narrow, 0.0), NumericalError);
}

TEST_CASE("log-log slope of an exact power law") {
  std::vector<GapSample> v;
  for (double s : {4.0, 5.0, 6.0, 7.0, 8.0}) v.push_back({s, -3.0 * std::pow(s, 8.0 / 3)});
  CHECK(forrester_exponent(v) == doctest::Approx(8.0 / 3).epsilon(1e-12));
}

}
