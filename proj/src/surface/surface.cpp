#include "pearcey/surface.hpp"

#include <cmath>
#include <limits>

namespace pearcey {

namespace {

bool on_real_cut(cplx z) { return z.imag() == 0.0 && std::abs(z.real()) > 1.0; }

void check_sheet(int j) {
  if (j < 1 || j > 3) throw DomainError("sheet index must be 1, 2 or 3");
}

// Principal cube root with arg eta in (0, pi]; eta on the negative axis
// comes back with a +0 imaginary part, which std::arg maps to pi.
cplx cbrt_upper(cplx e) { return std::polar(std::cbrt(std::abs(e)), std::arg(e) / 3.0); }

const double k23 = std::pow(2.0, 2.0 / 3.0);

}  // namespace

cplx eta(cplx z, CutSide side) {
  if (on_real_cut(z)) {
    if (side == CutSide::None) throw DomainError("eta: z on a branch cut needs a side");
    const double x = z.real();
    // 1 - (x + i0 sigma)^2 has imaginary part of sign -sign(x) sigma
    const double sig = (x > 0 ? -1.0 : 1.0) * (side == CutSide::Upper ? 1.0 : -1.0);
    return cplx(-x - sig * std::sqrt(x * x - 1.0), 0.0);
  }
  cplx e = kI * std::sqrt(1.0 - z * z) - z;
  if (z.imag() == 0.0) e = cplx(e.real(), std::abs(e.imag()));
  return e;
}

cplx w(int j, cplx z, CutSide side) {
  check_sheet(j);
  if (on_real_cut(z) && side == CutSide::None) {
    // analytic across the other sheet's cut; either limit is the value
    if ((j == 2 && z.real() < -1.0) || (j == 3 && z.real() > 1.0))
      side = CutSide::Upper;
    else
      throw DomainError("w: z on the sheet's cut needs a side");
  }
  cplx c = cbrt_upper(eta(z, side));
  cplx a = std::pow(kOmega, j - 2);
  return a * c + 1.0 / (a * c);
}

cplx lambda_star(int j, cplx z, CutSide side) {
  cplx v = w(j, z, side);
  cplx v2 = v * v;
  return 3.0 / std::pow(4.0, 5.0 / 3.0) * v2 * v2 - 3.0 / std::pow(2.0, 4.0 / 3.0) * v2;
}

cplx lambda(int j, cplx z, double s, PearceyParams params, CutSide side) {
  if (!(s > 0.0)) throw DomainError("lambda: s must be positive");
  cplx v = w(j, z, side);
  cplx v2 = v * v;
  double b = params.rho / (std::pow(2.0, 5.0 / 3.0) * std::pow(s, 2.0 / 3.0)) -
             3.0 / std::pow(2.0, 4.0 / 3.0);
  return 3.0 / std::pow(4.0, 5.0 / 3.0) * v2 * v2 + b * v2;
}

SurfaceConstants surface_constants(double s, PearceyParams params) {
  if (!(s > 0.0)) throw DomainError("surface_constants: s must be positive");
  const double r = params.rho, s23 = std::pow(s, 2.0 / 3.0), r3 = std::sqrt(3.0);
  SurfaceConstants c;
  c.d0 = 3.0 * std::pow(2.0, -7.0 / 3.0) - std::pow(2.0 * s, -2.0 / 3.0) * r;
  c.d1 = (-2.0 + std::pow(2.0 / s, 2.0 / 3.0) * r) / 8.0;
  c.c0 = r / (std::pow(2.0, 5.0 / 3.0) * s23) - 9.0 / std::pow(2.0, 10.0 / 3.0);
  c.c1 = r3 / std::pow(2.0, 5.0 / 6.0) - r / (r3 * std::pow(2.0, 1.0 / 6.0) * s23);
  c.c2 = k23 / 3.0 + std::pow(2.0, 1.0 / 3.0) * r / (9.0 * s23);
  c.c3 = 7.0 * r / (108.0 * r3 * std::pow(2.0, 1.0 / 6.0) * s23) -
         165.0 / (108.0 * r3 * std::pow(2.0, 5.0 / 6.0));
  return c;
}

cplx lambda_123_direct(double s, PearceyParams params) {
  return lambda(1, -1.0, s, params) + lambda(3, -1.0, s, params) -
         2.0 * lambda(2, -1.0, s, params);
}

double lambda_123_closed(double s, PearceyParams params) {
  return -9.0 / std::pow(2.0, 7.0 / 3.0) -
         3.0 * params.rho / (k23 * std::pow(s, 2.0 / 3.0));
}

cplx series_value(SeriesTarget target, SeriesPoint point, int j, cplx z, double s,
                  PearceyParams params) {
  check_sheet(j);
  const bool upper = z.imag() > 0.0;
  const cplx om = kOmega, om2 = kOmega * kOmega;
  if (point == SeriesPoint::Infinity) {
    if (j == 2) throw DomainError("series_value: no expansion of sheet 2 at infinity");
    cplx u = std::pow(z, 1.0 / 3.0);
    // sheet 1 picks up omega^2 / omega on the leading power, sheet 3 none
    cplx lead = j == 3 ? 1.0 : (upper ? om2 : om);
    cplx sub = j == 3 ? 1.0 : (upper ? om : om2);
    if (target == SeriesTarget::W) {
      const double c = std::cbrt(2.0);
      return -c * lead * u - sub / c / u + lead / (6.0 * k23) * std::pow(u, -5) -
             sub / (12.0 * c) * std::pow(u, -7) + lead / (18.0 * std::cbrt(4.0)) * std::pow(u, -11);
    }
    auto k = surface_constants(s, params);
    return 0.75 * lead * std::pow(u, 4) +
           params.rho * sub / (2.0 * std::pow(s, 2.0 / 3.0)) * u * u - k.d0 +
           k.d1 * lead / (u * u);
  }
  const bool minus = point == SeriesPoint::MinusOne;
  if (minus && j == 2) throw DomainError("series_value: no expansion of sheet 2 at -1");
  if (!minus && j == 3) throw DomainError("series_value: no expansion of sheet 3 at +1");
  cplx t = std::sqrt(minus ? z + 1.0 : z - 1.0);
  // odd-power sign: sheet 1 vs its partner, and at +1 also the half-plane
  double sg = (j == 1) ? 1.0 : -1.0;
  if (!minus && !upper) sg = -sg;
  if (target == SeriesTarget::W) {
    const double a = std::sqrt(2.0 / 3.0), b = 5.0 / (54.0 * std::sqrt(6.0));
    if (minus) return -1.0 + sg * a * t + t * t / 9.0 + sg * b * t * t * t;
    return 1.0 + sg * kI * a * t + t * t / 9.0 - sg * kI * b * t * t * t;
  }
  auto k = surface_constants(s, params);
  if (minus) return k.c0 + sg * k.c1 * t + k.c2 * t * t + sg * k.c3 * t * t * t;
  return k.c0 - sg * kI * k.c1 * t - k.c2 * t * t + sg * kI * k.c3 * t * t * t;
}

SeriesReport series_check(SeriesTarget target, SeriesPoint point, int j, double s,
                          PearceyParams params) {
  const double angles[] = {0.7, 2.2, -0.7, -2.2};
  const bool inf = point == SeriesPoint::Infinity;
  const double d1 = inf ? 10.0 : 1e-2, d2 = inf ? 100.0 : 1e-3;
  const double c = point == SeriesPoint::MinusOne ? -1.0 : point == SeriesPoint::PlusOne ? 1.0 : 0.0;
  auto direct = [&](cplx z) {
    return target == SeriesTarget::W ? w(j, z) : lambda(j, z, s, params);
  };
  SeriesReport rep{0.0, 0.0, {}, {}};
  for (double a : angles) {
    double r[2];
    const double ds[2] = {d1, d2};
    for (int k = 0; k < 2; ++k) {
      cplx z = c + std::polar(ds[k], a);
      r[k] = std::abs(direct(z) - series_value(target, point, j, z, s, params));
      rep.distances.push_back(ds[k]);
      rep.residuals.push_back(r[k]);
      rep.max_residual = std::max(rep.max_residual, r[k]);
    }
    rep.empirical_order += std::log(r[0] / r[1]) / std::log(d1 / d2) / 4.0;
  }
  return rep;
}

double lambda_constant_richardson(double s, PearceyParams params, double r1, double r2,
                                  double phi) {
  auto k = surface_constants(s, params);
  auto g = [&](double r) {
    cplx z = std::polar(r, phi);
    cplx u2 = std::pow(z, 2.0 / 3.0);
    return lambda(3, z, s, params) - 0.75 * u2 * u2 -
           params.rho / (2.0 * std::pow(s, 2.0 / 3.0)) * u2 - k.d1 / u2;
  };
  const double b = std::pow(r2 / r1, 4.0 / 3.0);
  return ((b * g(r2) - g(r1)) / (b - 1.0)).real();
}

bool on_unit_contour(cplx z, double tol) {
  auto ray = [&](cplx base, double ang) {
    cplx d = z - base;
    return std::abs(d) > 0.0 && std::abs(std::remainder(std::arg(d) - ang, 2.0 * kPi)) < tol;
  };
  return ray(1.0, 0.0) || ray(1.0, kPi / 4) || ray(1.0, -kPi / 4) || ray(-1.0, kPi) ||
         ray(-1.0, 3 * kPi / 4) || ray(-1.0, -3 * kPi / 4);
}

DecayMargin decay_margin(cplx z, int a, int b, double s, PearceyParams params) {
  if (!on_unit_contour(z)) throw DomainError("decay_margin: z is not on a contour Sigma_k^(1)");
  // the two real rays are cuts; use the upper boundary value there
  CutSide side = on_real_cut(z) ? CutSide::Upper : CutSide::None;
  double v = (lambda(a, z, s, params, side) - lambda(b, z, s, params, side)).real();
  return {v, v / std::pow(std::abs(z), 4.0 / 3.0)};
}

std::vector<SignSample> sign_chart(int a, int b, double xmin, double xmax, double ymin,
                                   double ymax, int nx, int ny) {
  if (nx < 2 || ny < 2) throw DomainError("sign_chart: need at least 2x2 samples");
  std::vector<SignSample> out;
  out.reserve(static_cast<std::size_t>(nx) * ny);
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      double x = xmin + (xmax - xmin) * ix / (nx - 1);
      double y = ymin + (ymax - ymin) * iy / (ny - 1);
      double v;
      try {
        v = (lambda_star(a, {x, y}) - lambda_star(b, {x, y})).real();
      } catch (const DomainError&) {
        v = std::numeric_limits<double>::quiet_NaN();
      }
      out.push_back({x, y, v});
    }
  return out;
}

}  // namespace pearcey
