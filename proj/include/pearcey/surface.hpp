#pragma once

#include <string>
#include <vector>

#include "pearcey/types.hpp"

namespace pearcey {

// Boundary value on a cut: Upper is the limit from Im z > 0.
enum class CutSide { None, Upper, Lower };

// eta = i (1 - z^2)^{1/2} - z, Im eta > 0. Points of (-inf,-1) u (1,inf)
// need a side; the limits are exact (not offsets).
cplx eta(cplx z, CutSide side = CutSide::None);

// w_j = omega^{j-2} eta^{1/3} + omega^{2-j} eta^{-1/3}, j = 1, 2, 3.
// Sheet 1 is cut on both half-lines, sheet 2 on [1,inf), sheet 3 on
// (-inf,-1]; a side is only required on the sheet's own cuts.
cplx w(int j, cplx z, CutSide side = CutSide::None);

// 3/4^{5/3} w^4 + (rho/(2^{5/3} s^{2/3}) - 3/2^{4/3}) w^2
cplx lambda(int j, cplx z, double s, PearceyParams params, CutSide side = CutSide::None);
// rho-free part used for the decay estimates
cplx lambda_star(int j, cplx z, CutSide side = CutSide::None);

struct SurfaceConstants {
  double d0, d1, c0, c1, c2, c3;
};

SurfaceConstants surface_constants(double s, PearceyParams params);

// lambda_1(-1) + lambda_3(-1) - 2 lambda_2(-1), evaluated directly, and the
// closed form -9/2^{7/3} - 3 rho/(2^{2/3} s^{2/3}).
cplx lambda_123_direct(double s, PearceyParams params);
double lambda_123_closed(double s, PearceyParams params);

enum class SeriesTarget { W, Lambda };
enum class SeriesPoint { MinusOne, PlusOne, Infinity };

// Truncated local expansion of w_j or lambda_j (only the combinations with
// a stated series: w/lambda 1,3 at -1 and infinity, 1,2 at +1).
cplx series_value(SeriesTarget target, SeriesPoint point, int j, cplx z, double s,
                  PearceyParams params);

struct SeriesReport {
  double max_residual;      // worst |direct - series| over the probes
  double empirical_order;   // slope of log residual vs log distance (or |z|)
  std::vector<double> distances, residuals;
};

// Probes at distances 1e-2, 1e-3 from a finite point (both half-planes),
// or |z| in {10, 100} at infinity. The order is averaged over probe angles.
SeriesReport series_check(SeriesTarget target, SeriesPoint point, int j, double s,
                          PearceyParams params);

// -D0 from lambda_3 at radii r1 < r2 along arg z = phi: remove the
// z^{4/3}, z^{2/3} and D1 z^{-2/3} terms, then cancel z^{-4/3}.
double lambda_constant_richardson(double s, PearceyParams params, double r1 = 50.0,
                                  double r2 = 100.0, double phi = 0.0);

struct DecayMargin {
  double value;       // Re(lambda_a - lambda_b)
  double normalized;  // value / |z|^{4/3}
};

// z must lie on one of the unit-scale contours Sigma_k^{(1)}.
DecayMargin decay_margin(cplx z, int a, int b, double s, PearceyParams params);
bool on_unit_contour(cplx z, double tol = 1e-9);

struct SignSample {
  double x, y, value;  // value = Re(lambda*_a - lambda*_b), NaN on cuts
};

std::vector<SignSample> sign_chart(int a, int b, double xmin, double xmax, double ymin,
                                   double ymax, int nx, int ny);

}  // namespace pearcey
