#include <cmath>

#include "pearcey/pearcey_fn.hpp"

namespace pearcey {

namespace {

Vec3 column(int j, cplx z, PearceyParams params) {
  auto m = pearcey_moments(j, z, params);
  return Vec3(m[0], m[1], m[2]);
}

constexpr double kRayAngle[6] = {0.0, 0.25 * kPi, 0.75 * kPi, kPi, 1.25 * kPi, 1.75 * kPi};
constexpr int kRayOrient[6] = {1, 1, -1, -1, -1, 1};

}  // namespace

Mat3 psi_tilde(cplx z, PearceyParams params) {
  Mat3 m;
  m << column(0, z, params), column(1, z, params), column(4, z, params);
  return m;
}

double psi_ray_angle(int k) {
  if (k < 0 || k > 5) throw DomainError("psi_ray_angle: k must be in 0..5");
  return kRayAngle[k];
}

int psi_ray_orientation(int k) {
  if (k < 0 || k > 5) throw DomainError("psi_ray_orientation: k must be in 0..5");
  return kRayOrient[k];
}

int psi_sector_index(cplx z) {
  if (z == cplx(0.0, 0.0)) throw DomainError("psi_sector: z = 0 lies on every ray");
  double a = std::arg(z);
  if (a < 0) a += 2.0 * kPi;
  for (int k = 0; k < 6; ++k) {
    double d = std::remainder(a - kRayAngle[k], 2.0 * kPi);
    if (std::abs(d) < 1e-13) throw DomainError("psi_sector: z lies on a ray");
  }
  for (int k = 5; k >= 0; --k)
    if (a > kRayAngle[k]) return k;
  return 5;
}

Mat3 psi_in_sector(int sector, cplx z, PearceyParams params) {
  auto c = [&](int j) { return column(j, z, params); };
  Mat3 m;
  switch (sector) {
    case 0: m << -c(2), c(1), c(5); break;
    case 1: m << c(0), c(1), c(4); break;
    case 2: m << -c(3), -c(5), c(4); break;
    case 3: m << c(4), -c(5), c(3); break;
    case 4: m << c(0), c(2), c(3); break;
    case 5: m << c(1), c(2), c(5); break;
    default: throw DomainError("psi_in_sector: sector must be in 0..5");
  }
  return m;
}

Mat3 psi_sector(cplx z, PearceyParams params) {
  return psi_in_sector(psi_sector_index(z), z, params);
}

Mat3 psi_jump(int k) {
  Mat3 j;
  switch (k) {
    case 0: j << 0, 1, 0, -1, 0, 0, 0, 0, 1; break;
    case 1: j << 1, 0, 0, 1, 1, 1, 0, 0, 1; break;
    case 2: j << 1, 0, 0, 0, 1, 0, 1, 1, 1; break;
    case 3: j << 0, 0, 1, 0, 1, 0, -1, 0, 0; break;
    case 4: j << 1, 0, 0, 0, 1, 0, 1, -1, 1; break;
    case 5: j << 1, 0, 0, 1, 1, -1, 0, 0, 1; break;
    default: throw DomainError("psi_jump: k must be in 0..5");
  }
  return j;
}

}  // namespace pearcey
