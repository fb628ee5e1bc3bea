#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pearcey/types.hpp"

namespace pearcey {

// Value, first and second derivative of a Pearcey function at one point.
struct PearceyTriple {
  cplx p, dp, d2p;
};

// Straight half-line start + t*direction, t in [0, truncation], traversed
// with the given orientation (+1 outwards, -1 towards start).
struct ContourRay {
  cplx start;
  cplx direction;
  int orientation;
  double truncation;
};

struct KappaCoeffs {
  double kappa3, kappa6, kappa6_tilde, kappa6_hat;
};

struct AsymptoticFrame {
  double rho;
  Mat3 psi0, psi1, l_plus, l_minus;
  // (3/4) w^{2k} z^{4/3} + (rho/2) w^k z^{2/3}, principal powers
  cplx theta(int k, cplx z) const;
};

// Integrals over the contour Gamma_j of (is)^k exp(-s^4/4 - rho s^2/2 + isz),
// for k = 0..3. Memoized and safe to call from several threads.
std::array<cplx, 4> pearcey_moments(int j, cplx z, PearceyParams params);

// Same for q: (1/2pi) * integral over the four diagonal rays of
// (it)^k exp(t^4/4 + rho t^2/2 + ity).
std::array<cplx, 4> pearcey_q_moments(cplx y, PearceyParams params);

PearceyTriple pearcey_p(int j, cplx z, PearceyParams params);
PearceyTriple pearcey_q(cplx y, PearceyParams params);

// Rays actually used for p_j(z); the anchor point is chosen per evaluation.
std::vector<ContourRay> pearcey_contour(int j, cplx z, PearceyParams params);

KappaCoeffs kappa_coeffs(PearceyParams params);
AsymptoticFrame asymptotic_frame(PearceyParams params);

// Large-z expansion of p_j for j in {0, 1, 4}, carried through the kappa6
// term (dropped when with_kappa6 is false). Derivatives are termwise.
PearceyTriple pearcey_asymptotic(int j, cplx z, PearceyParams params,
                                 bool with_kappa6 = true);

// Columns p0, p1, p4 with rows value, first, second derivative.
Mat3 psi_tilde(cplx z, PearceyParams params);

// Sector k in 0..5 holds the points between rays Sigma_k and Sigma_{k+1}.
// Throws DomainError for z = 0 or z on a ray.
int psi_sector_index(cplx z);
// Sector-k formula, evaluated anywhere (used for boundary values).
Mat3 psi_in_sector(int sector, cplx z, PearceyParams params);
Mat3 psi_sector(cplx z, PearceyParams params);
// Jump matrix on Sigma_k, Psi_+ = Psi_- J.
Mat3 psi_jump(int k);
// Angle and orientation (+1 outwards) of Sigma_k.
double psi_ray_angle(int k);
int psi_ray_orientation(int k);

// p_j''' - z p_j - rho p_j', with p''' from its own quadrature.
cplx ode_residual(int j, cplx z, PearceyParams params);

void clear_pearcey_cache();
std::size_t pearcey_cache_size();

}  // namespace pearcey
