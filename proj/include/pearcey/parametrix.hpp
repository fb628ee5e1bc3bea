#pragma once

#include <functional>

#include "pearcey/bessel.hpp"
#include "pearcey/surface.hpp"
#include "pearcey/types.hpp"

namespace pearcey {

inline constexpr double kDefaultDelta = 1.0 / 3.0;

// Sector I of the Bessel model: |arg z| < 3pi/4; sectors II (upper) and
// III (lower) are the rest. Rays at arg z = +-3pi/4 are rejected. A point
// on the negative axis is read by the sign of its zero imaginary part.
Mat2 phi_bessel(double alpha, cplx z);
// Sector formula 1 (I), 2 (II) or 3 (III) evaluated anywhere off (-inf, 0].
Mat2 phi_bessel_in_sector(double alpha, cplx z, int sector);
// Phi-jumps on the rays: k = 1 upper ray, 2 negative axis, 3 lower ray.
Mat2 phi_bessel_jump(double alpha, int k);
// Leading large-z form (pi^2 z)^{-sigma3/4} [[1,i],[i,1]]/sqrt2 (I + m/(8 sqrt z)) e^{sqrt z sigma3}.
Mat2 phi_bessel_infinity(double alpha, cplx z);

struct GlobalConstants {
  Mat3 n0, lam, ups, n1;
  Mat3 l_plus, l_minus;
};

const GlobalConstants& global_constants();

// N(z) built from the three w-sheets. Points on (-inf,-1) u (1,inf) need
// a side.
Mat3 global_N(cplx z, CutSide side = CutSide::None);
// N(z) L^{-1} diag(z^{1/3}, 1, z^{-1/3}) with L = L+ or L- by half-plane.
Mat3 global_N_normalized(cplx z);

// f = (lambda1 - lambda3)^2/4 near -1, f~ = (lambda1 - lambda2)^2/4 near 1.
// Both throw DomainError outside the disk of radius delta.
cplx conformal_f(cplx z, double s, PearceyParams params, double delta = kDefaultDelta);
cplx conformal_f_tilde(cplx z, double s, PearceyParams params, double delta = kDefaultDelta);

// z in U(-1, delta), z != -1. On (-1-delta, -1) the side picks the
// boundary value of N and of f^{1/4}; the product is analytic there.
Mat3 prefactor_E(cplx z, double s, PearceyParams params, CutSide side = CutSide::None,
                 double delta = kDefaultDelta);

struct EAtMinusOne {
  Mat3 value, derivative;
};

// Mean and first Fourier mode of E on |z + 1| = radius.
EAtMinusOne e_at_minus_one(double s, PearceyParams params, double radius = 0.05, int nodes = 64);
Mat3 e_minus_one_closed(double s, PearceyParams params);
Vec3 e_prime_minus_one_first_column_closed(double s, PearceyParams params);

// P^{(-1)} for sign = -1 in U(-1, delta), P^{(1)} = Ups P^{(-1)}(-z) Lam
// for sign = +1 in U(1, delta). Large exponentials are combined in log form.
Mat3 local_P(int sign, cplx z, double s, PearceyParams params, CutSide side = CutSide::None,
             double delta = kDefaultDelta);
// Jump of P^{(-1)} on the real segment (-1 - delta, -1).
Mat3 local_jump_sigma3();

struct J1Pair {
  Mat3 minus, plus;  // J1^{(-1)}(z), J1^{(1)}(z)
};

// J1^{(-1)} on the punctured disk around -1; J1^{(1)}(z) = Ups J1^{(-1)}(-z) Ups.
Mat3 j1_minus(cplx z, double s, PearceyParams params, CutSide side = CutSide::None);
Mat3 j1_plus(cplx z, double s, PearceyParams params, CutSide side = CutSide::None);
// J1^{(-1)}(z) and J1^{(1)}(-z) for z near -1
J1Pair j1_matrices(cplx z, double s, PearceyParams params);

struct Laurent {
  Mat3 jm1, j0, j1;  // coefficients of (z+1)^{-1}, 1, (z+1)
};

Laurent j1_laurent(double s, PearceyParams params, double radius = 0.05, int nodes = 64);
Mat3 j1_residue_closed(double s, PearceyParams params);

enum class R1Region { Auto, Outer, MinusDisk, PlusDisk };

struct R1Data {
  double s;
  PearceyParams params;
  double delta;
  Mat3 res_minus, res_plus;
  Laurent laurent;
  Mat3 derivative_at_minus_one;  // R1'(-1)
  Mat3 leading;                  // coefficient of 1/z in R, including s^{-4/3}

  Mat3 operator()(cplx z, R1Region region = R1Region::Auto) const;
};

R1Data r1_data(double s, PearceyParams params, double delta = kDefaultDelta);

struct LocalFrame {
  std::function<cplx(cplx)> f, f_tilde;
  std::function<Mat3(cplx)> e_matrix, j1_minus, j1_plus;
  Laurent laurent;
};

LocalFrame local_frame(double s, PearceyParams params, double delta = kDefaultDelta);

// A(z) = diag(a, b, a) U with a = exp(s^{4/3}(lambda1 + lambda3)/2),
// b = exp(s^{4/3} lambda2), U unit lower triangular in the (3,2) slot.
// B is the Bessel embedding at zeta = s^{8/3} f(z), kept with its
// exponential growth split off.
struct ScriptFactors {
  cplx log_a, log_b;
  cplx sqrt_zeta;
  Mat3 b_scaled;   // B diag(e^{-sqrt zeta}, 1, e^{sqrt zeta})
  Mat3 a_inv_da;   // A^{-1} A'

  Mat3 a_value() const;
  Mat3 b_value() const;
  // A^{-1} m A using only a/b
  Mat3 conjugate_a(const Mat3& m) const;
};

ScriptFactors script_factors(cplx z, double s, PearceyParams params);
// B(zeta)^{-1} dB/dzeta from the sector-I formula.
Mat3 b_inv_db(double alpha, cplx zeta);

// d lambda_j / dz
cplx lambda_prime(int j, cplx z, double s, PearceyParams params, CutSide side = CutSide::None);

}  // namespace pearcey
