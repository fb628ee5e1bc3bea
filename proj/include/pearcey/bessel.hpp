#pragma once

#include "pearcey/types.hpp"

namespace pearcey {

struct BesselPair {
  cplx i_val, k_val, di_val, dk_val;
};

// I_alpha, K_alpha and their derivatives, |arg zeta| < pi, |alpha| <= 1.
BesselPair modified_bessel(double alpha, cplx zeta);

// Same with I, I' multiplied by e^{-zeta} and K, K' by e^{zeta}.
// Requires Re zeta >= 0.
BesselPair modified_bessel_scaled(double alpha, cplx zeta);

}  // namespace pearcey
