#pragma once

#include <vector>

#include "pearcey/types.hpp"

namespace pearcey {

struct ExpansionTerms {
  double s, rho;
  double leading;  // -9 s^{8/3} / 2^{17/3}
  double quad;     // rho s^2 / 4
  double frac;     // -rho^2 s^{4/3} / 2^{10/3}
  double log;      // -(2/9) ln s
  double rho4;     // rho^4 / 216
  double c;
  double total() const { return leading + quad + frac + log + rho4 + c; }
};

ExpansionTerms F_expansion(double s, double rho, double c = 0.0);
double dFds_expansion(double s, double rho);
double dFdrho_expansion(double s, double rho);

struct GapSample {
  double s, F;
};

struct FitSample {
  double s, F_num, G;  // G = F_num - expansion at c = 0
};

struct FitReport {
  double rho;
  double c_hat, c_stderr;
  std::vector<double> coeffs;  // a_k of s^{-2k/3}, k = 1..
  double residual_exponent;    // slope of log|G - c_hat| against log s
  std::vector<FitSample> samples;
};

// Least squares of G(s) on c + sum_{k=1}^{1+extra_terms} a_k s^{-2k/3}.
// Needs >= 5 samples in [4, 8]; throws NumericalError if ill conditioned.
FitReport fit_constant(const std::vector<GapSample>& samples, double rho, int extra_terms = 0);

// Least-squares slope of log(-F) against log s.
double forrester_exponent(const std::vector<GapSample>& samples);

}  // namespace pearcey
