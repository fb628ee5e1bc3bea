#pragma once

#include "pearcey/pearcey_fn.hpp"
#include "pearcey/types.hpp"

namespace pearcey {

// Below this |x - y| the difference quotient is replaced by a Taylor
// expansion about the diagonal.
inline constexpr double kNearDiagonal = 1e-4;

// Everything the kernel needs at one real point: p = p0 / (2 pi) and q,
// each with two derivatives. Kernel matrices are assembled from these.
struct NodeData {
  double x = 0.0;
  double rho = 0.0;
  PearceyTriple p, q;
};

NodeData node_data(double x, PearceyParams params);

// Brezin-Hikami form from precomputed node data.
double kernel_pair(const NodeData& a, const NodeData& b,
                   double near_diag = kNearDiagonal);

double kernel_bh(double x, double y, PearceyParams params,
                 double near_diag = kNearDiagonal);

// Limit of kernel_bh on the diagonal: x p q + p' q'' - p'' q'.
double kernel_diag(double x, PearceyParams params);

struct KernelRH {
  double value;
  double imag_residual;
};

// (0,1,1) Psi~(y)^{-1} Psi~(x) (1,0,0)^t / (2 pi i (x - y)). Requires x != y.
KernelRH kernel_rh(double x, double y, PearceyParams params);

struct IntegrableVectors {
  Vec3 f, h;
};

// f = Psi~(x) e1, h = Psi~(x)^{-t} (0,1,1)^t / (2 pi i).
IntegrableVectors vectors_fh(double x, PearceyParams params);

// Numerator of the Brezin-Hikami quotient; zero on the diagonal.
double kernel_numerator(double x, double y, PearceyParams params);

// |K(x,y) - K(y,x)|. Reported, never assumed to vanish.
double symmetry_defect(double x, double y, PearceyParams params);

}  // namespace pearcey
