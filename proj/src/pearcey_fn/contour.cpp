#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "pearcey/pearcey_fn.hpp"
#include "pearcey/quadrature.hpp"

namespace pearcey {

namespace {

constexpr int kGaussNodes = 24;
constexpr double kDrop = 45.0;        // truncate once the integrand is e^-45 below its peak
constexpr int kSamples = 128;
constexpr std::size_t kMaxPanels = 200000;
constexpr std::size_t kCacheLimit = 1u << 20;

// exponent a4 s^4 + a2 s^2 + a1 s
struct Quartic {
  cplx a4, a2, a1;
  cplx operator()(cplx s) const {
    cplx s2 = s * s;
    return (a4 * s2 + a2) * s2 + a1 * s;
  }
  cplx deriv(cplx s) const { return (4.0 * a4 * s * s + 2.0 * a2) * s + a1; }
};

struct Dir {
  cplx d;
  int orient;
};

std::vector<Dir> p_dirs(int j) {
  const cplx one{1, 0}, i{0, 1};
  switch (j) {
    case 0: return {{-one, -1}, {one, 1}};
    case 1: return {{i, -1}, {one, 1}};
    case 2: return {{i, -1}, {-one, 1}};
    case 3: return {{-i, -1}, {-one, 1}};
    case 4: return {{-i, -1}, {one, 1}};
    case 5: return {{-i, -1}, {i, 1}};
    default: throw DomainError("pearcey: contour index must be in 0..5");
  }
}

std::vector<Dir> q_dirs() {
  auto e = [](double a) { return std::polar(1.0, a); };
  return {{e(kPi / 4), -1}, {e(3 * kPi / 4), 1}, {e(5 * kPi / 4), -1}, {e(7 * kPi / 4), 1}};
}

// Real coefficients (t^0..t^4) of Re phi(b + t d).
std::array<double, 5> ray_poly(const Quartic& q, cplx b, cplx d) {
  cplx d2 = d * d, b2 = b * b;
  return {std::real(q(b)),
          std::real(4.0 * q.a4 * b2 * b * d + 2.0 * q.a2 * b * d + q.a1 * d),
          std::real(6.0 * q.a4 * b2 * d2 + q.a2 * d2),
          std::real(4.0 * q.a4 * b * d2 * d),
          std::real(q.a4 * d2 * d2)};
}

double poly_eval(const std::array<double, 5>& c, double t) {
  return (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0];
}

// Past this t the ray polynomial is strictly decreasing (Fujiwara bound on g').
double monotone_from(const std::array<double, 5>& c) {
  double lead = 4.0 * c[4];
  double a2 = 3.0 * c[3] / lead, a1 = 2.0 * c[2] / lead, a0 = c[1] / lead;
  return 2.0 * std::max({std::abs(a2), std::sqrt(std::abs(a1)), std::cbrt(std::abs(a0) / 2.0)}) + 1e-3;
}

struct RayPlan {
  cplx b, d;
  int orient;
  double gmax, tmax;
  std::array<double, 5> c;
};

RayPlan plan_ray(const Quartic& q, cplx b, const Dir& dir) {
  RayPlan r{b, dir.d, dir.orient, 0.0, 0.0, ray_poly(q, b, dir.d)};
  if (!(r.c[4] < 0.0)) throw DomainError("pearcey: ray leaves the decay sector");
  double tc = monotone_from(r.c);
  std::array<double, kSamples + 1> g;
  double gmax = -1e300;
  for (int i = 0; i <= kSamples; ++i) {
    g[i] = poly_eval(r.c, tc * i / kSamples);
    gmax = std::max(gmax, g[i]);
  }
  r.gmax = gmax;
  double thr = gmax - kDrop;
  int last = kSamples;
  while (last > 0 && g[last] < thr) --last;
  if (last < kSamples) {
    r.tmax = tc * (last + 1) / kSamples;
  } else {
    // decreasing beyond tc: bracket then bisect
    double lo = tc, hi = std::max(2.0 * tc, 1.0);
    while (poly_eval(r.c, hi) >= thr) hi *= 2.0;
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      (poly_eval(r.c, mid) >= thr ? lo : hi) = mid;
    }
    r.tmax = hi;
  }
  return r;
}

// Gauss panels along one ray; the panel length follows the local oscillation.
std::array<cplx, 4> integrate_ray(const Quartic& q, const RayPlan& r) {
  const GaussRule& g = gauss_legendre(kGaussNodes);
  double ab = std::abs(r.b);
  double k4 = 4.0 * std::abs(q.a4), k2 = 2.0 * std::abs(q.a2), k1 = std::abs(q.a1);
  auto freq = [&](double t) {
    double u = ab + t;
    return k4 * u * u * u + k2 * u + k1;
  };
  std::array<cplx, 4> acc{};
  double t0 = 0.0;
  std::size_t panels = 0;
  while (t0 < r.tmax) {
    // freq is increasing in t, so freq(t0 + 1) bounds it over the panel
    double h = std::min({1.0, 4.0 * kPi / (1.0 + freq(t0 + 1.0)), r.tmax - t0});
    if (++panels > kMaxPanels)
      throw NumericalError("pearcey: panel budget exhausted", std::exp(poly_eval(r.c, t0) - r.gmax));
    double half = 0.5 * h, mid = t0 + half;
    for (int n = 0; n < kGaussNodes; ++n) {
      cplx s = r.b + (mid + half * g.nodes[n]) * r.d;
      cplx e = std::exp(q(s)) * (g.weights[n] * half);
      cplx is = kI * s;
      acc[0] += e;
      e *= is;
      acc[1] += e;
      e *= is;
      acc[2] += e;
      e *= is;
      acc[3] += e;
    }
    t0 += h;
  }
  cplx w = r.d * static_cast<double>(r.orient);
  for (auto& a : acc) a *= w;
  return acc;
}

// Anchors: origin plus the three saddle points of the exponent.
std::vector<cplx> anchors(const Quartic& q) {
  Eigen::Matrix3cd comp = Eigen::Matrix3cd::Zero();
  // 4 a4 s^3 + 2 a2 s + a1 = 0 as a monic companion matrix
  cplx c1 = 2.0 * q.a2 / (4.0 * q.a4), c0 = q.a1 / (4.0 * q.a4);
  comp(1, 0) = 1.0;
  comp(2, 1) = 1.0;
  comp(0, 2) = -c0;
  comp(1, 2) = -c1;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(comp, false);
  std::vector<cplx> out{cplx(0.0, 0.0)};
  for (int i = 0; i < 3; ++i) {
    cplx s = es.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      cplx d2 = 12.0 * q.a4 * s * s + 2.0 * q.a2;
      if (std::abs(d2) > 1e-300) s -= q.deriv(s) / d2;
    }
    if (std::isfinite(s.real()) && std::isfinite(s.imag())) out.push_back(s);
  }
  return out;
}

std::vector<RayPlan> plan_contour(const Quartic& q, const std::vector<Dir>& dirs) {
  std::vector<RayPlan> best;
  double best_score = 1e300;
  for (cplx b : anchors(q)) {
    std::vector<RayPlan> plans;
    double score = -1e300;
    for (const auto& d : dirs) {
      plans.push_back(plan_ray(q, b, d));
      score = std::max(score, plans.back().gmax);
    }
    if (score < best_score - 1e-9) {
      best_score = score;
      best = std::move(plans);
    }
  }
  return best;
}

std::array<cplx, 4> integrate(const Quartic& q, const std::vector<Dir>& dirs) {
  std::array<cplx, 4> tot{};
  for (const auto& r : plan_contour(q, dirs)) {
    auto part = integrate_ray(q, r);
    for (int k = 0; k < 4; ++k) tot[k] += part[k];
  }
  for (const auto& v : tot)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("pearcey: non-finite quadrature result", INFINITY);
  return tot;
}

Quartic p_exponent(cplx z, double rho) { return {-0.25, -0.5 * rho, kI * z}; }
Quartic q_exponent(cplx y, double rho) { return {0.25, 0.5 * rho, kI * y}; }

struct Key {
  int kind;
  double re, im, rho;
  bool operator==(const Key& o) const {
    return kind == o.kind && re == o.re && im == o.im && rho == o.rho;
  }
};
struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::hash<double> h;
    std::size_t s = std::hash<int>()(k.kind);
    for (double v : {k.re, k.im, k.rho}) s ^= h(v) + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
    return s;
  }
};

std::shared_mutex g_mu;
std::unordered_map<Key, std::array<cplx, 4>, KeyHash> g_cache;

template <class F>
std::array<cplx, 4> memo(const Key& key, F compute) {
  {
    std::shared_lock lock(g_mu);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  auto v = compute();
  std::unique_lock lock(g_mu);
  if (g_cache.size() >= kCacheLimit) g_cache.clear();
  g_cache.emplace(key, v);
  return v;
}

}  // namespace

std::array<cplx, 4> pearcey_moments(int j, cplx z, PearceyParams params) {
  auto dirs = p_dirs(j);
  return memo({j, z.real(), z.imag(), params.rho},
              [&] { return integrate(p_exponent(z, params.rho), dirs); });
}

std::array<cplx, 4> pearcey_q_moments(cplx y, PearceyParams params) {
  return memo({6, y.real(), y.imag(), params.rho}, [&] {
    auto m = integrate(q_exponent(y, params.rho), q_dirs());
    for (auto& v : m) v /= 2.0 * kPi;
    return m;
  });
}

PearceyTriple pearcey_p(int j, cplx z, PearceyParams params) {
  auto m = pearcey_moments(j, z, params);
  return {m[0], m[1], m[2]};
}

PearceyTriple pearcey_q(cplx y, PearceyParams params) {
  auto m = pearcey_q_moments(y, params);
  return {m[0], m[1], m[2]};
}

std::vector<ContourRay> pearcey_contour(int j, cplx z, PearceyParams params) {
  std::vector<ContourRay> out;
  for (const auto& r : plan_contour(p_exponent(z, params.rho), p_dirs(j)))
    out.push_back({r.b, r.d, r.orient, r.tmax});
  return out;
}

cplx ode_residual(int j, cplx z, PearceyParams params) {
  auto m = pearcey_moments(j, z, params);
  return m[3] - z * m[0] - params.rho * m[1];
}

void clear_pearcey_cache() {
  std::unique_lock lock(g_mu);
  g_cache.clear();
}

std::size_t pearcey_cache_size() {
  std::shared_lock lock(g_mu);
  return g_cache.size();
}

}  // namespace pearcey
