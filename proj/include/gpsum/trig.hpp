#ifndef GPSUM_TRIG_HPP
#define GPSUM_TRIG_HPP

#include <cstddef>
#include <vector>

#include "gpsum/params.hpp"
#include "gpsum/scaled.hpp"

namespace gpsum {

struct KernelSpec;  // kernel.hpp

// Finite trigonometric polynomial
//   f(t) = a0/2 + sum_{k=1}^{degree} a_k cos(kt) + b_k sin(kt).
// The constant is stored as a0 and contributes a0/2, matching the classical
// Fourier-series convention.
struct TrigPoly {
  double a0 = 0.0;
  std::vector<double> cos_coeffs;  // a_k, k = 1..degree
  std::vector<double> sin_coeffs;  // b_k, k = 1..degree

  TrigPoly() = default;
  explicit TrigPoly(int degree)
      : cos_coeffs(degree, 0.0), sin_coeffs(degree, 0.0) {}

  int degree() const { return static_cast<int>(cos_coeffs.size()); }
  bool zero_mean() const { return a0 == 0.0; }

  double eval(double t) const;

  // Antiderivative with F(0) continuation: a0/2 t + sum (a_k sin - b_k cos)/k.
  double antiderivative(double t) const;

  // Drops trailing zero coefficients.
  void trim();
};

// Samples over the uniform grid t_i = 2 pi i / size.
struct GridFunction {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

// e^{log_scale} * poly; keeps kernel-convolved functions representable when
// the true coefficients underflow.
struct ScaledTrigPoly {
  TrigPoly poly;
  double log_scale = 0.0;

  // Folds the largest coefficient magnitude into log_scale so the mantissa
  // polynomial stays O(1).
  void renormalize();
};

struct SupBound {
  double value = 0.0;   // grid maximum of |f|
  double radius = 0.0;  // true sup lies in [value, value + radius]
};

// Fast synthesis on N uniform points; requires N >= 2*degree + 2 and N a
// power of two.
GridFunction eval_grid(const TrigPoly& f, std::size_t n_points);

// Inverse of eval_grid: exact coefficient recovery for max_degree <= N/2 - 1.
TrigPoly analyze_grid(const GridFunction& g, int max_degree);

// S_{n-1}(f): frequencies <= n-1 kept (constant term included).
TrigPoly partial_sum(const TrigPoly& f, int n);

// f - S_{n-1}(f): exactly the frequencies >= n.
TrigPoly deviation(const TrigPoly& f, int n);
ScaledTrigPoly deviation(const ScaledTrigPoly& f, int n);

// (1/pi) integral K(x-t) phi(t) dt for general trig K and zero-mean phi.
TrigPoly convolve(const TrigPoly& kernel, const TrigPoly& phi);

// Convolution against the generalized Poisson kernel restarted at spec.n:
// each frequency k >= spec.n of phi is damped by e^{-alpha k^r} and phase
// shifted by beta pi/2; frequencies below spec.n vanish.  Exact per
// coefficient (no series truncation enters).
ScaledTrigPoly convolve_kernel(const TrigPoly& phi, const KernelSpec& spec);

// L_p norms.  GridFunction: trapezoid on the given samples.  TrigPoly:
// grid-doubling trapezoid to relative tolerance for finite p (p = 1 uses the
// sign-segment antiderivative route, which is exact up to root finding);
// certified sup for p = inf.
double lp_norm(const GridFunction& g, const LpIndex& p);
double lp_norm(const TrigPoly& f, const LpIndex& p, double rel_tol = 1e-10);

// Certified sup norm: value = grid max over >= 16*degree points, radius =
// B pi / N with B = sum_k k (|a_k| + |b_k|) >= ||f'||_inf.
SupBound sup_norm_certified(const TrigPoly& f, std::size_t min_points = 0);

// Zeros of f in [0, 2pi), located by sign changes on a dense grid and
// refined by bisection.  Tangential zeros without a sign change are not
// reported.
std::vector<double> find_sign_changes(const TrigPoly& f,
                                      std::size_t grid_hint = 0);

// Exact-by-segments integral of |f| using the antiderivative between
// consecutive sign changes.
double l1_norm_exact(const TrigPoly& f);

}  // namespace gpsum

#endif
