#ifndef GPSUM_KERNEL_HPP
#define GPSUM_KERNEL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gpsum/params.hpp"
#include "gpsum/scaled.hpp"
#include "gpsum/trig.hpp"

namespace gpsum {

// Identifies the scaled truncated kernel Q(t) = e^{alpha n^r} P^{(n)}(t),
// P^{(n)}(t) = sum_{k>=n} e^{-alpha k^r} cos(kt - beta pi/2), cut at trunc_k
// with a certified bound on the dropped scaled mass.
struct KernelSpec {
  ClassParams params;
  std::int64_t n = 1;        // truncation start; n = 1 is the full kernel
  std::int64_t trunc_k = 1;  // last retained frequency
  double tail_bound = 0.0;   // proven over-estimate of the dropped mass

  double log_scale() const;  // -alpha n^r
};

// Smallest K >= n whose certified tail bound drops below eps, plus that
// bound.  The bound is the integral comparison
//   sum_{k>K} e^{-alpha(k^r - n^r)}
//     <= e^{-alpha(K^r - n^r)} K^{1-r} / (alpha r) / (1 - (1-r)/(alpha r K^r)),
// valid once alpha r K^r > 2(1-r); K is pushed up to that regime first.
std::pair<std::int64_t, double> truncation_index(const ClassParams& params,
                                                 std::int64_t n, double eps);

KernelSpec make_kernel_spec(const ClassParams& params, std::int64_t n,
                            double eps = 1e-14);

// Coefficients c_j = e^{-alpha((n+j)^r - n^r)}, j = 0..trunc_k-n, so that
// Q(t) = sum_j c_j cos((n+j) t - beta pi/2); c_0 = 1, strictly decreasing.
std::vector<double> scaled_coefficients(const KernelSpec& spec);

// Q as a trig polynomial in the mantissa domain (pair with spec.log_scale()).
TrigPoly kernel_poly(const KernelSpec& spec);

// Q on the uniform grid t_i = 2 pi i / grid_size via fast synthesis.
// Requires grid_size >= 2*trunc_k + 1 (alias-free) and a power of two.
GridFunction eval_scaled_kernel_grid(const KernelSpec& spec,
                                     std::size_t grid_size);

// (1/pi) ||P^{(n)}||_s as a ScaledValue.  Finite s: trapezoid quadrature of
// |Q|^s with grid doubling until the relative change drops below tol.
// s = inf: certified sup refined until the certificate radius is below
// tol * value.  Throws AccuracyError with the best estimate on failure.
ScaledValue kernel_norm(const KernelSpec& spec, const LpIndex& s, double tol);

struct KernelAsymptotics {
  ScaledValue main;     // leading term of the norm estimate
  ScaledValue bracket;  // remainder bracket; |computed - main| <= (14 pi)^2 * bracket
};

// Two-sided asymptotic form of (1/pi)||P^{(n)}||_s:
//   main    = e^{-alpha n^r} n^{(1-r)/s'} ||cos||_s / (pi^{1+1/s} (alpha r)^{1/s'})
//             * I_s(pi n^{1-r} / (alpha r))
//   bracket = e^{-alpha n^r} n^{(1-r)/s'} ( I_s(...) n^{-r} / (alpha r)^{1+1/s'}
//             + n^{-(1-r)/s'} ).
// Valid regime n >= n0(alpha, r, s'); callers may evaluate outside it for
// informational use.
KernelAsymptotics kernel_norm_asymptotic(const KernelSpec& spec,
                                         const LpIndex& s);

// Experimental: phase-averaged envelope estimate of (1/pi)||P^{(n)}||_s for
// finite s, integrating |A(t)|^s for the coefficient envelope A and replacing
// the fast phase by the mean of |cos|^s.  Asymptotic in n; cross-checked
// against direct quadrature at moderate n in the tests.
ScaledValue kernel_norm_envelope(const KernelSpec& spec, const LpIndex& s);

}  // namespace gpsum

#endif
