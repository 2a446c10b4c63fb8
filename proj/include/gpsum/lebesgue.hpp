#ifndef GPSUM_LEBESGUE_HPP
#define GPSUM_LEBESGUE_HPP

#include <cstdint>

#include "gpsum/bestapprox.hpp"
#include "gpsum/kernel.hpp"
#include "gpsum/params.hpp"
#include "gpsum/scaled.hpp"
#include "gpsum/trig.hpp"

namespace gpsum {

// (14 pi)^2, the universal remainder constant.
inline double gamma_cap() { return (14.0 * M_PI) * (14.0 * M_PI); }

// One inequality check.  The conservative pass rule compares the certified
// upper estimate of the left side against the right side evaluated with the
// duality lower bound of E_n, so floating point biases both sides toward
// failure and a pass is trustworthy.
struct BoundReport {
  ClassParams params;
  std::int64_t n = 0;
  ScaledValue lhs;         // grid value of ||f - S_{n-1} f||_C
  ScaledValue lhs_radius;  // certification radius of the sup
  ApproxResult en;         // E_n(f^{alpha,r}_beta)_{L_p}
  ScaledValue rhs_full;    // right side at gamma = +(14 pi)^2, en.lower
  ScaledValue rhs_main;    // main term only (gamma = 0), en.upper
  double implied_gamma = 0.0;
  bool pass = false;
  bool degenerate = false;  // deviation vanished (phi had no frequency >= n)
};

// Consistency report for the I_s estimate.
struct ISReport {
  LpIndex s;
  std::int64_t n = 0;
  double v = 0.0;            // pi n^{1-r} / (alpha r)
  double i_s_computed = 0.0;
  double f_term = 0.0;       // F^{1/s}(1/2, (3-s)/2; 3/2; 1)
  double implied_theta = 0.0;
  bool in_regime = false;    // n >= n0(alpha, r, s')
};

struct AsymptoticsReport {
  ScaledValue computed;  // (1/pi)||P^{(n)}||_s by quadrature
  ScaledValue main;
  ScaledValue bracket;
  double implied_delta = 0.0;
  bool in_regime = false;  // n >= n0(alpha, r, s')
};

// Right side of the main inequality for 1 < p < inf:
//   e^{-alpha n^r} n^{(1-r)/p} ( ||cos||_{p'} / (pi^{1+1/p'} (alpha r)^{1/p})
//     * F^{1/p'}(1/2,(3-p')/2;3/2;1)
//   + gamma ( (1 + (alpha r)^{(p'-1)/p}/(p'-1)) n^{-(1-r)/p}
//             + p^{1/p'} / (alpha r)^{1+1/p} n^{-r} ) ) * en.
ScaledValue rhs_theorem1_general(const ClassParams& params, std::int64_t n,
                                 double en, double gamma);

// p = 1 case:
//   e^{-alpha n^r} n^{1-r} ( 1/(pi alpha r)
//     + gamma ( n^{-r}/(alpha r)^2 + n^{-(1-r)} ) ) * en.
ScaledValue rhs_theorem1_p1(const ClassParams& params, std::int64_t n,
                            double en, double gamma);

// Dispatches on p; rejects p = inf.
ScaledValue rhs_theorem1(const ClassParams& params, std::int64_t n, double en,
                         double gamma);

// Class-level bound: right side with en = 1 and gamma = +(14 pi)^2.
ScaledValue class_bound(const ClassParams& params, std::int64_t n);

// Full pipeline for one phi in B_p^0: f = kernel convolution of phi,
// lhs = certified sup of f - S_{n-1} f, en = best approximation of phi.
BoundReport verify_inequality(const TrigPoly& phi, const ClassParams& params,
                              std::int64_t n, double tol);

// Empirical extremal ratio at x0: achieved |rho_n(f*; x0)| over
// (1/pi)||P^{(n)}||_{p'} for the dual extremal phi*.  Requires 1 < p < inf.
double sharpness_probe(const ClassParams& params, std::int64_t n, double x0);

// implied delta = (computed - main) / bracket for the kernel norm estimate.
AsymptoticsReport check_norm_asymptotics(const ClassParams& params,
                                         std::int64_t n, const LpIndex& s,
                                         double tol = 1e-8);

// I_s consistency: implied Theta = (I_s(v) - F_term)(s-1) v^{s-1}.
ISReport check_is_estimate(const ClassParams& params, std::int64_t n,
                           double s);

}  // namespace gpsum

#endif
