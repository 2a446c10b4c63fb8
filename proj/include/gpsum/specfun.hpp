#ifndef GPSUM_SPECFUN_HPP
#define GPSUM_SPECFUN_HPP

#include "gpsum/params.hpp"

namespace gpsum {

// Rising factorial x (x+1) ... (x+k-1); 1 for k = 0.
double pochhammer(double x, int k);

// Gamma function by Lanczos approximation (g = 7, 9 terms), with the
// reflection formula for arguments below 1/2.
double gamma_fn(double x);

// log |Gamma(x)| together with the sign of Gamma(x).
double log_gamma(double x, int* sign = nullptr);

// Gauss hypergeometric value at unit argument via the Gamma formula
//   F(a,b;c;1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
// Requires c - a - b > 0 (series convergence) and c not a nonpositive
// integer; throws std::domain_error otherwise.
double gauss_2f1_unit(double a, double b, double c);

// F^{1/p'}(1/2, (3-p')/2; 3/2; 1) appearing in the main bound term.
double theorem_main_F(double pprime);

// I_s(v) = || 1/sqrt(1+t^2) ||_{L_s[0,v]}.  Essential sup (= 1) for s = inf;
// adaptive quadrature with relative tolerance 1e-10 for finite s.
double i_s(const LpIndex& s, double v);

// (integral_0^{2pi} |cos t|^s dt)^{1/s} for finite s; 1 for s = inf.
double cos_norm(const LpIndex& s);

}  // namespace gpsum

#endif
