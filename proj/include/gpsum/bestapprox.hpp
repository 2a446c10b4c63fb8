#ifndef GPSUM_BESTAPPROX_HPP
#define GPSUM_BESTAPPROX_HPP

#include "gpsum/params.hpp"
#include "gpsum/trig.hpp"

namespace gpsum {

// Certified two-sided value of E_n(f)_{L_p} = inf_t ||f - t||_p over trig
// polynomials t of degree n-1.
struct ApproxResult {
  double upper = 0.0;  // ||f - argmin||_p, a genuine upper bound
  double lower = 0.0;  // duality certificate, a genuine lower bound
  TrigPoly argmin;     // best polynomial found
  int iterations = 0;

  double gap() const {
    return upper > 0.0 ? (upper - lower) / upper : 0.0;
  }
};

// Exact by orthogonal projection: argmin = S_{n-1}(f),
// value = sqrt(pi sum_{k>=n} (a_k^2 + b_k^2)).
ApproxResult best_approx_l2(const TrigPoly& f, int n);

// General L_p via iteratively reweighted least squares on a uniform grid:
// smoothing-annealed weights for p < 2, Karlovitz damping for p > 2, and the
// weighted subproblems solved through their Hermitian Toeplitz normal
// equations (Levinson recursion + one FFT-residual refinement step).
// For p = 1 the IRLS point is polished by a damped Newton method on the
// exact L1 objective (segment integrals between residual sign changes).
// The lower bound comes from the duality certificate
//   E_n(f)_p >= (integral f g) / ||g||_{p'}
// with g built from the residual's dual element restricted to frequencies
// >= n; for p = 1 the certificate is evaluated in closed form from the sign
// pattern, together with a square-wave test function max over phase.
ApproxResult best_approx_lp(const TrigPoly& f, int n, const LpIndex& p,
                            double tol);

namespace detail {

// Solves T x = y for Hermitian positive definite Toeplitz T given by its
// first column t (t[0] real).  Levinson-Durbin recursion, O(m^2).
void levinson_solve(const std::vector<std::complex<double>>& t,
                    const std::vector<std::complex<double>>& y,
                    std::vector<std::complex<double>>& x);

// y = T x for the same representation, via circulant embedding (FFT).
void toeplitz_matvec(const std::vector<std::complex<double>>& t,
                     const std::vector<std::complex<double>>& x,
                     std::vector<std::complex<double>>& y);

}  // namespace detail

}  // namespace gpsum

#endif
