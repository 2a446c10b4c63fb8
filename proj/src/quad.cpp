#include "gpsum/quad.hpp"

#include <cmath>

#include "gpsum/errors.hpp"

namespace gpsum {

namespace {

struct SimpsonState {
  const std::function<double(double)>* f;
  double tol_total;  // absolute tolerance budget for [a,b]
  double length;
  bool failed = false;
  double worst = 0.0;
};

double simpson_value(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(SimpsonState& st, double a, double b, double fa, double fm,
               double fb, double whole, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = (*st.f)(lm), frm = (*st.f)(rm);
  double left = simpson_value(fa, flm, fm, m - a);
  double right = simpson_value(fm, frm, fb, b - m);
  double err = (left + right - whole) / 15.0;
  double local_tol = st.tol_total * (b - a) / st.length;
  if (std::abs(err) <= local_tol || depth <= 0) {
    if (depth <= 0 && std::abs(err) > local_tol) {
      st.failed = true;
      if (std::abs(err) > st.worst) st.worst = std::abs(err);
    }
    return left + right + err;  // Richardson correction
  }
  return recurse(st, a, m, fa, flm, fm, left, depth - 1) +
         recurse(st, m, b, fm, frm, fb, right, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, double abs_tol,
                        int max_depth) {
  if (a == b) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = simpson_value(fa, fm, fb, b - a);
  double tol = std::max(abs_tol, rel_tol * std::abs(whole));
  if (tol == 0.0) tol = rel_tol;  // guard for integrals near zero

  // Two passes: the first estimate fixes the tolerance scale, the second
  // pass re-runs if the converged value moved the relative budget a lot.
  for (int pass = 0; pass < 2; ++pass) {
    SimpsonState st;
    st.f = &f;
    st.tol_total = tol;
    st.length = b - a;
    double result = recurse(st, a, b, fa, fm, fb, whole, max_depth);
    if (st.failed)
      throw AccuracyError("adaptive_simpson: depth cap reached", result,
                          st.worst);
    double tol_new = std::max(abs_tol, rel_tol * std::abs(result));
    if (tol_new == 0.0) tol_new = rel_tol;
    if (tol_new >= tol || pass == 1) return result;
    tol = tol_new;
  }
  return 0.0;  // unreachable
}

}  // namespace gpsum
