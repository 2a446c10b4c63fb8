#ifndef GPSUM_QUAD_HPP
#define GPSUM_QUAD_HPP

#include <functional>

namespace gpsum {

// Adaptive interval-halving Simpson.  Tolerance is treated as
// max(abs_tol, rel_tol * |running estimate|) distributed over subintervals.
// Throws AccuracyError when the depth cap is hit before the tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, double abs_tol = 0.0,
                        int max_depth = 52);

}  // namespace gpsum

#endif
