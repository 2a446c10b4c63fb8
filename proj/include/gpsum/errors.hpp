#ifndef GPSUM_ERRORS_HPP
#define GPSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpsum {

// Raised when an iterative scheme fails to reach its tolerance.  Carries the
// best available estimate so callers can decide whether to keep going.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate,
                double achieved_tolerance)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        achieved_tolerance_(achieved_tolerance) {}

  double best_estimate() const { return best_estimate_; }
  double achieved_tolerance() const { return achieved_tolerance_; }

 private:
  double best_estimate_;
  double achieved_tolerance_;
};

}  // namespace gpsum

#endif
