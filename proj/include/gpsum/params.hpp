#ifndef GPSUM_PARAMS_HPP
#define GPSUM_PARAMS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gpsum {

// Integrability index p in [1, inf].  Infinity is a distinguished tag, never
// a floating-point inf: formulas that need exponents like n^{(1-r)/p} branch
// on it explicitly instead of relying on IEEE semantics.
class LpIndex {
 public:
  LpIndex() : value_(2.0), inf_(false) {}

  explicit LpIndex(double p) : value_(p), inf_(false) {
    if (!(p >= 1.0)) throw std::domain_error("LpIndex: p must be >= 1");
  }

  static LpIndex infinity() {
    LpIndex s;
    s.inf_ = true;
    s.value_ = 0.0;
    return s;
  }

  static LpIndex parse(const std::string& text);

  bool is_inf() const { return inf_; }

  double value() const {
    if (inf_) throw std::logic_error("LpIndex: value() on infinity");
    return value_;
  }

  bool operator==(const LpIndex& o) const {
    return inf_ == o.inf_ && (inf_ || value_ == o.value_);
  }

  std::string str() const;

 private:
  double value_;
  bool inf_;
};

// p' with 1/p + 1/p' = 1; conjugate(1) = inf, conjugate(inf) = 1.
LpIndex conjugate(const LpIndex& p);

// chi(p) = p for finite p, 1 for p = inf.
double chi(const LpIndex& p);

// Right-hand side of the threshold condition: 1/14 at p = 1,
// (p-1)/(p (3 pi)^3) for finite p > 1, 1/(3 pi)^3 at p = inf.
double threshold(const LpIndex& p);

struct ClassParams {
  double alpha = 1.0;  // kernel decay scale, > 0
  double r = 0.5;      // kernel decay exponent, in (0,1)
  double beta = 0.0;   // phase, in units of pi/2
  LpIndex p;           // integrability index

  ClassParams() = default;
  ClassParams(double alpha_, double r_, double beta_, LpIndex p_);

  LpIndex p_conj() const { return conjugate(p); }
};

// Left side of the threshold condition at integer n:
//   (1/(alpha r)) n^{-r} + alpha r chi(p) n^{-(1-r)}.
// Strictly decreasing in n when 0 < r < 1.
double threshold_lhs(double alpha, double r, double chi_p, std::int64_t n);

// Smallest n >= 1 with threshold_lhs(n) <= bound.  Exponential bracketing
// followed by integer bisection; the bound can force n beyond 10^6.
std::int64_t smallest_n_satisfying(double alpha, double r, double chi_p,
                                   double bound);

// Threshold index n0 for the class: smallest n satisfying the condition
// with the class's own chi(p) and threshold(p).
std::int64_t n0(const ClassParams& params);

}  // namespace gpsum

#endif
