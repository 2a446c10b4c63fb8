#include "gpsum/params.hpp"

#include <cmath>
#include <limits>

namespace gpsum {

LpIndex LpIndex::parse(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "Inf" || text == "infinity")
    return LpIndex::infinity();
  size_t pos = 0;
  double v = std::stod(text, &pos);
  if (pos != text.size())
    throw std::domain_error("LpIndex: cannot parse '" + text + "'");
  return LpIndex(v);
}

std::string LpIndex::str() const {
  if (inf_) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

LpIndex conjugate(const LpIndex& p) {
  if (p.is_inf()) return LpIndex(1.0);
  double v = p.value();
  if (v == 1.0) return LpIndex::infinity();
  return LpIndex(v / (v - 1.0));
}

double chi(const LpIndex& p) { return p.is_inf() ? 1.0 : p.value(); }

double threshold(const LpIndex& p) {
  const double c = 1.0 / std::pow(3.0 * M_PI, 3);
  if (p.is_inf()) return c;
  double v = p.value();
  if (v == 1.0) return 1.0 / 14.0;
  return c * (v - 1.0) / v;
}

ClassParams::ClassParams(double alpha_, double r_, double beta_, LpIndex p_)
    : alpha(alpha_), r(r_), beta(beta_), p(p_) {
  if (!(alpha > 0.0)) throw std::domain_error("ClassParams: alpha must be > 0");
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("ClassParams: r must be in (0,1)");
}

double threshold_lhs(double alpha, double r, double chi_p, std::int64_t n) {
  double nd = static_cast<double>(n);
  return std::pow(nd, -r) / (alpha * r) +
         alpha * r * chi_p * std::pow(nd, -(1.0 - r));
}

std::int64_t smallest_n_satisfying(double alpha, double r, double chi_p,
                                   double bound) {
  if (!(bound > 0.0))
    throw std::domain_error("smallest_n_satisfying: bound must be > 0");
  if (threshold_lhs(alpha, r, chi_p, 1) <= bound) return 1;
  std::int64_t lo = 1, hi = 2;
  while (threshold_lhs(alpha, r, chi_p, hi) > bound) {
    lo = hi;
    if (hi > (std::int64_t{1} << 60))
      throw std::runtime_error("smallest_n_satisfying: no solution found");
    hi *= 2;
  }
  // invariant: lhs(lo) > bound >= lhs(hi); lhs strictly decreasing in n
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (threshold_lhs(alpha, r, chi_p, mid) <= bound)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

std::int64_t n0(const ClassParams& params) {
  return smallest_n_satisfying(params.alpha, params.r, chi(params.p),
                               threshold(params.p));
}

}  // namespace gpsum
