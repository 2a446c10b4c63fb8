#include "gpsum/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "gpsum/quad.hpp"

namespace gpsum {

namespace {

// Lanczos coefficients, g = 7, 9 terms (Godfrey's tabulation).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,   -1259.1392167224028,
    771.32342877765313,       -176.61502916214059, 12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6,
    1.5056327351493116e-7};

constexpr double kSqrtTwoPi = 2.5066282746310002;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Lanczos core for x >= 0.5.
double lanczos_log_gamma_core(double x) {
  double z = x - 1.0;
  double s = kLanczos[0];
  for (int i = 1; i < 9; ++i) s += kLanczos[i] / (z + i);
  double t = z + kLanczosG + 0.5;
  return std::log(kSqrtTwoPi * s) + (z + 0.5) * std::log(t) - t;
}

}  // namespace

double pochhammer(double x, int k) {
  if (k < 0) throw std::domain_error("pochhammer: k must be >= 0");
  double prod = 1.0;
  for (int i = 0; i < k; ++i) prod *= x + i;
  return prod;
}

double log_gamma(double x, int* sign) {
  if (is_nonpositive_integer(x))
    throw std::domain_error("log_gamma: pole at nonpositive integer");
  if (x >= 0.5) {
    if (sign) *sign = 1;
    return lanczos_log_gamma_core(x);
  }
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  double sin_pix = std::sin(M_PI * x);
  if (sign) *sign = sin_pix > 0.0 ? 1 : -1;
  return std::log(M_PI / std::abs(sin_pix)) - lanczos_log_gamma_core(1.0 - x);
}

double gamma_fn(double x) {
  int sign = 1;
  double lg = log_gamma(x, &sign);
  return sign * std::exp(lg);
}

double gauss_2f1_unit(double a, double b, double c) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("gauss_2f1_unit: c is a nonpositive integer");
  if (!(c - a - b > 0.0))
    throw std::domain_error("gauss_2f1_unit: divergent, needs c - a - b > 0");
  // Gamma poles in the denominator mean the reciprocal vanishes: the series
  // terminates or degenerates and the Gauss formula limit is 0.
  if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b))
    return 0.0;
  int s_num1, s_num2, s_den1, s_den2;
  double lg = log_gamma(c, &s_num1) + log_gamma(c - a - b, &s_num2) -
              log_gamma(c - a, &s_den1) - log_gamma(c - b, &s_den2);
  int sign = s_num1 * s_num2 * s_den1 * s_den2;
  return sign * std::exp(lg);
}

double theorem_main_F(double pprime) {
  if (!(pprime > 1.0))
    throw std::domain_error("theorem_main_F: needs finite p' > 1");
  double f = gauss_2f1_unit(0.5, (3.0 - pprime) / 2.0, 1.5);
  return std::pow(f, 1.0 / pprime);
}

double i_s(const LpIndex& s, double v) {
  if (v < 0.0) throw std::domain_error("i_s: v must be >= 0");
  if (s.is_inf()) return 1.0;  // sup of (1+t^2)^{-1/2} on [0,v] sits at t = 0
  if (v == 0.0) return 0.0;
  double sv = s.value();
  auto integrand = [sv](double t) {
    return std::pow(1.0 + t * t, -0.5 * sv);
  };
  double integral = adaptive_simpson(integrand, 0.0, v, 1e-12, 0.0);
  return std::pow(integral, 1.0 / sv);
}

double cos_norm(const LpIndex& s) {
  if (s.is_inf()) return 1.0;
  double sv = s.value();
  if (sv < 1.0) throw std::domain_error("cos_norm: s must be >= 1");
  auto integrand = [sv](double t) { return std::pow(std::cos(t), sv); };
  // |cos|^s over a full period is 4x the quarter-period integral
  double integral = 4.0 * adaptive_simpson(integrand, 0.0, M_PI / 2.0, 1e-12);
  return std::pow(integral, 1.0 / sv);
}

}  // namespace gpsum
