#include "gpsum/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "gpsum/errors.hpp"
#include "gpsum/fft.hpp"
#include "gpsum/specfun.hpp"

namespace gpsum {

namespace {

// k^r - n^r evaluated without cancellation for k >= n.
double power_gap(double r, std::int64_t n, std::int64_t k) {
  double nd = static_cast<double>(n);
  double nr = std::pow(nd, r);
  return nr * std::expm1(r * std::log1p(static_cast<double>(k - n) / nd));
}

double tail_bound_at(const ClassParams& p, std::int64_t n, std::int64_t K) {
  double ar = p.alpha * p.r;
  double Kr = std::pow(static_cast<double>(K), p.r);
  double denom = 1.0 - (1.0 - p.r) / (ar * Kr);
  if (denom <= 0.5) return std::numeric_limits<double>::infinity();
  double K1r = std::pow(static_cast<double>(K), 1.0 - p.r);
  return std::exp(-p.alpha * power_gap(p.r, n, K)) * K1r / (ar * denom);
}

}  // namespace

double KernelSpec::log_scale() const {
  return -params.alpha * std::pow(static_cast<double>(n), params.r);
}

std::pair<std::int64_t, double> truncation_index(const ClassParams& params,
                                                 std::int64_t n, double eps) {
  if (!(eps > 0.0))
    throw std::domain_error("truncation_index: eps must be > 0");
  // push K into the regime where the integral bound is valid and decreasing
  double ar = params.alpha * params.r;
  std::int64_t K = n;
  while (ar * std::pow(static_cast<double>(K), params.r) <=
         2.0 * (1.0 - params.r))
    K *= 2;
  if (tail_bound_at(params, n, K) > eps) {
    std::int64_t lo = K, hi = 2 * K;
    while (tail_bound_at(params, n, hi) > eps) {
      lo = hi;
      hi *= 2;
      if (hi > (std::int64_t{1} << 56))
        throw std::runtime_error("truncation_index: bound never met");
    }
    while (hi - lo > 1) {
      std::int64_t mid = lo + (hi - lo) / 2;
      if (tail_bound_at(params, n, mid) <= eps)
        hi = mid;
      else
        lo = mid;
    }
    K = hi;
  }
  return {K, tail_bound_at(params, n, K)};
}

KernelSpec make_kernel_spec(const ClassParams& params, std::int64_t n,
                            double eps) {
  if (n < 1) throw std::domain_error("make_kernel_spec: n must be >= 1");
  auto [K, bound] = truncation_index(params, n, eps);
  KernelSpec spec;
  spec.params = params;
  spec.n = n;
  spec.trunc_k = K;
  spec.tail_bound = bound;
  return spec;
}

std::vector<double> scaled_coefficients(const KernelSpec& spec) {
  std::vector<double> c(static_cast<std::size_t>(spec.trunc_k - spec.n + 1));
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = std::exp(-spec.params.alpha *
                    power_gap(spec.params.r, spec.n,
                              spec.n + static_cast<std::int64_t>(j)));
  return c;
}

TrigPoly kernel_poly(const KernelSpec& spec) {
  if (spec.trunc_k > (std::int64_t{1} << 26))
    throw std::invalid_argument("kernel_poly: truncation too large to expand");
  std::vector<double> c = scaled_coefficients(spec);
  double theta = spec.params.beta * M_PI / 2.0;
  double ct = std::cos(theta), st = std::sin(theta);
  TrigPoly q(static_cast<int>(spec.trunc_k));
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::size_t k = static_cast<std::size_t>(spec.n) + j;
    // cos(kt - theta) = cos(theta) cos(kt) + sin(theta) sin(kt)
    q.cos_coeffs[k - 1] = c[j] * ct;
    q.sin_coeffs[k - 1] = c[j] * st;
  }
  return q;
}

GridFunction eval_scaled_kernel_grid(const KernelSpec& spec,
                                     std::size_t grid_size) {
  if (grid_size < 2 * static_cast<std::size_t>(spec.trunc_k) + 1)
    throw std::invalid_argument("eval_scaled_kernel_grid: grid too small");
  return eval_grid(kernel_poly(spec), grid_size);
}

ScaledValue kernel_norm(const KernelSpec& spec, const LpIndex& s, double tol) {
  const TrigPoly q = kernel_poly(spec);
  const double log_scale = spec.log_scale();

  if (s.is_inf()) {
    std::size_t n_pts = next_power_of_two(
        std::max<std::size_t>(1024, 4 * static_cast<std::size_t>(spec.trunc_k)));
    const std::size_t cap = std::size_t{1} << 24;
    SupBound b = sup_norm_certified(q, n_pts);
    while (b.radius > tol * b.value && n_pts < cap) {
      n_pts *= 2;
      b = sup_norm_certified(q, n_pts);
    }
    if (b.radius > tol * b.value)
      throw AccuracyError("kernel_norm: sup certificate did not tighten",
                          (b.value + b.radius) / M_PI, b.radius / b.value);
    double sup = b.value + 0.5 * b.radius + spec.tail_bound;
    return ScaledValue::from_parts(sup / M_PI, log_scale);
  }

  double sv = s.value();
  if (sv < 1.0) throw std::domain_error("kernel_norm: s must be >= 1");
  std::size_t n_pts = next_power_of_two(
      std::max<std::size_t>(1024, 4 * static_cast<std::size_t>(spec.trunc_k)));
  const std::size_t cap = std::size_t{1} << 24;
  LpIndex ls(sv);
  double prev = lp_norm(eval_grid(q, n_pts), ls);
  while (n_pts < cap) {
    n_pts *= 2;
    double cur = lp_norm(eval_grid(q, n_pts), ls);
    double diff = std::abs(cur - prev);
    prev = cur;
    if (diff <= tol * cur)
      return ScaledValue::from_parts(cur / M_PI, log_scale);
  }
  throw AccuracyError("kernel_norm: quadrature did not converge", prev / M_PI,
                      tol);
}

KernelAsymptotics kernel_norm_asymptotic(const KernelSpec& spec,
                                         const LpIndex& s) {
  const double alpha = spec.params.alpha;
  const double r = spec.params.r;
  const double nd = static_cast<double>(spec.n);
  const double ar = alpha * r;
  const double v = M_PI * std::pow(nd, 1.0 - r) / ar;
  const double is_v = i_s(s, v);
  const double log_scale = spec.log_scale();

  // exponents carrying 1/s and 1/s' with the inf cases made explicit
  const LpIndex s_conj = conjugate(s);
  const double inv_s = s.is_inf() ? 0.0 : 1.0 / s.value();
  const double inv_sc = s_conj.is_inf() ? 0.0 : 1.0 / s_conj.value();

  const double n_pow = std::pow(nd, (1.0 - r) * inv_sc);
  const double main_coef = cos_norm(s) /
                           (std::pow(M_PI, 1.0 + inv_s) * std::pow(ar, inv_sc));
  const double bracket_coef =
      is_v / std::pow(ar, 1.0 + inv_sc) * std::pow(nd, -r) +
      std::pow(nd, -(1.0 - r) * inv_sc);

  KernelAsymptotics out;
  out.main =
      ScaledValue::from_parts(n_pow * main_coef * is_v, log_scale);
  out.bracket = ScaledValue::from_parts(n_pow * bracket_coef, log_scale);
  return out;
}

ScaledValue kernel_norm_envelope(const KernelSpec& spec, const LpIndex& s) {
  if (s.is_inf())
    throw std::domain_error("kernel_norm_envelope: finite s only");
  double sv = s.value();
  std::vector<double> c = scaled_coefficients(spec);
  // |A(t)|, A(t) = sum_j c_j e^{ijt}, sampled alias-free for the envelope
  std::size_t n_pts = next_power_of_two(std::max<std::size_t>(4 * c.size(), 1024));
  std::vector<std::complex<double>> spec_c(n_pts, 0.0);
  for (std::size_t j = 0; j < c.size(); ++j) spec_c[j] = c[j];
  fft(spec_c, true);
  double h = 2.0 * M_PI / static_cast<double>(n_pts);
  double acc = 0.0;
  for (auto& z : spec_c)
    acc += std::pow(std::abs(z) * static_cast<double>(n_pts), sv);
  acc *= h;
  // fast phase contributes the mean of |cos|^s per period
  double cos_s = std::pow(cos_norm(s), sv) / (2.0 * M_PI);
  double norm_s = std::pow(acc * cos_s, 1.0 / sv);
  return ScaledValue::from_parts(norm_s / M_PI, spec.log_scale());
}

}  // namespace gpsum
