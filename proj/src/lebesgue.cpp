#include "gpsum/lebesgue.hpp"

#include <cmath>
#include <stdexcept>

#include "gpsum/fft.hpp"
#include "gpsum/specfun.hpp"

namespace gpsum {

ScaledValue rhs_theorem1_general(const ClassParams& params, std::int64_t n,
                                 double en, double gamma) {
  if (params.p.is_inf() || params.p.value() <= 1.0)
    throw std::domain_error("rhs_theorem1_general: needs 1 < p < inf");
  if (en < 0.0) throw std::domain_error("rhs_theorem1_general: en < 0");
  const double p = params.p.value();
  const double pp = conjugate(params.p).value();
  const double ar = params.alpha * params.r;
  const double nd = static_cast<double>(n);
  const double nr = std::pow(nd, params.r);

  const double main_coef = cos_norm(LpIndex(pp)) /
                           (std::pow(M_PI, 1.0 + 1.0 / pp) *
                            std::pow(ar, 1.0 / p)) *
                           theorem_main_F(pp);
  const double correction =
      (1.0 + std::pow(ar, (pp - 1.0) / p) / (pp - 1.0)) *
          std::pow(nd, -(1.0 - params.r) / p) +
      std::pow(p, 1.0 / pp) / std::pow(ar, 1.0 + 1.0 / p) *
          std::pow(nd, -params.r);

  double factor = main_coef + gamma * correction;
  if (factor < 0.0) factor = 0.0;  // huge negative gamma, clamp at zero
  return ScaledValue::from_parts(
             std::pow(nd, (1.0 - params.r) / p) * factor,
             -params.alpha * nr) *
         en;
}

ScaledValue rhs_theorem1_p1(const ClassParams& params, std::int64_t n,
                            double en, double gamma) {
  if (params.p.is_inf() || params.p.value() != 1.0)
    throw std::domain_error("rhs_theorem1_p1: needs p = 1");
  if (en < 0.0) throw std::domain_error("rhs_theorem1_p1: en < 0");
  const double ar = params.alpha * params.r;
  const double nd = static_cast<double>(n);
  const double nr = std::pow(nd, params.r);
  const double correction =
      std::pow(nd, -params.r) / (ar * ar) + std::pow(nd, -(1.0 - params.r));
  double factor = 1.0 / (M_PI * ar) + gamma * correction;
  if (factor < 0.0) factor = 0.0;
  return ScaledValue::from_parts(std::pow(nd, 1.0 - params.r) * factor,
                                 -params.alpha * nr) *
         en;
}

ScaledValue rhs_theorem1(const ClassParams& params, std::int64_t n, double en,
                         double gamma) {
  if (params.p.is_inf())
    throw std::domain_error("rhs_theorem1: p = inf is outside the bound");
  if (params.p.value() == 1.0) return rhs_theorem1_p1(params, n, en, gamma);
  return rhs_theorem1_general(params, n, en, gamma);
}

ScaledValue class_bound(const ClassParams& params, std::int64_t n) {
  return rhs_theorem1(params, n, 1.0, gamma_cap());
}

BoundReport verify_inequality(const TrigPoly& phi, const ClassParams& params,
                              std::int64_t n, double tol) {
  if (!phi.zero_mean())
    throw std::invalid_argument("verify_inequality: phi must be zero-mean");
  double phi_norm = lp_norm(phi, params.p, 1e-9);
  if (phi_norm > 1.0 + 1e-6)
    throw std::invalid_argument("verify_inequality: ||phi||_p exceeds 1");

  BoundReport rep;
  rep.params = params;
  rep.n = n;

  KernelSpec full = make_kernel_spec(params, 1);
  ScaledTrigPoly f = convolve_kernel(phi, full);
  ScaledTrigPoly dev = deviation(f, static_cast<int>(n));
  dev.renormalize();
  rep.degenerate = dev.poly.degree() == 0;

  SupBound sup = sup_norm_certified(dev.poly);
  rep.lhs = ScaledValue::from_parts(sup.value, dev.log_scale);
  rep.lhs_radius = ScaledValue::from_parts(sup.radius, dev.log_scale);

  if (params.p.is_inf())
    throw std::domain_error("verify_inequality: p = inf not in scope");
  rep.en = (params.p.value() == 2.0)
               ? best_approx_l2(phi, static_cast<int>(n))
               : best_approx_lp(phi, static_cast<int>(n), params.p, tol);

  rep.rhs_full = rhs_theorem1(params, n, rep.en.lower, gamma_cap());
  rep.rhs_main = rhs_theorem1(params, n, rep.en.upper, 0.0);

  // implied gamma solves lhs = (main_coef + gamma correction) scale en.upper
  ScaledValue main_up = rhs_theorem1(params, n, rep.en.upper, 0.0);
  ScaledValue corr_unit =
      rhs_theorem1(params, n, rep.en.upper, 1.0);  // main + 1 * correction
  if (rep.en.upper > 0.0 && !corr_unit.is_zero()) {
    double corr = corr_unit.ratio_to(main_up) - 1.0;  // correction/main
    if (corr > 0.0 && !main_up.is_zero()) {
      double lhs_over_main =
          rep.lhs.is_zero() ? 0.0 : rep.lhs.ratio_to(main_up);
      rep.implied_gamma = (lhs_over_main - 1.0) / corr;
    }
  }

  rep.pass = rep.lhs + rep.lhs_radius <= rep.rhs_full;
  return rep;
}

double sharpness_probe(const ClassParams& params, std::int64_t n, double x0) {
  if (params.p.is_inf() || params.p.value() <= 1.0)
    throw std::domain_error("sharpness_probe: needs 1 < p < inf");
  const double p = params.p.value();
  const double pp = conjugate(params.p).value();

  KernelSpec spec = make_kernel_spec(params, n);
  // Q(x0 - t) as a polynomial in t: frequency k gets phase k x0 - beta pi/2.
  TrigPoly q = kernel_poly(spec);
  TrigPoly qx(q.degree());
  for (int k = 1; k <= q.degree(); ++k) {
    double a = q.cos_coeffs[k - 1], b = q.sin_coeffs[k - 1];
    if (a == 0.0 && b == 0.0) continue;
    // cos(k(x0-t) - theta) rotation: coefficients of cos(kt), sin(kt)
    double c = std::cos(k * x0), s = std::sin(k * x0);
    qx.cos_coeffs[k - 1] = a * c + b * s;
    qx.sin_coeffs[k - 1] = a * s - b * c;
  }

  std::size_t grid = next_power_of_two(
      std::max<std::size_t>(4096, 4 * static_cast<std::size_t>(q.degree()) + 2));
  GridFunction qg = eval_grid(qx, grid);
  const double h = 2.0 * M_PI / static_cast<double>(grid);

  // phi* ~ |Q(x0-t)|^{p'-1} sign(Q(x0-t)), mean-corrected, ||phi*||_p = 1
  std::vector<double> phi(grid);
  double mean = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    double v = qg.values[i];
    phi[i] = std::pow(std::abs(v), pp - 1.0) * (v >= 0.0 ? 1.0 : -1.0);
    mean += phi[i];
  }
  mean /= static_cast<double>(grid);
  double norm_p = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    phi[i] -= mean;
    norm_p += std::pow(std::abs(phi[i]), p);
  }
  norm_p = std::pow(norm_p * h, 1.0 / p);

  // rho_n(f*; x0) = (1/pi) integral Q(x0-t) phi*(t) dt, in the kernel's scale
  double num = 0.0;
  for (std::size_t i = 0; i < grid; ++i) num += qg.values[i] * phi[i];
  num = std::abs(num) * h / (M_PI * norm_p);

  ScaledValue denom = kernel_norm(spec, conjugate(params.p), 1e-10);
  ScaledValue numer = ScaledValue::from_parts(num, spec.log_scale());
  return numer.ratio_to(denom);
}

AsymptoticsReport check_norm_asymptotics(const ClassParams& params,
                                         std::int64_t n, const LpIndex& s,
                                         double tol) {
  KernelSpec spec = make_kernel_spec(params, n);
  AsymptoticsReport rep;
  rep.computed = kernel_norm(spec, s, tol);
  KernelAsymptotics asym = kernel_norm_asymptotic(spec, s);
  rep.main = asym.main;
  rep.bracket = asym.bracket;
  rep.implied_delta = rep.computed.ratio_to(rep.bracket) -
                      rep.main.ratio_to(rep.bracket);
  ClassParams regime = params;
  regime.p = conjugate(s);
  rep.in_regime = n >= n0(regime);
  return rep;
}

ISReport check_is_estimate(const ClassParams& params, std::int64_t n,
                           double s) {
  if (!(s > 1.0))
    throw std::domain_error("check_is_estimate: needs 1 < s < inf");
  ISReport rep;
  rep.s = LpIndex(s);
  rep.n = n;
  const double ar = params.alpha * params.r;
  rep.v = M_PI * std::pow(static_cast<double>(n), 1.0 - params.r) / ar;
  rep.i_s_computed = i_s(rep.s, rep.v);
  rep.f_term = theorem_main_F(s);
  rep.implied_theta =
      (rep.i_s_computed - rep.f_term) * (s - 1.0) * std::pow(rep.v, s - 1.0);
  ClassParams regime = params;
  regime.p = conjugate(LpIndex(s));
  rep.in_regime = n >= n0(regime);
  return rep;
}

}  // namespace gpsum
