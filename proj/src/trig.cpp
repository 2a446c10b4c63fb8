#include "gpsum/trig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "gpsum/errors.hpp"
#include "gpsum/fft.hpp"
#include "gpsum/kernel.hpp"

namespace gpsum {

double TrigPoly::eval(double t) const {
  // Clenshaw-style accumulation via phase recurrence: cos/sin of kt from
  // the k-1 values, one complex multiply per term.
  double c = std::cos(t), s = std::sin(t);
  double ck = 1.0, sk = 0.0;  // cos(0), sin(0)
  double acc = a0 / 2.0;
  for (int k = 1; k <= degree(); ++k) {
    double ck1 = ck * c - sk * s;
    double sk1 = sk * c + ck * s;
    ck = ck1;
    sk = sk1;
    acc += cos_coeffs[k - 1] * ck + sin_coeffs[k - 1] * sk;
  }
  return acc;
}

double TrigPoly::antiderivative(double t) const {
  double c = std::cos(t), s = std::sin(t);
  double ck = 1.0, sk = 0.0;
  double acc = a0 / 2.0 * t;
  for (int k = 1; k <= degree(); ++k) {
    double ck1 = ck * c - sk * s;
    double sk1 = sk * c + ck * s;
    ck = ck1;
    sk = sk1;
    acc += (cos_coeffs[k - 1] * sk - sin_coeffs[k - 1] * ck) / k;
  }
  return acc;
}

void TrigPoly::trim() {
  int d = degree();
  while (d > 0 && cos_coeffs[d - 1] == 0.0 && sin_coeffs[d - 1] == 0.0) --d;
  cos_coeffs.resize(d);
  sin_coeffs.resize(d);
}

void ScaledTrigPoly::renormalize() {
  double m = std::abs(poly.a0) / 2.0;
  for (double v : poly.cos_coeffs) m = std::max(m, std::abs(v));
  for (double v : poly.sin_coeffs) m = std::max(m, std::abs(v));
  if (m == 0.0 || m == 1.0) return;
  double shift = std::log(m);
  double inv = std::exp(-shift);
  poly.a0 *= inv;
  for (double& v : poly.cos_coeffs) v *= inv;
  for (double& v : poly.sin_coeffs) v *= inv;
  log_scale += shift;
}

GridFunction eval_grid(const TrigPoly& f, std::size_t n_points) {
  const int deg = f.degree();
  if (!is_power_of_two(n_points))
    throw std::invalid_argument("eval_grid: N must be a power of two");
  if (n_points < 2 * static_cast<std::size_t>(deg) + 2)
    throw std::invalid_argument("eval_grid: grid too small, aliasing");
  std::vector<std::complex<double>> spec(n_points, 0.0);
  spec[0] = f.a0 / 2.0;
  for (int k = 1; k <= deg; ++k) {
    std::complex<double> ck(f.cos_coeffs[k - 1] / 2.0,
                            -f.sin_coeffs[k - 1] / 2.0);
    spec[k] = ck;
    spec[n_points - k] = std::conj(ck);
  }
  fft(spec, true);
  GridFunction g;
  g.values.resize(n_points);
  for (std::size_t i = 0; i < n_points; ++i)
    g.values[i] = spec[i].real() * static_cast<double>(n_points);
  return g;
}

TrigPoly analyze_grid(const GridFunction& g, int max_degree) {
  const std::size_t n = g.size();
  if (!is_power_of_two(n))
    throw std::invalid_argument("analyze_grid: N must be a power of two");
  if (static_cast<std::size_t>(max_degree) > n / 2 - 1)
    throw std::invalid_argument("analyze_grid: degree exceeds Nyquist");
  std::vector<std::complex<double>> spec(n);
  for (std::size_t i = 0; i < n; ++i) spec[i] = g.values[i];
  fft(spec, false);
  TrigPoly f(max_degree);
  f.a0 = 2.0 * spec[0].real() / static_cast<double>(n);
  for (int k = 1; k <= max_degree; ++k) {
    f.cos_coeffs[k - 1] = 2.0 * spec[k].real() / static_cast<double>(n);
    f.sin_coeffs[k - 1] = -2.0 * spec[k].imag() / static_cast<double>(n);
  }
  return f;
}

TrigPoly partial_sum(const TrigPoly& f, int n) {
  if (n < 1) throw std::invalid_argument("partial_sum: n must be >= 1");
  TrigPoly out = f;
  int keep = std::min(n - 1, f.degree());
  out.cos_coeffs.resize(keep);
  out.sin_coeffs.resize(keep);
  return out;
}

TrigPoly deviation(const TrigPoly& f, int n) {
  if (n < 1) throw std::invalid_argument("deviation: n must be >= 1");
  TrigPoly out(f.degree());
  for (int k = n; k <= f.degree(); ++k) {
    out.cos_coeffs[k - 1] = f.cos_coeffs[k - 1];
    out.sin_coeffs[k - 1] = f.sin_coeffs[k - 1];
  }
  out.trim();
  return out;
}

ScaledTrigPoly deviation(const ScaledTrigPoly& f, int n) {
  ScaledTrigPoly out;
  out.poly = deviation(f.poly, n);
  out.log_scale = f.log_scale;
  return out;
}

TrigPoly convolve(const TrigPoly& kernel, const TrigPoly& phi) {
  if (!phi.zero_mean())
    throw std::invalid_argument("convolve: phi must be zero-mean");
  int deg = std::min(kernel.degree(), phi.degree());
  TrigPoly out(deg);
  for (int k = 1; k <= deg; ++k) {
    double A = kernel.cos_coeffs[k - 1], B = kernel.sin_coeffs[k - 1];
    double a = phi.cos_coeffs[k - 1], b = phi.sin_coeffs[k - 1];
    out.cos_coeffs[k - 1] = A * a - B * b;
    out.sin_coeffs[k - 1] = A * b + B * a;
  }
  out.trim();
  return out;
}

ScaledTrigPoly convolve_kernel(const TrigPoly& phi, const KernelSpec& spec) {
  if (!phi.zero_mean())
    throw std::invalid_argument("convolve_kernel: phi must be zero-mean");
  const double alpha = spec.params.alpha;
  const double r = spec.params.r;
  const double theta = spec.params.beta * M_PI / 2.0;
  const double ct = std::cos(theta), st = std::sin(theta);
  const int n = static_cast<int>(spec.n);
  const double nr = std::pow(static_cast<double>(n), r);

  ScaledTrigPoly out;
  out.log_scale = -alpha * nr;
  out.poly = TrigPoly(phi.degree());
  for (int k = n; k <= phi.degree(); ++k) {
    // e^{-alpha k^r} = e^{-alpha n^r} * e^{-alpha (k^r - n^r)}; the relative
    // exponent is evaluated as n^r expm1(r log1p((k-n)/n)) for accuracy.
    double rel = nr * std::expm1(r * std::log1p((k - n) / static_cast<double>(n)));
    double damp = std::exp(-alpha * rel);
    double a = phi.cos_coeffs[k - 1], b = phi.sin_coeffs[k - 1];
    out.poly.cos_coeffs[k - 1] = damp * (a * ct - b * st);
    out.poly.sin_coeffs[k - 1] = damp * (a * st + b * ct);
  }
  out.poly.trim();
  return out;
}

double lp_norm(const GridFunction& g, const LpIndex& p) {
  const std::size_t n = g.size();
  if (n == 0) return 0.0;
  if (p.is_inf()) {
    double m = 0.0;
    for (double v : g.values) m = std::max(m, std::abs(v));
    return m;
  }
  double pv = p.value();
  double h = 2.0 * M_PI / static_cast<double>(n);
  double acc = 0.0;
  for (double v : g.values) acc += std::pow(std::abs(v), pv);
  return std::pow(acc * h, 1.0 / pv);
}

std::vector<double> find_sign_changes(const TrigPoly& f,
                                      std::size_t grid_hint) {
  const int deg = std::max(f.degree(), 1);
  std::size_t n = grid_hint ? grid_hint
                            : next_power_of_two(
                                  std::max<std::size_t>(256, 16 * deg));
  GridFunction g = eval_grid(f, n);
  const double h = 2.0 * M_PI / static_cast<double>(n);
  std::vector<double> zeros;
  for (std::size_t i = 0; i < n; ++i) {
    double v0 = g.values[i];
    double v1 = g.values[(i + 1) % n];
    if (v0 == 0.0) {
      zeros.push_back(i * h);
      continue;
    }
    if ((v0 > 0.0) != (v1 > 0.0) && v1 != 0.0) {
      double lo = i * h, hi = lo + h;
      double flo = v0;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f.eval(mid);
        if ((flo > 0.0) != (fm > 0.0) || fm == 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      zeros.push_back(0.5 * (lo + hi));
    }
  }
  return zeros;
}

double l1_norm_exact(const TrigPoly& f) {
  std::vector<double> zeros = find_sign_changes(f);
  if (zeros.size() < 2) {
    // no sign change: |integral over the period| equals the L1 norm
    return std::abs(f.antiderivative(2.0 * M_PI) - f.antiderivative(0.0));
  }
  double total = 0.0;
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    double a = zeros[j];
    double b = (j + 1 < zeros.size()) ? zeros[j + 1] : zeros[0] + 2.0 * M_PI;
    total += std::abs(f.antiderivative(b) - f.antiderivative(a));
  }
  return total;
}

double lp_norm(const TrigPoly& f, const LpIndex& p, double rel_tol) {
  if (p.is_inf()) {
    SupBound b = sup_norm_certified(f);
    return b.value + b.radius;
  }
  double pv = p.value();
  if (pv < 1.0) throw std::domain_error("lp_norm: p must be >= 1");
  if (pv == 1.0) return l1_norm_exact(f);

  const int deg = std::max(f.degree(), 1);
  std::size_t n = next_power_of_two(std::max<std::size_t>(1024, 8 * deg));
  double prev = lp_norm(eval_grid(f, n), p);
  const std::size_t n_cap = std::size_t{1} << 24;
  while (n < n_cap) {
    n *= 2;
    double cur = lp_norm(eval_grid(f, n), p);
    double diff = std::abs(cur - prev);
    prev = cur;
    if (diff <= rel_tol * std::abs(cur)) return cur;
  }
  throw AccuracyError("lp_norm: grid doubling did not converge", prev,
                      rel_tol);
}

SupBound sup_norm_certified(const TrigPoly& f, std::size_t min_points) {
  const int deg = f.degree();
  if (deg == 0) return {std::abs(f.a0) / 2.0, 0.0};
  std::size_t n = next_power_of_two(
      std::max<std::size_t>({64, 16 * static_cast<std::size_t>(deg),
                             min_points}));
  GridFunction g = eval_grid(f, n);
  double m = 0.0;
  for (double v : g.values) m = std::max(m, std::abs(v));
  double bernstein = 0.0;  // bound on ||f'||_inf
  for (int k = 1; k <= deg; ++k)
    bernstein += k * (std::abs(f.cos_coeffs[k - 1]) +
                      std::abs(f.sin_coeffs[k - 1]));
  return {m, bernstein * M_PI / static_cast<double>(n)};
}

}  // namespace gpsum
