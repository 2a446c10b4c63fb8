#include "gpsum/bestapprox.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "gpsum/errors.hpp"
#include "gpsum/fft.hpp"

namespace gpsum {

namespace detail {

void levinson_solve(const std::vector<std::complex<double>>& t,
                    const std::vector<std::complex<double>>& y,
                    std::vector<std::complex<double>>& x) {
  using cd = std::complex<double>;
  const std::size_t m = t.size();
  if (y.size() != m) throw std::invalid_argument("levinson: size mismatch");
  x.assign(m, cd(0.0));
  if (m == 0) return;
  if (std::abs(t[0]) == 0.0)
    throw std::runtime_error("levinson: singular leading entry");

  // fwd solves T_k fwd = e_0; the back vector is its conjugate reversal.
  std::vector<cd> fwd(m, cd(0.0)), tmp(m);
  fwd[0] = 1.0 / t[0];
  x[0] = y[0] / t[0];

  for (std::size_t k = 1; k < m; ++k) {
    // sigma = row k of T_{k+1} applied to [fwd; 0]
    cd sigma(0.0);
    for (std::size_t j = 0; j < k; ++j) sigma += t[k - j] * fwd[j];
    cd denom = 1.0 - sigma * std::conj(sigma);
    if (std::abs(denom) < 1e-300)
      throw std::runtime_error("levinson: matrix numerically singular");
    double alpha = 1.0 / denom.real();
    // fwd' = alpha ([fwd; 0] - sigma [0; J conj(fwd)]); the back vector
    // [0; J conj(fwd)] places conj(fwd[k-i]) at position i.
    for (std::size_t j = 0; j < k; ++j) tmp[j] = std::conj(fwd[k - 1 - j]);
    for (std::size_t j = k; j-- > 0;)
      fwd[j + 1] = alpha * (((j + 1 < k) ? fwd[j + 1] : cd(0.0)) -
                            sigma * tmp[j]);
    fwd[0] = alpha * fwd[0];

    // residual of the solution extension
    cd rho(0.0);
    for (std::size_t j = 0; j < k; ++j) rho += t[k - j] * x[j];
    cd mu = y[k] - rho;
    // x' = [x; 0] + mu * J conj(fwd')
    for (std::size_t j = 0; j <= k; ++j)
      x[j] += mu * std::conj(fwd[k - j]);
  }
}

void toeplitz_matvec(const std::vector<std::complex<double>>& t,
                     const std::vector<std::complex<double>>& x,
                     std::vector<std::complex<double>>& y) {
  using cd = std::complex<double>;
  const std::size_t m = t.size();
  const std::size_t L = next_power_of_two(2 * m);
  std::vector<cd> c(L, cd(0.0)), v(L, cd(0.0));
  c[0] = t[0];
  for (std::size_t j = 1; j < m; ++j) {
    c[j] = t[j];
    c[L - j] = std::conj(t[j]);
  }
  for (std::size_t j = 0; j < m; ++j) v[j] = x[j];
  fft(c, false);
  fft(v, false);
  for (std::size_t j = 0; j < L; ++j) v[j] *= c[j];
  fft(v, true);
  y.assign(v.begin(), v.begin() + m);
}

}  // namespace detail

namespace {

using cd = std::complex<double>;

// Dense LDL^T solve for symmetric positive semidefinite systems (Newton
// polish only; sizes stay in the hundreds).
bool ldlt_solve(std::vector<double>& a, int m, std::vector<double>& b) {
  for (int j = 0; j < m; ++j) {
    double d = a[j * m + j];
    for (int k = 0; k < j; ++k) {
      double l = a[j * m + k];
      d -= l * l * a[k * m + k];
    }
    if (d <= 0.0) return false;
    a[j * m + j] = d;
    for (int i = j + 1; i < m; ++i) {
      double s = a[i * m + j];
      for (int k = 0; k < j; ++k)
        s -= a[i * m + k] * a[j * m + k] * a[k * m + k];
      a[i * m + j] = s / d;
    }
  }
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < i; ++k) b[i] -= a[i * m + k] * b[k];
  for (int i = 0; i < m; ++i) b[i] /= a[i * m + i];
  for (int i = m; i-- > 0;)
    for (int k = i + 1; k < m; ++k) b[i] -= a[k * m + i] * b[k];
  return true;
}

struct GridContext {
  std::size_t N = 0;
  int n = 0;       // approximation order
  int deg = 0;     // degree of f
  std::vector<double> fvals;

  std::size_t M() const { return 2 * static_cast<std::size_t>(n) - 1; }
};

std::vector<double> synth_poly(const TrigPoly& t, std::size_t N) {
  return eval_grid(t, N).values;
}

// Weighted least squares over degree n-1 polynomials through the Hermitian
// Toeplitz normal equations T x = y, T_{jk} = What(j-k), built from one FFT
// of the weights.  One Levinson-refinement pass guards against the mild
// instability of the recursion at high weight contrast.
TrigPoly solve_wls(const GridContext& g, const std::vector<double>& w) {
  const std::size_t N = g.N;
  const int n = g.n;
  const std::size_t M = g.M();
  std::vector<cd> wf(N), ww(N);
  for (std::size_t i = 0; i < N; ++i) {
    ww[i] = w[i];
    wf[i] = w[i] * g.fvals[i];
  }
  fft(ww, false);
  fft(wf, false);
  std::vector<cd> tcol(M), rhs(M);
  for (std::size_t m = 0; m < M; ++m) tcol[m] = ww[m];
  for (std::size_t j = 0; j < M; ++j) {
    std::ptrdiff_t freq = static_cast<std::ptrdiff_t>(j) - (n - 1);
    rhs[j] = wf[(freq % static_cast<std::ptrdiff_t>(N) + N) % N];
  }
  std::vector<cd> x;
  detail::levinson_solve(tcol, rhs, x);
  // iterative refinement: x += T^{-1} (rhs - T x)
  std::vector<cd> tx, corr;
  detail::toeplitz_matvec(tcol, x, tx);
  std::vector<cd> resid(M);
  for (std::size_t j = 0; j < M; ++j) resid[j] = rhs[j] - tx[j];
  detail::levinson_solve(tcol, resid, corr);
  for (std::size_t j = 0; j < M; ++j) x[j] += corr[j];

  TrigPoly t(n - 1);
  t.a0 = 2.0 * x[n - 1].real();
  for (int k = 1; k <= n - 1; ++k) {
    t.cos_coeffs[k - 1] = 2.0 * x[n - 1 + k].real();
    t.sin_coeffs[k - 1] = -2.0 * x[n - 1 + k].imag();
  }
  return t;
}

double discrete_lp(const std::vector<double>& r, double p, double h) {
  double acc = 0.0;
  for (double v : r) acc += std::pow(std::abs(v), p);
  return std::pow(acc * h, 1.0 / p);
}

TrigPoly residual_poly(const TrigPoly& f, const TrigPoly& t) {
  TrigPoly r = f;
  r.a0 -= t.a0;
  for (int k = 1; k <= t.degree(); ++k) {
    if (k > r.degree()) {
      r.cos_coeffs.resize(k, 0.0);
      r.sin_coeffs.resize(k, 0.0);
    }
    r.cos_coeffs[k - 1] -= t.cos_coeffs[k - 1];
    r.sin_coeffs[k - 1] -= t.sin_coeffs[k - 1];
  }
  r.trim();
  return r;
}

// ---- exact L1 machinery (Newton polish and certificates) ----

struct SignPattern {
  std::vector<double> zeros;   // ascending in [0, 2pi)
  std::vector<double> signs;   // sign of r on (zeros[j], zeros[j+1])
  double objective = 0.0;      // ||r||_1 from segment integrals
};

bool sign_pattern(const TrigPoly& r, std::size_t grid, SignPattern& out) {
  out.zeros = find_sign_changes(r, grid);
  if (out.zeros.size() < 2) return false;
  std::size_t m = out.zeros.size();
  out.signs.resize(m);
  out.objective = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double a = out.zeros[j];
    double b = (j + 1 < m) ? out.zeros[j + 1] : out.zeros[0] + 2.0 * M_PI;
    double seg = r.antiderivative(b) - r.antiderivative(a);
    out.signs[j] = seg >= 0.0 ? 1.0 : -1.0;
    out.objective += std::abs(seg);
  }
  return true;
}

// Phi_l = integral sign(r) e_l over the period, e_l in {1/2, cos kt, sin kt}.
// This is minus the gradient of ||f - t||_1 with respect to t's coefficients.
std::vector<double> l1_gradient(const SignPattern& sp, int n) {
  const std::size_t m = sp.zeros.size();
  std::vector<double> phi(2 * n - 1, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double a = sp.zeros[j];
    double b = (j + 1 < m) ? sp.zeros[j + 1] : sp.zeros[0] + 2.0 * M_PI;
    double s = sp.signs[j];
    phi[0] += s * (b - a) / 2.0;
    for (int k = 1; k < n; ++k) {
      phi[2 * k - 1] += s * (std::sin(k * b) - std::sin(k * a)) / k;
      phi[2 * k] += s * (-std::cos(k * b) + std::cos(k * a)) / k;
    }
  }
  return phi;
}

// Levenberg-damped Newton on the exact L1 objective.  The Hessian is the
// atomic form 2 E^T D E with atoms at the residual's zeros, D = 1/|r'(z)|.
// Returns the updated polynomial; iteration count is accumulated in iters.
TrigPoly newton_polish_l1(const TrigPoly& f, TrigPoly t, int n,
                          std::size_t zero_grid, int max_steps, int& iters) {
  const int M = 2 * n - 1;
  SignPattern sp;
  if (!sign_pattern(residual_poly(f, t), zero_grid, sp)) return t;
  double mu = 1e-9;
  for (int step = 0; step < max_steps; ++step) {
    std::vector<double> phi = l1_gradient(sp, n);
    double phimax = 0.0;
    for (double v : phi) phimax = std::max(phimax, std::abs(v));
    if (phimax < 1e-11) break;

    TrigPoly r = residual_poly(f, t);
    const std::size_t m = sp.zeros.size();
    // E row per zero: basis values; D: curvature weights
    std::vector<double> J(static_cast<std::size_t>(M) * M, 0.0);
    std::vector<double> row(M);
    double trace = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      double z = sp.zeros[j];
      row[0] = 0.5;
      for (int k = 1; k < n; ++k) {
        row[2 * k - 1] = std::cos(k * z);
        row[2 * k] = std::sin(k * z);
      }
      // r'(z)
      double c = std::cos(z), s = std::sin(z), ck = 1.0, sk = 0.0, rp = 0.0;
      for (int k = 1; k <= r.degree(); ++k) {
        double ck1 = ck * c - sk * s, sk1 = sk * c + ck * s;
        ck = ck1;
        sk = sk1;
        rp += k * (-r.cos_coeffs[k - 1] * sk + r.sin_coeffs[k - 1] * ck);
      }
      double d = 2.0 / std::max(std::abs(rp), 1e-13);
      for (int a = 0; a < M; ++a)
        for (int b = 0; b <= a; ++b) J[a * M + b] += d * row[a] * row[b];
    }
    for (int a = 0; a < M; ++a) {
      for (int b = a + 1; b < M; ++b) J[a * M + b] = J[b * M + a];
      trace += J[a * M + a];
    }
    trace /= M;

    bool accepted = false;
    for (int attempt = 0; attempt < 12 && !accepted; ++attempt) {
      std::vector<double> sys = J;
      for (int a = 0; a < M; ++a) sys[a * M + a] += mu * trace;
      std::vector<double> dx = phi;
      if (!ldlt_solve(sys, M, dx)) {
        mu *= 10.0;
        continue;
      }
      TrigPoly cand = t;
      cand.a0 += dx[0];
      for (int k = 1; k < n; ++k) {
        cand.cos_coeffs[k - 1] += dx[2 * k - 1];
        cand.sin_coeffs[k - 1] += dx[2 * k];
      }
      SignPattern sp_cand;
      if (sign_pattern(residual_poly(f, cand), zero_grid, sp_cand) &&
          sp_cand.objective < sp.objective) {
        t = cand;
        sp = sp_cand;
        accepted = true;
        mu = std::max(mu / 5.0, 1e-12);
      } else {
        mu *= 10.0;
      }
    }
    ++iters;
    if (!accepted) break;
  }
  return t;
}

// Low-frequency projection of the piecewise sign pattern, in closed form.
TrigPoly sign_low_projection(const SignPattern& sp, int n) {
  std::vector<double> phi = l1_gradient(sp, n);
  TrigPoly q(n - 1);
  // phi[0] = (1/2) integral sign, so the mean is phi[0]/pi; the stored
  // constant contributes a0/2.
  q.a0 = 2.0 * phi[0] / M_PI;
  for (int k = 1; k < n; ++k) {
    q.cos_coeffs[k - 1] = phi[2 * k - 1] / M_PI;
    q.sin_coeffs[k - 1] = phi[2 * k] / M_PI;
  }
  return q;
}

// Exact L1 duality certificate: g = sign(r) - q with q the closed-form low
// projection; lower = (integral f g) / ||g||_inf with
//   integral f g = sum_j s_j (F(z_{j+1}) - F(z_j)) - pi sum_k f_k q_k
//   ||g||_inf <= max over a fine grid of |s(t) - q(t)| + Bernstein radius.
double l1_certificate_sign(const TrigPoly& f, const SignPattern& sp, int n) {
  TrigPoly q = sign_low_projection(sp, n);
  const std::size_t m = sp.zeros.size();
  double int_fg = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double a = sp.zeros[j];
    double b = (j + 1 < m) ? sp.zeros[j + 1] : sp.zeros[0] + 2.0 * M_PI;
    int_fg += sp.signs[j] * (f.antiderivative(b) - f.antiderivative(a));
  }
  double int_fq = M_PI * f.a0 * q.a0 / 2.0;
  for (int k = 1; k < n && k <= f.degree(); ++k)
    int_fq += M_PI * (f.cos_coeffs[k - 1] * q.cos_coeffs[k - 1] +
                      f.sin_coeffs[k - 1] * q.sin_coeffs[k - 1]);
  double num = std::abs(int_fg - int_fq);

  // sup |s(t) - q(t)| over a dense grid, padded by q's derivative bound
  std::size_t nq = next_power_of_two(std::max<std::size_t>(4096, 64 * n));
  GridFunction qv = eval_grid(q, nq);
  double h = 2.0 * M_PI / static_cast<double>(nq);
  double sup = 0.0;
  std::size_t seg = 0;
  for (std::size_t i = 0; i < nq; ++i) {
    double tt = i * h;
    double tshift = tt < sp.zeros[0] ? tt + 2.0 * M_PI : tt;
    while (seg + 1 < m && sp.zeros[seg + 1] <= tshift) ++seg;
    if (tshift >= sp.zeros[0] + 2.0 * M_PI) seg = 0;
    double sv = sp.signs[std::min(seg, m - 1)];
    sup = std::max(sup, std::abs(sv - qv.values[i]));
  }
  double bern = 0.0;
  for (int k = 1; k < n; ++k)
    bern += k * (std::abs(q.cos_coeffs[k - 1]) + std::abs(q.sin_coeffs[k - 1]));
  sup += bern * M_PI / static_cast<double>(nq);
  return sup > 0.0 ? num / sup : 0.0;
}

// Square-wave certificate: g_tau = sgn(sin(n (t - tau))) is orthogonal to
// every polynomial of degree n-1 and has unit sup norm;
// integral f g_tau = 4 sum_{m odd} (b_{mn} cos(mn tau) - a_{mn} sin(mn tau))/m.
double l1_certificate_square_wave(const TrigPoly& f, int n) {
  std::vector<std::pair<int, std::pair<double, double>>> harmonics;
  for (int m = 1; m * n <= f.degree(); m += 2)
    harmonics.push_back({m, {f.cos_coeffs[m * n - 1], f.sin_coeffs[m * n - 1]}});
  if (harmonics.empty()) return 0.0;
  auto eval = [&](double tau) {
    double acc = 0.0;
    for (auto& [m, ab] : harmonics)
      acc += (ab.second * std::cos(m * n * tau) -
              ab.first * std::sin(m * n * tau)) / m;
    return 4.0 * acc;
  };
  int mmax = harmonics.back().first;
  int grid = std::max(64, 8 * mmax);
  double best = 0.0, best_tau = 0.0;
  double period = 2.0 * M_PI / n;
  for (int i = 0; i < grid; ++i) {
    double tau = period * i / grid;
    double v = std::abs(eval(tau));
    if (v > best) {
      best = v;
      best_tau = tau;
    }
  }
  // golden-section refinement around the best grid phase
  double lo = best_tau - period / grid, hi = best_tau + period / grid;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = std::abs(eval(c)), fd = std::abs(eval(d));
  for (int it = 0; it < 80; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = std::abs(eval(c));
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = std::abs(eval(d));
    }
  }
  return std::max(best, std::max(fc, fd));
}

// Grid duality certificate for finite p > 1: dual element |r|^{p-1} sign(r)
// analyzed on the grid and restricted to frequencies >= n.
double lp_certificate(const GridContext& g, const std::vector<double>& rvals,
                      const TrigPoly& f, double p, double quad_tol) {
  const std::size_t N = g.N;
  GridFunction d;
  d.values.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    double r = rvals[i];
    d.values[i] = std::pow(std::abs(r), p - 1.0) * (r >= 0.0 ? 1.0 : -1.0);
  }
  int kmax = static_cast<int>(N / 2 - 1);
  TrigPoly gdual = analyze_grid(d, kmax);
  gdual.a0 = 0.0;
  for (int k = 1; k < g.n && k <= kmax; ++k) {
    gdual.cos_coeffs[k - 1] = 0.0;
    gdual.sin_coeffs[k - 1] = 0.0;
  }
  double num = 0.0;
  for (int k = g.n; k <= std::min(f.degree(), kmax); ++k)
    num += f.cos_coeffs[k - 1] * gdual.cos_coeffs[k - 1] +
           f.sin_coeffs[k - 1] * gdual.sin_coeffs[k - 1];
  num = std::abs(num) * M_PI;
  if (num == 0.0) return 0.0;
  double pprime = p / (p - 1.0);
  double den = lp_norm(gdual, LpIndex(pprime), quad_tol);
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace

ApproxResult best_approx_l2(const TrigPoly& f, int n) {
  if (n < 1) throw std::domain_error("best_approx_l2: n must be >= 1");
  ApproxResult res;
  res.argmin = partial_sum(f, n);
  double acc = 0.0;
  for (int k = n; k <= f.degree(); ++k)
    acc += f.cos_coeffs[k - 1] * f.cos_coeffs[k - 1] +
           f.sin_coeffs[k - 1] * f.sin_coeffs[k - 1];
  res.upper = res.lower = std::sqrt(M_PI * acc);
  return res;
}

ApproxResult best_approx_lp(const TrigPoly& f, int n, const LpIndex& p,
                            double tol) {
  if (n < 1) throw std::domain_error("best_approx_lp: n must be >= 1");
  if (p.is_inf())
    throw std::domain_error("best_approx_lp: p = inf not supported");
  const double pv = p.value();
  if (pv < 1.0) throw std::domain_error("best_approx_lp: p must be >= 1");

  ApproxResult res;
  // trivial residual: f already lies in the space
  if (f.degree() < n) {
    res.argmin = f;
    return res;
  }

  GridContext g;
  g.n = n;
  g.deg = f.degree();
  g.N = next_power_of_two(std::max<std::size_t>(
      1024, 8 * static_cast<std::size_t>(std::max(f.degree(), 2 * n))));
  g.fvals = synth_poly(f, g.N);
  const double h = 2.0 * M_PI / static_cast<double>(g.N);

  TrigPoly t = partial_sum(f, n);
  std::vector<double> tv = synth_poly(t, g.N);
  std::vector<double> rvals(g.N), w(g.N);
  auto refresh_residual = [&]() {
    for (std::size_t i = 0; i < g.N; ++i) rvals[i] = g.fvals[i] - tv[i];
  };
  refresh_residual();

  double rms = 0.0;
  for (double v : rvals) rms += v * v;
  rms = std::sqrt(rms / static_cast<double>(g.N));
  if (rms < 1e-300) {  // projection already exact (f = t_{n-1})
    res.argmin = t;
    return res;
  }

  double obj = discrete_lp(rvals, pv, h);
  int iters = 0;

  if (pv == 2.0) {
    // constant weights: one WLS solve is the exact projection
    std::fill(w.begin(), w.end(), 1.0);
    t = solve_wls(g, w);
    tv = synth_poly(t, g.N);
    refresh_residual();
    ++iters;
  } else if (pv < 2.0) {
    double eps = 1e-2 * rms;
    const double eps_floor = (pv == 1.0 ? 1e-4 : 1e-7) * rms;
    const int max_iters = 240;
    int stage_iters = 0;
    while (iters < max_iters) {
      for (std::size_t i = 0; i < g.N; ++i)
        w[i] = std::pow(rvals[i] * rvals[i] + eps * eps, (pv - 2.0) / 2.0);
      t = solve_wls(g, w);
      tv = synth_poly(t, g.N);
      refresh_residual();
      ++iters;
      ++stage_iters;
      double obj_new = discrete_lp(rvals, pv, h);
      bool stage_done = std::abs(obj - obj_new) <=
                            std::max(tol * 1e-2, 1e-14) * obj_new ||
                        stage_iters >= 10;
      obj = obj_new;
      if (stage_done) {
        if (eps <= eps_floor * 1.0000001) break;
        eps = std::max(eps / 4.0, eps_floor);
        stage_iters = 0;
      }
    }
  } else {  // p > 2: Karlovitz-damped fixed point
    const double lambda0 = 1.0 / (pv - 1.0);
    const int max_iters = 200;
    while (iters < max_iters) {
      for (std::size_t i = 0; i < g.N; ++i)
        w[i] = std::pow(std::abs(rvals[i]), pv - 2.0) + 1e-30;
      TrigPoly t_wls = solve_wls(g, w);
      double lambda = lambda0;
      bool improved = false;
      for (int half = 0; half < 5 && !improved; ++half) {
        TrigPoly cand = t;
        cand.a0 += lambda * (t_wls.a0 - t.a0);
        for (int k = 1; k < n; ++k) {
          cand.cos_coeffs[k - 1] +=
              lambda * (t_wls.cos_coeffs[k - 1] - t.cos_coeffs[k - 1]);
          cand.sin_coeffs[k - 1] +=
              lambda * (t_wls.sin_coeffs[k - 1] - t.sin_coeffs[k - 1]);
        }
        std::vector<double> cv = synth_poly(cand, g.N);
        std::vector<double> cr(g.N);
        for (std::size_t i = 0; i < g.N; ++i) cr[i] = g.fvals[i] - cv[i];
        double obj_new = discrete_lp(cr, pv, h);
        if (obj_new <= obj) {
          t = cand;
          tv = cv;
          rvals = cr;
          improved = obj - obj_new > std::max(tol * 1e-2, 1e-15) * obj;
          obj = obj_new;
          break;
        }
        lambda /= 2.0;
      }
      ++iters;
      if (!improved) break;
    }
  }

  // p = 1: polish against the exact objective when the dense Newton system
  // is affordable, then certify from the sign pattern.
  SignPattern sp;
  bool have_pattern = false;
  if (pv == 1.0) {
    std::size_t zero_grid =
        next_power_of_two(std::max<std::size_t>(8192, 32 * f.degree()));
    if (2 * n - 1 <= 1024) {
      int newton_iters = 0;
      t = newton_polish_l1(f, t, n, zero_grid, 60, newton_iters);
      iters += newton_iters;
      tv = synth_poly(t, g.N);
      refresh_residual();
    }
    have_pattern = sign_pattern(residual_poly(f, t), zero_grid, sp);
  }

  // certified upper bound: continuum norm of the realized residual
  TrigPoly rpoly = residual_poly(f, t);
  res.upper = (pv == 1.0 && have_pattern)
                  ? sp.objective
                  : lp_norm(rpoly, p, std::min(1e-9, tol * 1e-2));

  // duality lower bound
  double lower = 0.0;
  if (pv == 1.0) {
    if (have_pattern) lower = l1_certificate_sign(f, sp, n);
    lower = std::max(lower, l1_certificate_square_wave(f, n));
  } else {
    lower = lp_certificate(g, rvals, f, pv, std::min(1e-9, tol * 1e-2));
  }
  res.lower = std::min(lower, res.upper);
  res.argmin = t;
  res.iterations = iters;
  return res;
}

}  // namespace gpsum
