#include "waring/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <string>

namespace waring {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

const GLRule& gauss_legendre(int n) {
  static std::map<int, GLRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Newton iteration on P_n from the Chebyshev initial guess.
  GLRule rule;
  rule.x.resize(static_cast<std::size_t>(n));
  rule.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.w[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

void spherical_bessel(int nmax, double x, double* out) {
  if (x < 0.0) x = -x;  // callers conjugate separately
  if (x < 1e-8) {
    // j_n(x) ~ x^n / (2n+1)!!
    double df = 1.0, p = 1.0;
    for (int n = 0; n <= nmax; ++n) {
      out[n] = p / df;
      p *= x;
      df *= 2.0 * n + 3.0;
    }
    return;
  }
  if (x >= nmax + 2) {
    // upward recurrence, stable for x above the order
    double j0 = std::sin(x) / x;
    out[0] = j0;
    if (nmax == 0) return;
    double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
    out[1] = j1;
    for (int n = 1; n < nmax; ++n) {
      double j2 = (2.0 * n + 1.0) / x * j1 - j0;
      out[n + 1] = j2;
      j0 = j1;
      j1 = j2;
    }
    return;
  }
  // Miller's downward recurrence, normalized against j_0 = sin(x)/x
  const int start = nmax + 12 + static_cast<int>(x);
  double jp = 0.0, jc = 1e-30;
  for (int n = start; n >= 1; --n) {
    double jm = (2.0 * n + 1.0) / x * jc - jp;
    jp = jc;
    jc = jm;
    if (n - 1 <= nmax) out[n - 1] = jc;
    if (std::abs(jc) > 1e280) {  // rescale to avoid overflow
      const double s = 1e-280;
      jc *= s;
      jp *= s;
      for (int m = n - 1; m <= nmax; ++m)
        if (m >= 0) out[m] *= s;
    }
  }
  const double scale = (std::sin(x) / x) / out[0];
  for (int n = 0; n <= nmax; ++n) out[n] *= scale;
}

namespace {

// integral of f over [a, b] with a GL16 value and |GL16 - GL8| estimate
struct PanelResult {
  Complex value;
  double err;
};

PanelResult panel_gl(const std::function<Complex(double)>& f, double a, double b) {
  const GLRule& g16 = gauss_legendre(16);
  const GLRule& g8 = gauss_legendre(8);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex v16 = 0.0, v8 = 0.0;
  for (std::size_t i = 0; i < g16.x.size(); ++i)
    v16 += g16.w[i] * f(c + h * g16.x[i]);
  for (std::size_t i = 0; i < g8.x.size(); ++i)
    v8 += g8.w[i] * f(c + h * g8.x[i]);
  v16 *= h;
  v8 *= h;
  return {v16, std::abs(v16 - v8)};
}

struct HeapEntry {
  double err;
  double a, b;
  Complex value;
  bool operator<(const HeapEntry& o) const { return err < o.err; }
};

Complex adaptive_gl(const std::function<Complex(double)>& f,
                    const std::vector<std::pair<double, double>>& seeds,
                    double tol, std::size_t panel_budget,
                    const char* who) {
  std::priority_queue<HeapEntry> heap;
  Complex total = 0.0;
  double total_err = 0.0;
  std::size_t used = seeds.size();
  if (used > panel_budget)
    throw ConvergenceError(std::string(who) + ": initial panel count exceeds budget");
  for (const auto& [a, b] : seeds) {
    auto r = panel_gl(f, a, b);
    heap.push({r.err, a, b, r.value});
    total += r.value;
    total_err += r.err;
  }
  while (total_err > tol) {
    // refinement cannot push the estimate below the roundoff floor
    if (!heap.empty() && heap.top().err < 1e-15 * (1.0 + std::abs(total))) break;
    if (heap.empty() || used + 2 > panel_budget)
      throw ConvergenceError(std::string(who) + ": panel budget exhausted at error " +
                             std::to_string(total_err));
    HeapEntry top = heap.top();
    heap.pop();
    total -= top.value;
    total_err -= top.err;
    const double mid = 0.5 * (top.a + top.b);
    for (auto [a, b] : {std::pair{top.a, mid}, std::pair{mid, top.b}}) {
      auto r = panel_gl(f, a, b);
      heap.push({r.err, a, b, r.value});
      total += r.value;
      total_err += r.err;
    }
    used += 2;
  }
  return total;
}

}  // namespace

Complex v_integral(int k, std::int64_t X, double theta, double tol,
                   std::size_t panel_budget) {
  if (k < 2 || X < 1) throw std::invalid_argument("v_integral: k >= 2, X >= 1");
  if (tol <= 0.0) throw std::invalid_argument("v_integral: tol must be positive");
  if (theta == 0.0) return {static_cast<double>(X), 0.0};

  const double Xd = static_cast<double>(X);
  const double U = std::pow(Xd, k);
  const double at = std::abs(theta);

  // non-oscillatory: integrand completes less than one cycle
  if (at * U <= 1.0) {
    auto fz = [&](double z) { return unit_phase(theta * std::pow(z, k)); };
    return adaptive_gl(fz, {{0.0, Xd}}, tol, panel_budget, "v_integral");
  }

  const double half_period = 0.5 / at;
  const double total_panels = U / half_period;
  if (total_panels > static_cast<double>(panel_budget))
    throw ConvergenceError("v_integral: |theta| X^k = " + std::to_string(at * U) +
                           " needs more panels than the budget allows");

  // head [0, z1] in the z variable: smooth, under half a cycle, and carries
  // the whole u^(1/k-1) endpoint weight
  const double z1 = std::pow(half_period, 1.0 / k);
  auto fz = [&](double z) { return unit_phase(theta * std::pow(z, k)); };
  Complex head = adaptive_gl(fz, {{0.0, std::min(z1, Xd)}}, 0.5 * tol,
                             panel_budget, "v_integral(head)");
  if (z1 >= Xd) return head;

  // tail in the u variable, one seed panel per half-period of e(theta u)
  const double inv_k = 1.0 / k;
  auto fu = [&](double u) {
    return inv_k * std::pow(u, inv_k - 1.0) * unit_phase(theta * u);
  };
  std::vector<std::pair<double, double>> seeds;
  double lo = half_period;
  while (lo < U) {
    double hi = std::min(lo + half_period, U);
    seeds.emplace_back(lo, hi);
    lo = hi;
  }
  return head + adaptive_gl(fu, seeds, 0.5 * tol, panel_budget, "v_integral(tail)");
}

FilonV::FilonV(int k, double upper_z, int degree)
    : k_(k), upper_z_(upper_z), degree_(degree) {
  if (k < 2 || !(upper_z > 0.0))
    throw std::invalid_argument("FilonV: k >= 2, upper_z > 0");
  upper_ = std::pow(upper_z, k);
  // graded panels [upper/2^(j+1), upper/2^j]; below tail_cut_ the phase is
  // flat enough for a two-term series in theta*u
  const int levels = 64;
  tail_cut_ = upper_ * std::ldexp(1.0, -levels);
  const GLRule& rule = gauss_legendre(std::max(2 * degree, 24));
  const double inv_k = 1.0 / k;
  panels_.reserve(levels);
  for (int lvl = 0; lvl < levels; ++lvl) {
    const double hi = upper_ * std::ldexp(1.0, -lvl);
    const double lo = 0.5 * hi;
    Panel p;
    p.center = 0.5 * (lo + hi);
    p.halfwidth = 0.5 * (hi - lo);
    p.coeff.assign(static_cast<std::size_t>(degree + 1), 0.0);
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double t = rule.x[i];
      const double amp = std::pow(p.center + p.halfwidth * t, inv_k - 1.0);
      // accumulate Legendre projections (2j+1)/2 * int A P_j
      double p0 = 1.0, p1 = t;
      p.coeff[0] += 0.5 * rule.w[i] * amp;
      if (degree >= 1) p.coeff[1] += 1.5 * rule.w[i] * amp * t;
      for (int j = 2; j <= degree; ++j) {
        double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p.coeff[static_cast<std::size_t>(j)] += (2.0 * j + 1.0) * 0.5 * rule.w[i] * amp * p2;
        p0 = p1;
        p1 = p2;
      }
    }
    panels_.push_back(std::move(p));
  }
}

Complex FilonV::operator()(double theta) const {
  if (theta == 0.0) return {upper_z_, 0.0};
  const double inv_k = 1.0 / k_;
  Complex sum = 0.0;
  std::vector<double> jn(static_cast<std::size_t>(degree_ + 1));
  for (const auto& p : panels_) {
    const double omega = kTwoPi * theta * p.halfwidth;
    spherical_bessel(degree_, std::abs(omega), jn.data());
    // mu_j = int_{-1}^{1} P_j(t) e^{i om t} dt = 2 i^j j_j(om); conjugate for om < 0
    Complex inner = 0.0;
    Complex ipow{1.0, 0.0};
    const Complex iunit = omega >= 0.0 ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
    for (int j = 0; j <= degree_; ++j) {
      inner += p.coeff[static_cast<std::size_t>(j)] * 2.0 * jn[static_cast<std::size_t>(j)] * ipow;
      ipow *= iunit;
    }
    sum += p.halfwidth * unit_phase(theta * p.center) * inner;
  }
  // series tail on [0, tail_cut]: amplitude integral with e(theta u) ~ 1 + 2 pi i theta u
  const double t1 = k_ * std::pow(tail_cut_, inv_k);
  const double t2 = std::pow(tail_cut_, inv_k + 1.0) / (inv_k + 1.0);
  sum += Complex{t1, kTwoPi * theta * t2};
  return sum * inv_k;
}

Complex integrate_oscillatory(const std::function<Complex(double)>& f,
                              double lo, double hi, double osc_scale,
                              double tol, std::size_t panel_budget) {
  if (!(hi > lo)) return 0.0;
  const double len = hi - lo;
  std::size_t n = static_cast<std::size_t>(
      std::min(std::ceil(std::max(1.0, 2.0 * osc_scale * len)), 1e7));
  if (n > panel_budget)
    throw ConvergenceError("integrate_oscillatory: oscillation count exceeds budget");
  std::vector<std::pair<double, double>> seeds;
  seeds.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    seeds.emplace_back(lo + len * static_cast<double>(i) / static_cast<double>(n),
                       lo + len * static_cast<double>(i + 1) / static_cast<double>(n));
  return adaptive_gl(f, seeds, tol, panel_budget, "integrate_oscillatory");
}

}  // namespace waring
