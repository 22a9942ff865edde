#include "waring/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "waring/ntt.hpp"

namespace waring {

namespace {
constexpr long double kPiL = 3.14159265358979323846264338327950288L;
constexpr long double kTwoPiL = 6.28318530717958647692528676655900577L;

long double to_long_double(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<long double>(v.get_si());
  const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  const long shift = static_cast<long>(bits) - 62;
  BigInt q = v >> static_cast<unsigned long>(shift);
  return std::ldexp(static_cast<long double>(q.get_si()), static_cast<int>(shift));
}
}  // namespace

Fraction::Fraction(std::int64_t a_, std::int64_t q_) : a(a_), q(q_) {
  if (q < 1 || a < 1 || a > q)
    throw std::invalid_argument("Fraction: need 1 <= a <= q");
  if (std::gcd(a, q) != 1)
    throw std::invalid_argument("Fraction: " + std::to_string(a) + "/" +
                                std::to_string(q) + " is not reduced");
}

double circle_distance(double xi, const Fraction& f) {
  double d = std::fabs(xi - f.value());
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

std::int64_t major_arc_qmax(std::int64_t X, double alpha) {
  // q <= X^alpha decided in log space; the 1e-12 slack keeps exact powers
  // (e.g. 16^(1/4) = 2) on the inclusive side
  std::int64_t q = 1;
  while (std::log(static_cast<double>(q + 1)) <=
         alpha * std::log(static_cast<double>(X)) + 1e-12)
    ++q;
  return q;
}

ArcDecomposition build_arcs(int k, std::int64_t X, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0 / 3.0))
    throw std::invalid_argument("build_arcs: alpha must lie in (0, 1/3)");
  if (X < 2) throw std::invalid_argument("build_arcs: X must be >= 2");

  ArcDecomposition dec;
  dec.k = k;
  dec.X = X;
  dec.alpha = alpha;
  dec.halfWidth = std::pow(static_cast<double>(X), alpha - k);
  dec.qMax = major_arc_qmax(X, alpha);

  const double w = dec.halfWidth;
  for (std::int64_t q = 1; q <= dec.qMax; ++q) {
    for (std::int64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      Arc arc;
      arc.center = Fraction(a, q);
      if (a == q) {
        // the arc at 1/1 wraps around 0 ~ 1
        arc.pieces.push_back({0.0, w});
        arc.pieces.push_back({1.0 - w, 1.0});
      } else {
        arc.pieces.push_back({std::max(0.0, arc.center.value() - w),
                              std::min(1.0, arc.center.value() + w)});
      }
      dec.arcs.push_back(std::move(arc));
    }
  }

  auto pieces = dec.majorIntervals();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i - 1].hi > pieces[i].lo + 1e-15)
      throw std::runtime_error(
          "build_arcs: major arcs overlap; the construction precondition "
          "q <= X^alpha with alpha < 1/3 is violated numerically");
  }

  dec.totalMajorMeasure = 0.0;
  for (const auto& p : pieces) dec.totalMajorMeasure += p.length();
  if (dec.totalMajorMeasure > 1.0 + 1e-12)
    throw std::runtime_error("build_arcs: total major measure exceeds 1");
  return dec;
}

std::vector<Interval> ArcDecomposition::majorIntervals() const {
  std::vector<Interval> out;
  for (const auto& arc : arcs)
    for (const auto& p : arc.pieces) out.push_back(p);
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

std::vector<Interval> ArcDecomposition::minorIntervals() const {
  std::vector<Interval> out;
  double cursor = 0.0;
  for (const auto& p : majorIntervals()) {
    if (p.lo > cursor) out.push_back({cursor, p.lo});
    cursor = std::max(cursor, p.hi);
  }
  if (cursor < 1.0) out.push_back({cursor, 1.0});
  return out;
}

DirichletResult dirichlet_approx(double xi, std::int64_t Q) {
  if (Q < 1) throw std::invalid_argument("dirichlet_approx: Q >= 1");
  if (!(xi >= 0.0 && xi <= 1.0))
    throw std::invalid_argument("dirichlet_approx: xi must lie in [0, 1]");

  auto canonical = [](std::int64_t p, std::int64_t q) {
    if (p == 0) return Fraction(1, 1);  // 0 ~ 1 on the circle
    return Fraction(p, q);
  };

  // convergents of xi, ascending q
  std::vector<std::pair<std::int64_t, std::int64_t>> convergents;
  {
    std::int64_t p0 = 1, q0 = 0;  // p(-1)/q(-1)
    std::int64_t p1 = 0, q1 = 1;  // p(0)/q(0) for xi in [0,1)
    double x = xi;
    std::int64_t a0 = static_cast<std::int64_t>(std::floor(x));
    p1 = a0;
    convergents.emplace_back(p1, q1);
    x -= static_cast<double>(a0);
    while (x > 1e-14 && q1 <= Q) {
      x = 1.0 / x;
      std::int64_t ai = static_cast<std::int64_t>(std::floor(x));
      if (ai > (std::int64_t{1} << 50)) break;  // xi is (nearly) rational
      x -= static_cast<double>(ai);
      std::int64_t p2 = ai * p1 + p0;
      std::int64_t q2 = ai * q1 + q0;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      if (q1 > Q) break;
      convergents.emplace_back(p1, q1);
    }
  }

  DirichletResult best;
  double best_dist = 2.0;
  for (const auto& [p, q] : convergents) {
    Fraction f = canonical(p, q);
    double dist = circle_distance(xi, f);
    if (dist * static_cast<double>(q) * static_cast<double>(Q) <= 1.0 + 1e-12) {
      return {f, true};  // convergents are ascending in q: first hit is minimal
    }
    if (dist < best_dist) {
      best_dist = dist;
      best = {f, false};
    }
  }
  return best;  // cannot happen for exact reals; degenerate float fallback
}

bool is_major(double xi, int k, std::int64_t X, double alpha) {
  const std::int64_t qmax = major_arc_qmax(X, alpha);
  const double w = std::pow(static_cast<double>(X), alpha - k);
  // a major center within w must be a convergent: w < 1/(2 q^2) for q <= X^alpha
  const double target = xi - std::floor(xi);
  std::int64_t p0 = 1, q0 = 0, p1 = 0, q1 = 1;
  double rem = target;  // continued-fraction remainder, distinct from target
  if (circle_distance(target, Fraction(1, 1)) <= w) return true;
  while (q1 <= qmax) {
    if (q1 >= 1 && p1 >= 0) {
      std::int64_t pr = p1 % q1;
      Fraction f = pr == 0 ? Fraction(1, 1) : Fraction(pr, q1);
      if (circle_distance(target, f) <= w) return true;
    }
    if (rem <= 1e-14) break;
    double inv = 1.0 / rem;
    std::int64_t ai = static_cast<std::int64_t>(std::floor(inv));
    if (ai > (std::int64_t{1} << 50)) break;
    rem = inv - static_cast<double>(ai);
    std::int64_t p2 = ai * p1 + p0;
    std::int64_t q2 = ai * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return false;
}

const BigInt FourierLadder::kZero = 0;

FourierLadder FourierLadder::build(
    int k, int d, std::int64_t X,
    const std::optional<std::vector<std::int64_t>>& coeffs,
    const CountingOptions& options) {
  if (k < 2 || d < 1 || X < 1)
    throw std::invalid_argument("FourierLadder: k >= 2, d >= 1, X >= 1");
  if (coeffs && static_cast<int>(coeffs->size()) != d)
    throw std::invalid_argument("FourierLadder: coeffs must have length d");

  BigInt cap;
  mpz_ui_pow_ui(cap.get_mpz_t(), static_cast<unsigned long>(X),
                static_cast<unsigned long>(k));
  cap *= d;
  if (cap > static_cast<long>(options.max_table_cells))
    throw CapacityError("FourierLadder: d*X^k = " + cap.get_str() +
                        " modes exceed budget");
  const auto total_modes = static_cast<std::int64_t>(cap.get_si());
  const std::int64_t per_dim = total_modes / d;  // X^k

  FourierLadder ladder;
  ladder.k_ = k;
  ladder.d_ = d;
  ladder.X_ = X;
  ladder.c_ = coeffs;

  auto coeff_of = [&](int i) { return coeffs ? (*coeffs)[static_cast<std::size_t>(i)] : 1; };
  ladder.limits_.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    ladder.limits_[static_cast<std::size_t>(i)] =
        integer_kth_root(per_dim / coeff_of(i), k);

  std::vector<BigInt> row(static_cast<std::size_t>(per_dim) + 1);
  auto support0 = detail::power_support(k, coeff_of(0), per_dim, X);
  for (const auto& [pos, w] : support0) row[static_cast<std::size_t>(pos)] = w;
  BigInt bound = std::max<std::size_t>(support0.size(), 1);
  for (int j = 1; j < d; ++j) {
    auto support = detail::power_support(k, coeff_of(j), per_dim, X);
    bound *= std::max<std::size_t>(support.size(), 1);
    const std::size_t out_len = static_cast<std::size_t>(per_dim) * (j + 1) + 1;
    row = detail::convolve_with_support(row, support, out_len, bound, options);
  }
  ladder.coeff_ = std::move(row);
  return ladder;
}

FourierLadder FourierLadder::build_for_target(
    int k, int d, std::int64_t N,
    const std::optional<std::vector<std::int64_t>>& coeffs,
    const CountingOptions& options) {
  const std::int64_t X = integer_kth_root(N, k);
  if (!coeffs) return build(k, d, X, coeffs, options);
  if (static_cast<int>(coeffs->size()) != d)
    throw std::invalid_argument("FourierLadder: coeffs must have length d");

  // mode count: sum_i c_i X_i^k with X_i = floor((N/c_i)^(1/k))
  std::vector<std::int64_t> tops(static_cast<std::size_t>(d));
  std::int64_t total_modes = 0;
  for (int i = 0; i < d; ++i) {
    const std::int64_t c = (*coeffs)[static_cast<std::size_t>(i)];
    const std::int64_t Xi = integer_kth_root(N / c, k);
    BigInt top;
    mpz_ui_pow_ui(top.get_mpz_t(), static_cast<unsigned long>(std::max<std::int64_t>(Xi, 0)),
                  static_cast<unsigned long>(k));
    top *= c;
    tops[static_cast<std::size_t>(i)] = Xi > 0 ? top.get_si() : 0;
    total_modes += tops[static_cast<std::size_t>(i)];
  }
  if (total_modes + 1 > static_cast<std::int64_t>(options.max_table_cells))
    throw CapacityError("FourierLadder: mode count exceeds budget");

  FourierLadder ladder;
  ladder.k_ = k;
  ladder.d_ = d;
  ladder.X_ = X;
  ladder.c_ = coeffs;
  ladder.limits_.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    ladder.limits_[static_cast<std::size_t>(i)] =
        integer_kth_root(N / (*coeffs)[static_cast<std::size_t>(i)], k);

  std::vector<BigInt> row(static_cast<std::size_t>(tops[0]) + 1);
  auto support0 = detail::power_support(k, (*coeffs)[0], N, N);
  for (const auto& [pos, w] : support0) row[static_cast<std::size_t>(pos)] = w;
  BigInt bound = std::max<std::size_t>(support0.size(), 1);
  std::int64_t len = tops[0];
  for (int j = 1; j < d; ++j) {
    auto support = detail::power_support(k, (*coeffs)[static_cast<std::size_t>(j)], N, N);
    bound *= std::max<std::size_t>(support.size(), 1);
    len += tops[static_cast<std::size_t>(j)];
    row = detail::convolve_with_support(row, support,
                                        static_cast<std::size_t>(len) + 1, bound,
                                        options);
  }
  ladder.coeff_ = std::move(row);
  return ladder;
}

const BigInt& FourierLadder::coeff(std::int64_t m) const {
  if (m < 0 || m >= static_cast<std::int64_t>(coeff_.size())) return kZero;
  return coeff_[static_cast<std::size_t>(m)];
}

BigInt circle_integral(const FourierLadder& ladder, std::int64_t N) {
  return ladder.coeff(N);
}

double circle_integral_dft_check(const FourierLadder& ladder, std::int64_t N,
                                 std::int64_t M) {
  if (M <= 0) M = ladder.modes() + 1;
  if (M <= ladder.modes())
    throw std::invalid_argument("circle_integral_dft_check: M must exceed d*X^k");

  // twiddles e(t/M) once; phases stay exact integers mod M
  std::vector<Complex> w(static_cast<std::size_t>(M));
  for (std::int64_t t = 0; t < M; ++t)
    w[static_cast<std::size_t>(t)] =
        unit_phase(static_cast<double>(t) / static_cast<double>(M));

  const int d = ladder.d();
  const int k = ladder.k();
  const auto& c = ladder.coeffs_vector();
  auto coeff_of = [&](int i) { return c ? (*c)[static_cast<std::size_t>(i)] : 1; };
  const auto& limits = ladder.limits();

  long double acc_re = 0.0L, acc_im = 0.0L;
  for (std::int64_t j = 0; j < M; ++j) {
    Complex prod{1.0, 0.0};
    for (int i = 0; i < d; ++i) {
      Complex f{0.0, 0.0};
      const std::int64_t ci = coeff_of(i);
      for (std::int64_t n = 1; n <= limits[static_cast<std::size_t>(i)]; ++n) {
        const auto nk = static_cast<std::uint64_t>(
            ntt::powmod(static_cast<std::uint64_t>(n % M), static_cast<std::uint64_t>(k),
                        static_cast<std::uint64_t>(M)));
        const auto idx = static_cast<std::size_t>(
            static_cast<std::uint64_t>((static_cast<unsigned __int128>(nk) *
                                        static_cast<std::uint64_t>(ci % M) % M) *
                                       static_cast<unsigned __int128>(
                                           static_cast<std::uint64_t>(j)) %
                                       static_cast<std::uint64_t>(M)));
        f += w[idx];
      }
      prod *= f;
    }
    const auto nj = static_cast<std::size_t>(
        static_cast<std::uint64_t>(static_cast<unsigned __int128>(
                                       static_cast<std::uint64_t>(N % M)) *
                                   static_cast<std::uint64_t>(j) %
                                   static_cast<std::uint64_t>(M)));
    prod *= std::conj(w[nj]);
    acc_re += prod.real();
    acc_im += prod.imag();
  }
  (void)acc_im;  // vanishes up to roundoff by conjugate symmetry of the samples
  return static_cast<double>(acc_re / static_cast<long double>(M));
}

Complex arc_integral(const FourierLadder& ladder, std::int64_t N,
                     const Interval& interval) {
  const double lo = interval.lo, hi = interval.hi;
  if (!(lo >= -1e-12 && hi <= 1.0 + 1e-12 && hi >= lo))
    throw std::invalid_argument("arc_integral: interval must lie in [0, 1]");

  const auto& coeffs = ladder.all_coeffs();
  const auto size = static_cast<std::int64_t>(coeffs.size());
  const long double llo = lo, lhi = hi, mid = 0.5L * (llo + lhi);
  const long double len = lhi - llo;

  // int_lo^hi e(t xi) dxi = len * sinc(pi t len) * e(t mid);  t = m - N
  long double sum_re = 0.0L, sum_im = 0.0L, c_re = 0.0L, c_im = 0.0L;
  auto add = [&](long double re, long double im) {
    // Kahan, componentwise
    long double y = re - c_re, t = sum_re + y;
    c_re = (t - sum_re) - y;
    sum_re = t;
    y = im - c_im;
    t = sum_im + y;
    c_im = (t - sum_im) - y;
    sum_im = t;
  };

  auto mode_term = [&](std::int64_t m) {
    const BigInt& c = coeffs[static_cast<std::size_t>(m)];
    if (c == 0) return;
    const long double cm = to_long_double(c);
    const auto t = static_cast<long double>(m - N);
    if (m == N) {
      add(cm * len, 0.0L);
      return;
    }
    const long double arg = t * len;  // sinc factor argument / pi
    const long double sinc = std::sin(kPiL * arg) / (kPiL * t);
    long double ph = t * mid;
    ph -= std::floor(ph);
    add(cm * sinc * std::cos(kTwoPiL * ph), cm * sinc * std::sin(kTwoPiL * ph));
  };

  // outward from m = N: largest terms first, per the 1/|m-N| decay
  if (N >= 0 && N < size) mode_term(N);
  for (std::int64_t off = 1;; ++off) {
    const std::int64_t a = N - off, b = N + off;
    bool any = false;
    if (a >= 0 && a < size) {
      mode_term(a);
      any = true;
    }
    if (b >= 0 && b < size) {
      mode_term(b);
      any = true;
    }
    if (!any) break;
  }
  return {static_cast<double>(sum_re), static_cast<double>(sum_im)};
}

Complex arc_integral(const FourierLadder& ladder, std::int64_t N,
                     std::span<const Interval> intervals) {
  Complex total = 0.0;
  for (const auto& iv : intervals) total += arc_integral(ladder, N, iv);
  return total;
}

}  // namespace waring
