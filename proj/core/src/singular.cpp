#include "waring/singular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "waring/expsums.hpp"
#include "waring/ntt.hpp"
#include "waring/parallel.hpp"

namespace waring {

namespace {

// memo of gauss_sum_all vectors; values are deterministic so cache state
// never affects results
std::shared_ptr<const std::vector<Complex>> gauss_table(int k, std::int64_t q) {
  constexpr std::int64_t kCacheMax = 4096;
  static std::map<std::pair<int, std::int64_t>, std::shared_ptr<const std::vector<Complex>>> cache;
  static std::mutex mutex;
  if (q > kCacheMax)
    return std::make_shared<const std::vector<Complex>>(gauss_sum_all(k, q));
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({k, q});
    if (it != cache.end()) return it->second;
  }
  auto fresh = std::make_shared<const std::vector<Complex>>(gauss_sum_all(k, q));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::pair{k, q}, std::move(fresh)).first->second;
}

Complex complex_ipow(Complex base, int e) {
  Complex r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// one term of A_N(q): prod_i G(c_i a / q) * e(-N a / q)
Complex arc_sum_term(const std::vector<Complex>& table, int d, std::int64_t N,
                     std::int64_t q, std::int64_t a, const CoeffVector& coeffs) {
  const auto qu = static_cast<std::uint64_t>(q);
  Complex g;
  if (!coeffs) {
    g = complex_ipow(table[static_cast<std::size_t>(a % q)], d);
  } else {
    g = {1.0, 0.0};
    for (const auto c : *coeffs) {
      const auto idx = static_cast<std::size_t>(
          static_cast<std::uint64_t>(static_cast<unsigned __int128>(
                                         static_cast<std::uint64_t>(c % q)) *
                                     static_cast<std::uint64_t>(a) % qu));
      g *= table[idx];
    }
  }
  const auto na = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(static_cast<std::uint64_t>(((N % q) + q) % q)) *
      static_cast<std::uint64_t>(a) % qu);
  return g * std::conj(unit_phase(static_cast<double>(na) / static_cast<double>(q)));
}

}  // namespace

ArcSum arc_sum(int k, int d, std::int64_t N, std::int64_t q, const CoeffVector& coeffs) {
  if (q < 1) throw std::invalid_argument("arc_sum: q >= 1");
  if (N < 1) throw std::invalid_argument("arc_sum: N >= 1");
  ArcSum out;
  out.q = q;
  if (q == 1) {
    out.value = 1.0;
    return out;
  }
  const auto table = gauss_table(k, q);
  // terms for a and q-a are conjugate, so the sum of real parts IS the
  // symmetrized value; the leftover imaginary part is reported as measured
  double sum_re = 0.0, sum_im = 0.0;
  for (std::int64_t a = 1; a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    const Complex term = arc_sum_term(*table, d, N, q, a, coeffs);
    sum_re += term.real();
    sum_im += term.imag();
  }
  out.value = sum_re;
  out.imagResidual = std::abs(sum_im);
  return out;
}

TruncatedSeries truncated_series(int k, int d, std::int64_t N, std::int64_t Q,
                                 const CoeffVector& coeffs) {
  if (Q < 1) throw std::invalid_argument("truncated_series: Q >= 1");
  TruncatedSeries out;
  out.Q = Q;
  std::vector<double> terms(static_cast<std::size_t>(Q));
  parallel_for(static_cast<std::size_t>(Q), [&](std::size_t i) {
    terms[i] = arc_sum(k, d, N, static_cast<std::int64_t>(i) + 1, coeffs).value;
  });
  out.partials.resize(static_cast<std::size_t>(Q));
  double run = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    run += terms[i];
    out.partials[i] = run;
  }
  out.value = run;

  // measured constant for the q^(-11/10) decay shape, fitted on the top half
  double c_hat = 0.0;
  for (std::int64_t q = std::max<std::int64_t>(2, Q / 2); q <= Q; ++q)
    c_hat = std::max(c_hat, std::abs(terms[static_cast<std::size_t>(q - 1)]) *
                                std::pow(static_cast<double>(q), 1.1));
  out.tailEstimate = c_hat * 10.0 * std::pow(static_cast<double>(Q), -0.1);
  return out;
}

std::vector<std::int64_t> primes_up_to(std::int64_t P) {
  std::vector<std::int64_t> primes;
  if (P < 2) return primes;
  std::vector<bool> sieve(static_cast<std::size_t>(P) + 1, true);
  for (std::int64_t i = 2; i <= P; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= P; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return primes;
}

namespace {

// #{x mod q : sum c_i x_i^k = N (mod q)} / q^(d-1), by cyclic convolution of
// per-coordinate densities. All terms nonnegative, so double stays accurate.
double congruence_density(int k, int d, std::int64_t N, std::int64_t q,
                          const CoeffVector& coeffs) {
  const auto qs = static_cast<std::size_t>(q);
  auto weight_for = [&](std::int64_t c) {
    std::vector<double> w(qs, 0.0);
    for (std::int64_t x = 0; x < q; ++x) {
      auto t = ntt::powmod(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(k),
                           static_cast<std::uint64_t>(q));
      t = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(t) * static_cast<std::uint64_t>(c % q) %
          static_cast<std::uint64_t>(q));
      w[static_cast<std::size_t>(t)] += 1.0;
    }
    for (auto& v : w) v /= static_cast<double>(q);
    return w;
  };

  std::vector<double> dens = weight_for(coeffs ? (*coeffs)[0] : 1);
  for (int i = 1; i < d; ++i) {
    const auto w = weight_for(coeffs ? (*coeffs)[static_cast<std::size_t>(i)] : 1);
    // sparse cyclic convolution over the nonzero residue classes of w
    std::vector<std::pair<std::size_t, double>> support;
    for (std::size_t t = 0; t < qs; ++t)
      if (w[t] != 0.0) support.emplace_back(t, w[t]);
    std::vector<double> next(qs, 0.0);
    parallel_for_blocks(qs, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t n = lo; n < hi; ++n) {
        double acc = 0.0;
        for (const auto& [t, wt] : support) {
          const std::size_t src = n >= t ? n - t : n + qs - t;
          acc += wt * dens[src];
        }
        next[n] = acc;
      }
    });
    dens = std::move(next);
  }
  return dens[static_cast<std::size_t>(((N % q) + q) % q)] * static_cast<double>(q);
}

}  // namespace

namespace {

// A_N(p^j) through the prime-power reduction. For tame p (p coprime to k
// and to every coefficient) and j >= max(2k-2, k+1) the Gauss sums satisfy
// G(b/p^j) = p^{-1} G(b/p^{j-k}); grouping numerators mod p^{j-k} then
// makes A_N(p^j) vanish unless p^k | N, in which case it reduces to the
// arc sum of N/p^k at level j-k. Below the reduction threshold, or at wild
// primes, the sum is evaluated directly.
double arc_sum_prime_power(int k, int d, std::int64_t N, std::int64_t p, int j,
                           const CoeffVector& coeffs, bool tame) {
  const int reduce_from = std::max(2 * k - 2, k + 1);
  if (tame && j >= reduce_from) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    if (N % pk != 0) return 0.0;
    return std::pow(static_cast<double>(p), k - d) *
           arc_sum_prime_power(k, d, N / pk, p, j - k, coeffs, tame);
  }
  std::int64_t q = 1;
  for (int i = 0; i < j; ++i) q *= p;
  return arc_sum(k, d, N, q, coeffs).value;
}

}  // namespace

LocalDensity local_density(int k, int d, std::int64_t N, std::int64_t p,
                           const LocalDensityOptions& options,
                           const CoeffVector& coeffs) {
  if (p < 2) throw std::invalid_argument("local_density: p must be a prime >= 2");
  if (d < 2) throw std::invalid_argument("local_density: d >= 2");

  auto vp = [p](std::int64_t n) {
    int v = 0;
    while (n % p == 0 && n > 0) {
      n /= p;
      ++v;
    }
    return v;
  };

  const int t_wild = vp(k);
  int vc = 0;
  if (coeffs)
    for (const auto c : *coeffs) vc = std::max(vc, vp(c));
  const bool tame = t_wild == 0 && vc == 0;

  // structural cutoff: beyond it every A_N(p^j) vanishes identically (the
  // reduction chain has divided out all powers of p from N)
  const int reduce_from = std::max(2 * k - 2, k + 1);
  const int h_exact = tame ? reduce_from + vp(N) + k
                           : 2 * (k + t_wild) + 1 + vp(N) + vc;

  int h_budget = 2 * k + 4;
  for (std::int64_t t = N; t >= p; t /= p) ++h_budget;
  h_budget = std::max(h_budget, h_exact);

  // measured-envelope certificate for the tail that remains below h_exact:
  // |A(p^j)| <= phi(p^j) (kappa p^{-j/k})^d decays per level by this factor
  const double rho =
      std::pow(static_cast<double>(p), 1.0 - static_cast<double>(d) / k);

  LocalDensity out;
  out.p = p;
  double S = 1.0;  // h = 0 term
  double prev_abs = 0.0;
  std::int64_t q = 1;
  const std::int64_t q_sat = std::int64_t{1} << 60;
  for (int h = 1; h <= h_budget; ++h) {
    q = q <= q_sat / p ? q * p : q_sat;  // saturating; only small q is used
    const bool direct = !(tame && h >= reduce_from);
    if (direct) {
      // the direct path builds a Gauss table: ~ q * support ~ q^2/(2k) work
      if (q > options.modulus_cap) break;
      if (q > 2 && static_cast<double>(q) * static_cast<double>(q) / (2.0 * k) >
                       static_cast<double>(options.work_budget))
        break;
    }
    const double a_h = arc_sum_prime_power(k, d, N, p, h, coeffs, tame);
    S += a_h;
    out.characterForm = S;
    out.hUsed = h;

    if (q <= options.count_form_cap) {
      out.countForm = congruence_density(k, d, N, q, coeffs);
      out.countFormLevel = h;
      const double scale = std::max(1.0, std::abs(S));
      if (std::abs(out.countForm - S) > 1e-7 * scale)
        throw std::runtime_error(
            "local_density: character and congruence forms disagree at p=" +
            std::to_string(p) + " h=" + std::to_string(h) + " (" +
            std::to_string(S) + " vs " + std::to_string(out.countForm) + ")");
    }

    if (h >= h_exact) {
      out.stabilized = true;  // every later term vanishes identically
      break;
    }
    if (h >= 2 && rho < 1.0) {
      // an exact zero at one level can be a phase accident, so the anchor
      // falls back to the previous level damped by rho; anchors at roundoff
      // scale are never trusted
      const double anchor = std::max(std::abs(a_h), rho * prev_abs);
      if (anchor > 1e-13 && 8.0 * anchor * rho / (1.0 - rho) < options.tol) {
        out.stabilized = true;
        break;
      }
      // fallback certificate from |A(p^j)| <= phi(p^j) (4k p^{-j/k})^d, in
      // logs; only fires when the whole remaining tail is far below tol
      const double log_tail =
          d * std::log(4.0 * k) +
          (h + 1) * (1.0 - static_cast<double>(d) / k) *
              std::log(static_cast<double>(p)) -
          std::log1p(-rho);
      if (log_tail < std::log(options.tol) - 3.0) {
        out.stabilized = true;
        break;
      }
    }
    prev_abs = std::abs(a_h);
  }
  out.value = out.characterForm;
  if (!out.stabilized)
    throw ConvergenceError(
        "local_density: stabilization failed at p=" + std::to_string(p) +
        " after h=" + std::to_string(out.hUsed) +
        " (last S=" + std::to_string(out.characterForm) +
        ", tol=" + std::to_string(options.tol) +
        "); loosen tol or raise the budget");
  return out;
}

SingularSeriesResult euler_product(int k, int d, std::int64_t N, std::int64_t P,
                                   double tol, std::int64_t Q,
                                   const CoeffVector& coeffs) {
  if (P < 2) throw std::invalid_argument("euler_product: P >= 2");
  SingularSeriesResult out;
  out.k = k;
  out.d = d;
  out.N = N;
  out.coeffs = coeffs;
  out.P = P;
  out.Q = Q;
  out.smallDimensionWarning = d < (1 << k) + 1;

  const auto primes = primes_up_to(P);
  LocalDensityOptions ldo;
  ldo.tol = tol;
  out.factors.resize(primes.size());
  parallel_for(primes.size(), [&](std::size_t i) {
    out.factors[i] = local_density(k, d, N, primes[i], ldo, coeffs);
  });
  double prod = 1.0;
  for (const auto& f : out.factors) prod *= f.value;  // grid order, deterministic
  out.eulerProduct = prod;

  const auto ts = truncated_series(k, d, N, Q, coeffs);
  out.truncatedSum = ts.value;
  out.tailEstimate = ts.tailEstimate;
  return out;
}

MultiplicativityReport multiplicativity_check(
    int k, int d, std::int64_t N,
    std::span<const std::pair<std::int64_t, std::int64_t>> pairs,
    const CoeffVector& coeffs) {
  MultiplicativityReport report;
  report.rows.reserve(pairs.size());
  for (const auto& [q1, q2] : pairs) {
    if (std::gcd(q1, q2) != 1)
      throw std::invalid_argument("multiplicativity_check: gcd(q1,q2) must be 1");
    MultiplicativityReport::Row row;
    row.q1 = q1;
    row.q2 = q2;
    row.lhs = arc_sum(k, d, N, q1 * q2, coeffs).value;
    row.rhs = arc_sum(k, d, N, q1, coeffs).value * arc_sum(k, d, N, q2, coeffs).value;
    row.absDiff = std::abs(row.lhs - row.rhs);
    report.maxAbsDiff = std::max(report.maxAbsDiff, row.absDiff);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace waring
