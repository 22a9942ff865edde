#include "waring/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "waring/arcs.hpp"
#include "waring/ntt.hpp"
#include "waring/oscillatory.hpp"
#include "waring/parallel.hpp"

namespace waring {

namespace {
constexpr long double kTwoPiL = 6.28318530717958647692528676655900577L;

std::uint64_t mulmod_u(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// twiddle table w[t] = e(t/q)
std::vector<Complex> phase_table(std::int64_t q) {
  std::vector<Complex> w(static_cast<std::size_t>(q));
  for (std::int64_t t = 0; t < q; ++t)
    w[static_cast<std::size_t>(t)] =
        unit_phase(static_cast<double>(t) / static_cast<double>(q));
  return w;
}

std::vector<std::uint32_t> residue_histogram(int k, std::int64_t q) {
  std::vector<std::uint32_t> rho(static_cast<std::size_t>(q), 0);
  for (std::int64_t r = 1; r <= q; ++r) {
    const auto s = ntt::powmod(static_cast<std::uint64_t>(r % q),
                               static_cast<std::uint64_t>(k),
                               static_cast<std::uint64_t>(q));
    ++rho[static_cast<std::size_t>(s)];
  }
  return rho;
}

}  // namespace

Complex weyl_sum(int k, std::int64_t X, double xi) {
  if (X < 1) throw std::invalid_argument("weyl_sum: X >= 1");
  const long double x = xi - std::floor(xi);
  long double sr = 0.0L, si = 0.0L, cr = 0.0L, ci = 0.0L;
  for (std::int64_t n = 1; n <= X; ++n) {
    long double nk = 1.0L;
    for (int i = 0; i < k; ++i) nk *= static_cast<long double>(n);
    long double ph = x * nk;
    ph -= std::floor(ph);
    const long double tr = std::cos(kTwoPiL * ph);
    const long double ti = std::sin(kTwoPiL * ph);
    long double y = tr - cr, t = sr + y;
    cr = (t - sr) - y;
    sr = t;
    y = ti - ci;
    t = si + y;
    ci = (t - si) - y;
    si = t;
  }
  return {static_cast<double>(sr), static_cast<double>(si)};
}

Complex weyl_sum_rational(int k, std::int64_t X, std::int64_t j, std::int64_t M) {
  if (X < 1 || M < 1) throw std::invalid_argument("weyl_sum_rational: X, M >= 1");
  const auto w = phase_table(M);
  const auto ju = static_cast<std::uint64_t>(((j % M) + M) % M);
  Complex sum{0.0, 0.0};
  for (std::int64_t n = 1; n <= X; ++n) {
    const auto nk = ntt::powmod(static_cast<std::uint64_t>(n % M),
                                static_cast<std::uint64_t>(k),
                                static_cast<std::uint64_t>(M));
    sum += w[static_cast<std::size_t>(mulmod_u(ju, nk, static_cast<std::uint64_t>(M)))];
  }
  return sum;
}

Complex gauss_sum(int k, std::int64_t a, std::int64_t q) {
  if (q < 1 || a < 1 || a > q) throw std::invalid_argument("gauss_sum: need 1 <= a <= q");
  if (std::gcd(a, q) != 1)
    throw std::invalid_argument("gauss_sum: gcd(a, q) must be 1");
  if (q == 1) return {1.0, 0.0};
  const auto rho = residue_histogram(k, q);
  const auto w = phase_table(q);
  const auto au = static_cast<std::uint64_t>(a % q);
  Complex sum{0.0, 0.0};
  for (std::int64_t s = 0; s < q; ++s) {
    if (rho[static_cast<std::size_t>(s)] == 0) continue;
    sum += static_cast<double>(rho[static_cast<std::size_t>(s)]) *
           w[static_cast<std::size_t>(mulmod_u(au, static_cast<std::uint64_t>(s),
                                               static_cast<std::uint64_t>(q)))];
  }
  return sum / static_cast<double>(q);
}

Complex gauss_sum_direct(int k, std::int64_t a, std::int64_t q) {
  if (q < 1 || a < 1 || a > q) throw std::invalid_argument("gauss_sum_direct: need 1 <= a <= q");
  if (std::gcd(a, q) != 1)
    throw std::invalid_argument("gauss_sum_direct: gcd(a, q) must be 1");
  const auto w = phase_table(q);
  const auto au = static_cast<std::uint64_t>(a % q);
  Complex sum{0.0, 0.0};
  for (std::int64_t r = 1; r <= q; ++r) {
    const auto rk = ntt::powmod(static_cast<std::uint64_t>(r % q),
                                static_cast<std::uint64_t>(k),
                                static_cast<std::uint64_t>(q));
    sum += w[static_cast<std::size_t>(mulmod_u(au, rk, static_cast<std::uint64_t>(q)))];
  }
  return sum / static_cast<double>(q);
}

std::vector<Complex> gauss_sum_all(int k, std::int64_t q) {
  const auto rho = residue_histogram(k, q);
  const auto w = phase_table(q);
  std::vector<std::pair<std::size_t, double>> support;
  for (std::int64_t s = 0; s < q; ++s)
    if (rho[static_cast<std::size_t>(s)] != 0)
      support.emplace_back(static_cast<std::size_t>(s),
                           static_cast<double>(rho[static_cast<std::size_t>(s)]));
  std::vector<Complex> out(static_cast<std::size_t>(q));
  parallel_for_blocks(static_cast<std::size_t>(q), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t b = lo; b < hi; ++b) {
      Complex sum{0.0, 0.0};
      for (const auto& [s, cnt] : support)
        sum += cnt * w[(b * s) % static_cast<std::size_t>(q)];
      out[b] = sum / static_cast<double>(q);
    }
  });
  return out;
}

HuaMoment hua_moment(int k, std::int64_t X, std::optional<std::int64_t> M) {
  if (X < 1) throw std::invalid_argument("hua_moment: X >= 1");
  const std::int64_t m = static_cast<std::int64_t>(k) * (k + 1) / 2;
  BigInt xk;
  mpz_ui_pow_ui(xk.get_mpz_t(), static_cast<unsigned long>(X),
                static_cast<unsigned long>(k));
  const BigInt thr_big = m * xk;
  if (!thr_big.fits_slong_p())
    throw CapacityError("hua_moment: sampling threshold exceeds 64 bits");
  const std::int64_t threshold = thr_big.get_si();

  HuaMoment result;
  result.threshold = threshold;
  result.samples = M.value_or(threshold + 1);
  if (result.samples <= threshold)
    throw std::invalid_argument(
        "hua_moment: M must exceed the trig-degree threshold m*X^k = " +
        std::to_string(threshold));

  const std::int64_t samples = result.samples;
  const auto w = phase_table(samples);

  // fixed 8192-sample chunks so the reduction order is thread-count free
  const std::int64_t chunk = 8192;
  const auto nchunks = static_cast<std::size_t>((samples + chunk - 1) / chunk);
  std::vector<long double> partial(nchunks, 0.0L);
  parallel_for(nchunks, [&](std::size_t ci) {
    const std::int64_t lo = static_cast<std::int64_t>(ci) * chunk;
    const std::int64_t hi = std::min(samples, lo + chunk);
    long double acc = 0.0L;
    for (std::int64_t j = lo; j < hi; ++j) {
      Complex f{0.0, 0.0};
      const auto ju = static_cast<std::uint64_t>(j);
      for (std::int64_t n = 1; n <= X; ++n) {
        const auto nk = ntt::powmod(static_cast<std::uint64_t>(n % samples),
                                    static_cast<std::uint64_t>(k),
                                    static_cast<std::uint64_t>(samples));
        f += w[static_cast<std::size_t>(
            mulmod_u(ju, nk, static_cast<std::uint64_t>(samples)))];
      }
      const long double p = static_cast<long double>(std::norm(f));
      long double pm = 1.0L;
      for (std::int64_t i = 0; i < m; ++i) pm *= p;
      acc += pm;
    }
    partial[ci] = acc;
  });
  long double total = 0.0L;
  for (const auto p : partial) total += p;
  result.value = static_cast<double>(total / static_cast<long double>(samples));
  return result;
}

std::string bound_name_string(BoundName name) {
  switch (name) {
    case BoundName::weyl_minor: return "weyl_minor";
    case BoundName::gauss_decay: return "gauss_decay";
    case BoundName::hua_moment: return "hua_moment";
    case BoundName::v_decay: return "v_decay";
  }
  return "unknown";
}

BoundCheckReport measure_bound(const WeylMinorGrid& grid) {
  if (grid.samples == 0) throw std::invalid_argument("measure_bound: empty grid");
  BoundCheckReport report;
  report.bound = BoundName::weyl_minor;
  const double shape =
      std::pow(static_cast<double>(grid.X), 1.0 - grid.alpha * weyl_sigma(grid.k));
  std::mt19937_64 rng(grid.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::size_t kept = 0;
  while (kept < grid.samples) {
    const double xi = uniform(rng);
    if (is_major(xi, grid.k, grid.X, grid.alpha)) continue;
    ++kept;
    const double ratio = std::abs(weyl_sum(grid.k, grid.X, xi)) / shape;
    if (ratio > report.worstRatio) {
      report.worstRatio = ratio;
      report.worstWitness = {{"xi", xi}, {"X", static_cast<double>(grid.X)}};
    }
  }
  report.gridSize = grid.samples;
  return report;
}

BoundCheckReport measure_bound(const GaussDecayGrid& grid) {
  if (grid.qMax < 1) throw std::invalid_argument("measure_bound: empty grid");
  BoundCheckReport report;
  report.bound = BoundName::gauss_decay;
  const double sigma = weyl_sigma(grid.k);
  std::size_t count = 0;
  for (std::int64_t q = 1; q <= grid.qMax; ++q) {
    const auto values = gauss_sum_all(grid.k, q);
    for (std::int64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      ++count;
      const double ratio = std::abs(values[static_cast<std::size_t>(a % q)]) *
                           std::pow(static_cast<double>(q), sigma);
      if (ratio > report.worstRatio) {
        report.worstRatio = ratio;
        report.worstWitness = {{"a", static_cast<double>(a)},
                               {"q", static_cast<double>(q)}};
      }
    }
  }
  report.gridSize = count;
  return report;
}

BoundCheckReport measure_bound(const HuaMomentGrid& grid) {
  if (grid.Xs.empty()) throw std::invalid_argument("measure_bound: empty grid");
  BoundCheckReport report;
  report.bound = BoundName::hua_moment;
  report.gridSize = grid.Xs.size();

  std::vector<double> logs_n, logs_m;
  double prev_moment = 0.0, prev_n = 0.0;
  const double kk = static_cast<double>(grid.k) * grid.k;
  for (std::size_t i = 0; i < grid.Xs.size(); ++i) {
    const std::int64_t X = grid.Xs[i];
    const double moment = hua_moment(grid.k, X).value;
    const double n = std::pow(static_cast<double>(X), grid.k);
    logs_n.push_back(std::log(n));
    logs_m.push_back(std::log(moment));
    if (i > 0) {
      // growth of the moment against the bound shape N^(k^2)
      const double ratio = (moment / prev_moment) / std::pow(n / prev_n, kk);
      if (ratio > report.worstRatio) {
        report.worstRatio = ratio;
        report.worstWitness = {{"X", static_cast<double>(X)}, {"moment", moment}};
      }
    }
    prev_moment = moment;
    prev_n = n;
  }
  if (logs_n.size() >= 2) {
    const auto n = static_cast<double>(logs_n.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < logs_n.size(); ++i) {
      sx += logs_n[i];
      sy += logs_m[i];
      sxx += logs_n[i] * logs_n[i];
      sxy += logs_n[i] * logs_m[i];
    }
    report.fittedExponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return report;
}

BoundCheckReport measure_bound(const VDecayGrid& grid) {
  if (grid.thetas.empty()) throw std::invalid_argument("measure_bound: empty grid");
  BoundCheckReport report;
  report.bound = BoundName::v_decay;
  report.gridSize = grid.thetas.size();
  const double xk = std::pow(static_cast<double>(grid.X), grid.k);
  for (const double theta : grid.thetas) {
    const Complex v = v_integral(grid.k, grid.X, theta, grid.tol);
    const double shape = static_cast<double>(grid.X) *
                         std::pow(1.0 + xk * std::abs(theta), -1.0 / grid.k);
    const double ratio = std::abs(v) / shape;
    if (ratio > report.worstRatio) {
      report.worstRatio = ratio;
      report.worstWitness = {{"theta", theta}};
    }
  }
  return report;
}

}  // namespace waring
