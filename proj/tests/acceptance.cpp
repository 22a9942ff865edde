// Acceptance suite: one numbered criterion per run (or all when no argument
// is given). Each criterion prints its measurements and a final PASS/FAIL
// line; the exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "waring/asymptotic.hpp"
#include "waring/ball.hpp"
#include "waring/oscillatory.hpp"
#include "waring/parallel.hpp"
#include "waring/serialize.hpp"

using namespace waring;

namespace {

bool check(bool ok, const std::string& what) {
  if (!ok) std::cout << "  VIOLATION: " << what << "\n";
  return ok;
}

// ---------------------------------------------------------------- 1
bool criterion_oracle_equivalence() {
  bool ok = true;
  std::int64_t instances = 0, skipped = 0;
  for (int k : {2, 3, 4}) {
    for (int d = 1; d <= 5; ++d) {
      std::map<int, RepCountTable> cache;
      const auto table = count_exact(WaringInstance(k, d, 200));
      std::vector<std::int64_t> targets;
      for (std::int64_t N = 1; N <= 200; ++N) {
        BigInt space;
        mpz_ui_pow_ui(space.get_mpz_t(),
                      static_cast<unsigned long>(std::max<std::int64_t>(
                          integer_kth_root(N, k), 1)),
                      static_cast<unsigned long>(d));
        if (space > 1'000'000) {
          ++skipped;
          continue;
        }
        targets.push_back(N);
      }
      std::vector<char> agree(targets.size(), 0);
      parallel_for(targets.size(), [&](std::size_t i) {
        const std::int64_t N = targets[i];
        agree[i] = count_bruteforce(WaringInstance(k, d, N)) == table.at(d, N);
      });
      for (std::size_t i = 0; i < targets.size(); ++i) {
        ++instances;
        ok &= check(agree[i] != 0,
                    "count mismatch at k=" + std::to_string(k) + " d=" +
                        std::to_string(d) + " N=" + std::to_string(targets[i]));
      }
    }
  }
  std::cout << "  instances checked: " << instances << " (guard-skipped: " << skipped
            << ")\n";
  return ok;
}

// ---------------------------------------------------------------- 2
bool criterion_circle_identity() {
  bool ok = true;
  std::int64_t checked = 0, dft_checked = 0;
  double worst_dft = 0.0;
  for (int k : {2, 3}) {
    for (int d = 1; d <= 6; ++d) {
      const auto table = count_exact(WaringInstance(k, d, 300));
      std::map<std::int64_t, FourierLadder> ladders;
      std::vector<std::pair<std::int64_t, const FourierLadder*>> jobs;
      for (std::int64_t N = 1; N <= 300; ++N) {
        const std::int64_t X = integer_kth_root(N, k);
        if (X < 1) continue;
        auto it = ladders.find(X);
        if (it == ladders.end())
          it = ladders.emplace(X, FourierLadder::build(k, d, X)).first;
        ok &= check(circle_integral(it->second, N) == table.at(d, N),
                    "ladder coefficient mismatch at k=" + std::to_string(k) +
                        " d=" + std::to_string(d) + " N=" + std::to_string(N));
        ++checked;
        // the M = dX^k+1 sampled mean is aliasing-free only for N <= d X^k
        if (N <= it->second.modes()) jobs.emplace_back(N, &it->second);
      }
      std::vector<double> err(jobs.size(), 0.0);
      parallel_for(jobs.size(), [&](std::size_t i) {
        const auto [N, ladder] = jobs[i];
        err[i] = std::abs(circle_integral_dft_check(*ladder, N) -
                          ladder->coeff(N).get_d());
      });
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        worst_dft = std::max(worst_dft, err[i]);
        ++dft_checked;
        ok &= check(err[i] < 0.5, "DFT mean off by " + std::to_string(err[i]) +
                                      " at k=" + std::to_string(k) +
                                      " d=" + std::to_string(d) +
                                      " N=" + std::to_string(jobs[i].first));
      }
    }
  }
  std::cout << "  coefficients checked: " << checked << ", DFT means checked: "
            << dft_checked << " (N <= d X^k), worst deviation: "
            << format_float(worst_dft) << "\n";
  return ok;
}

// ---------------------------------------------------------------- 3
bool criterion_arc_split() {
  bool ok = true;
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int d = 2 + static_cast<int>(rng() % 7);
    const std::int64_t N =
        (k == 2 ? 20 + static_cast<std::int64_t>(rng() % 1980)
                : 30 + static_cast<std::int64_t>(rng() % 970));
    const WaringInstance inst(k, d, N);
    const auto ladder = FourierLadder::build_for_target(k, d, N);
    const auto dec = build_arcs(k, inst.X(), 0.25);
    const auto major = dec.majorIntervals();
    const auto minor = dec.minorIntervals();
    const auto split = arc_integral(ladder, N, std::span(major)) +
                       arc_integral(ladder, N, std::span(minor));
    const double exact = circle_integral(ladder, N).get_d();
    const double rel = std::abs(split.real() - exact) / std::max(1.0, exact);
    worst = std::max(worst, rel);
    ok &= check(rel <= 1e-8, "arc split residual " + format_float(rel) + " at k=" +
                                 std::to_string(k) + " d=" + std::to_string(d) +
                                 " N=" + std::to_string(N));
  }
  std::cout << "  50 instances, worst relative residual: " << format_float(worst)
            << "\n";
  return ok;
}

// ---------------------------------------------------------------- 4
bool criterion_gauss_dual() {
  bool ok = true;
  const std::int64_t qmax = 2000;
  double worst = 0.0, worst_abs = 0.0;
  for (int k = 2; k <= 5; ++k) {
    std::vector<double> diffs(static_cast<std::size_t>(qmax) + 1, 0.0);
    std::vector<double> mags(static_cast<std::size_t>(qmax) + 1, 0.0);
    parallel_for(static_cast<std::size_t>(qmax), [&](std::size_t qi) {
      const std::int64_t q = static_cast<std::int64_t>(qi) + 1;
      double local_diff = 0.0, local_mag = 0.0;
      for (std::int64_t a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        const auto hist = gauss_sum(k, a, q);
        const auto direct = gauss_sum_direct(k, a, q);
        local_diff = std::max(local_diff, std::abs(hist - direct));
        local_mag = std::max(local_mag, std::abs(hist));
      }
      diffs[static_cast<std::size_t>(q)] = local_diff;
      mags[static_cast<std::size_t>(q)] = local_mag;
    });
    for (std::int64_t q = 1; q <= qmax; ++q) {
      worst = std::max(worst, diffs[static_cast<std::size_t>(q)]);
      worst_abs = std::max(worst_abs, mags[static_cast<std::size_t>(q)]);
    }
    const auto unit = gauss_sum(k, 1, 1);
    ok &= check(unit.real() == 1.0 && unit.imag() == 0.0, "G(a/1) != 1 exactly");
  }
  ok &= check(worst <= 1e-12, "dual-method disagreement " + format_float(worst));
  ok &= check(worst_abs <= 1.0 + 1e-12, "|G| above 1: " + format_float(worst_abs));
  std::cout << "  q <= " << qmax << ", k <= 5: worst dual gap " << format_float(worst)
            << ", max |G| " << format_float(worst_abs) << "\n";
  return ok;
}

// ---------------------------------------------------------------- 5
bool criterion_singular_dual_form() {
  bool ok = true;
  double worst = 0.0;
  for (int d : {9, 16}) {
    for (std::int64_t N = 1; N <= 100; ++N) {
      const auto s = euler_product(2, d, N, 50, 1e-9, 1000);
      const double gap = std::abs(s.truncatedSum - s.eulerProduct);
      worst = std::max(worst, gap);
      ok &= check(gap <= 1e-3, "dual-form gap " + format_float(gap) + " at d=" +
                                   std::to_string(d) + " N=" + std::to_string(N));
      // recalibrated bound, pinned after measuring the q^(-11/10) tail
      // constant on this grid (measured worst ~2e-7; margin 25x)
      ok &= check(gap <= 5e-6, "recalibrated dual-form gap " + format_float(gap) +
                                   " at d=" + std::to_string(d) +
                                   " N=" + std::to_string(N));
    }
  }
  std::cout << "  k=2, d in {9,16}, N <= 100: worst |truncated - euler| = "
            << format_float(worst) << " (spec 1e-3, recalibrated 5e-6)\n";
  return ok;
}

// ---------------------------------------------------------------- 6
bool criterion_multiplicativity() {
  bool ok = true;
  std::mt19937_64 rng(77);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  while (pairs.size() < 100) {
    const std::int64_t q1 = 1 + static_cast<std::int64_t>(rng() % 100);
    const std::int64_t q2 = 1 + static_cast<std::int64_t>(rng() % 100);
    if (std::gcd(q1, q2) == 1) pairs.emplace_back(q1, q2);
  }
  double worst = 0.0;
  for (const auto& [k, d] : std::vector<std::pair<int, int>>{{2, 5}, {2, 9}, {2, 16}, {3, 9}}) {
    const std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 400);
    const auto report = multiplicativity_check(k, d, N, pairs);
    worst = std::max(worst, report.maxAbsDiff);
    ok &= check(report.maxAbsDiff <= 1e-9,
                "multiplicativity gap " + format_float(report.maxAbsDiff) + " at k=" +
                    std::to_string(k) + " d=" + std::to_string(d));
  }
  std::cout << "  100 coprime pairs x 4 (k,d,N) draws: worst |A(q1q2)-A(q1)A(q2)| = "
            << format_float(worst) << "\n";
  return ok;
}

// ---------------------------------------------------------------- 7
bool criterion_positivity() {
  bool ok = true;
  double inf_s = 1e300, sup_s = 0.0;
  // d = 5 runs at a looser stabilization tolerance: certifying 1e-9 tails
  // at d = 2^k+1 needs prime-power levels that are pointlessly expensive
  // for a positivity check
  const std::vector<std::tuple<int, int, double>> rows{
      {2, 5, 1e-6}, {2, 9, 1e-9}, {2, 16, 1e-9}};
  for (const auto& [k, d, tol] : rows) {
    for (std::int64_t N = 1; N <= 500; ++N) {
      const auto s = euler_product(k, d, N, 50, tol, 1);
      inf_s = std::min(inf_s, s.eulerProduct);
      sup_s = std::max(sup_s, s.eulerProduct);
      ok &= check(s.eulerProduct > 0.0, "singular series not positive at d=" +
                                            std::to_string(d) +
                                            " N=" + std::to_string(N));
    }
  }
  // a k=3 row at the paper's threshold d = 2^k+1 = 9
  for (std::int64_t N = 1; N <= 100; ++N) {
    const auto s = euler_product(3, 9, N, 50, 1e-9, 1);
    inf_s = std::min(inf_s, s.eulerProduct);
    sup_s = std::max(sup_s, s.eulerProduct);
    ok &= check(s.eulerProduct > 0.0,
                "singular series not positive at k=3 N=" + std::to_string(N));
  }
  std::cout << "  grid min = " << format_float(inf_s)
            << ", grid sup = " << format_float(sup_s) << " (finite)\n";
  ok &= check(inf_s > 0.0 && std::isfinite(sup_s), "positivity/boundedness");
  return ok;
}

// ---------------------------------------------------------------- 8
bool criterion_singular_integral() {
  bool ok = true;
  double worst = 0.0;
  for (int d : {4, 6, 8}) {
    for (std::int64_t N : {25, 100, 400}) {
      const auto chk = singular_integral_check(2, d, N, 1e-3);
      worst = std::max(worst, chk.deviation);
      ok &= check(chk.deviation <= 1e-3,
                  "identity deviation " + format_float(chk.deviation) + " at d=" +
                      std::to_string(d) + " N=" + std::to_string(N));
    }
  }
  std::cout << "  k=2, d in {4,6,8}, N in {25,100,400}: worst relative deviation = "
            << format_float(worst) << "\n";
  return ok;
}

// ---------------------------------------------------------------- 9
bool criterion_hua() {
  bool ok = true;
  std::vector<double> logs_n, logs_m;
  for (std::int64_t X : {16, 32, 64, 128}) {
    const auto m = hua_moment(2, X);
    // exact diagonal oracle: moment = sum_s r_3(s)^2 over the cube ladder
    const auto ladder = FourierLadder::build(2, 3, X);
    BigInt diag = 0;
    for (const auto& c : ladder.all_coeffs()) diag += c * c;
    const double rel = std::abs(m.value - diag.get_d()) / diag.get_d();
    ok &= check(rel <= 1e-9, "moment vs diagonal count at X=" + std::to_string(X) +
                                 ": rel " + format_float(rel));
    // sampling-size independence above the threshold
    const auto m2 = hua_moment(2, X, m.threshold * 2 + 7);
    const double mrel = std::abs(m.value - m2.value) / m.value;
    ok &= check(mrel <= 1e-9, "M-dependence " + format_float(mrel));
    logs_n.push_back(std::log(std::pow(static_cast<double>(X), 2)));
    logs_m.push_back(std::log(m.value));
    std::cout << "  X=" << X << " moment=" << format_float(m.value) << "\n";
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < logs_n.size(); ++i) {
    sx += logs_n[i];
    sy += logs_m[i];
    sxx += logs_n[i] * logs_n[i];
    sxy += logs_n[i] * logs_m[i];
  }
  const double n = static_cast<double>(logs_n.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  std::cout << "  fitted log-log slope vs N: " << format_float(slope)
            << " (bound shape k^2 + 0.3 = 4.3)\n";
  return check(slope <= 4.3, "slope exceeds 4.3") && ok;
}

ScanSummary standard_scan(int d) {
  std::vector<std::int64_t> grid;
  for (std::int64_t N = 500; N <= 5000; N += 500) grid.push_back(N);
  return scan(2, d, grid, 0.25);
}

// ---------------------------------------------------------------- 10
bool criterion_asymptotic_trend() {
  bool ok = true;
  for (int d : {8, 16}) {
    const auto summary = standard_scan(d);
    for (const auto& r : summary.records) {
      std::cout << "  d=" << d << " N=" << r.N << " ratio=" << format_float(r.ratio)
                << "\n";
      ok &= check(r.ratio >= 0.8 && r.ratio <= 1.2,
                  "ratio outside [0.8, 1.2] at d=" + std::to_string(d) +
                      " N=" + std::to_string(r.N) + ": " + format_float(r.ratio));
    }
    std::cout << "  d=" << d << " median |ratio-1| lower/upper: "
              << format_float(summary.ratioDevMedianLower) << " / "
              << format_float(summary.ratioDevMedianUpper) << "\n";
    ok &= check(summary.ratioDevMedianUpper <= summary.ratioDevMedianLower,
                "median |ratio-1| not improving for d=" + std::to_string(d));
  }
  return ok;
}

// ---------------------------------------------------------------- 11
bool criterion_cascade_decay() {
  bool ok = true;
  for (int d : {8, 16}) {
    const auto summary = standard_scan(d);
    for (int i = 0; i < 3; ++i) {
      std::cout << "  d=" << d << " delta" << (i + 1) << " median lower/upper: "
                << format_float(summary.deltaMedianLower[i]) << " / "
                << format_float(summary.deltaMedianUpper[i]) << "\n";
      ok &= check(summary.deltaMedianUpper[i] <= summary.deltaMedianLower[i],
                  "delta" + std::to_string(i + 1) + " median not improving for d=" +
                      std::to_string(d));
    }
  }
  return ok;
}

// ---------------------------------------------------------------- 12
bool criterion_ball_sandwich() {
  bool ok = true;
  double lo = 1e300, hi = 0.0;
  for (int k : {2, 3}) {
    double klo = 1e300, khi = 0.0;
    for (int d = 1; d <= 10; ++d) {
      BigInt dk;
      mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d),
                    static_cast<unsigned long>(k));
      for (std::int64_t mult : {4, 8, 16}) {
        const std::int64_t N = mult * dk.get_si();
        const auto b = ball_count(k, d, N);
        klo = std::min(klo, b.ratio);
        khi = std::max(khi, b.ratio);
        // frozen from measurement on this grid; the paper asserts existence
        // of some d-independent band only
        ok &= check(b.ratio >= 0.85 && b.ratio <= 1.30,
                    "ball ratio " + format_float(b.ratio) + " outside [0.85, 1.30] at k=" +
                        std::to_string(k) + " d=" + std::to_string(d) +
                        " N=" + std::to_string(N));
      }
    }
    lo = std::min(lo, klo);
    hi = std::max(hi, khi);
    std::cout << "  k=" << k << ": measured band [" << format_float(klo) << ", "
              << format_float(khi) << "], width " << format_float(khi / klo) << "\n";
  }
  std::cout << "  overall band [" << format_float(lo) << ", " << format_float(hi)
            << "]\n";
  return ok;
}

// ---------------------------------------------------------------- 13
bool criterion_generalized() {
  bool ok = true;
  const int d = 9;
  const std::vector<std::int64_t> ones(d, 1);
  for (std::int64_t N : {50, 123, 200}) {
    const auto plain = count_exact(WaringInstance(2, d, N));
    const auto gen = count_exact(WaringInstance(2, d, N, ones));
    ok &= check(plain.total() == gen.total(), "c=1s count differs at N=" + std::to_string(N));

    const auto s_plain = euler_product(2, d, N, 30, 1e-9, 300);
    const auto s_gen = euler_product(2, d, N, 30, 1e-9, 300, ones);
    ok &= check(std::abs(s_plain.eulerProduct - s_gen.eulerProduct) <= 1e-12,
                "c=1s singular series differs at N=" + std::to_string(N));
    ok &= check(std::abs(s_plain.truncatedSum - s_gen.truncatedSum) <= 1e-12,
                "c=1s truncated series differs at N=" + std::to_string(N));

    const auto mt_plain = main_term(2, d, N);
    const auto mt_gen = main_term(2, d, N, ones);
    ok &= check(mt_plain.value == mt_gen.value, "c=1s main term differs");
  }

  // small generalized cases against brute force
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int dd = 2 + static_cast<int>(rng() % 3);
    std::vector<std::int64_t> c(static_cast<std::size_t>(dd));
    c[0] = 1;
    for (int i = 1; i < dd; ++i)
      c[static_cast<std::size_t>(i)] = 1 + static_cast<std::int64_t>(rng() % 3);
    const std::int64_t N = 10 + static_cast<std::int64_t>(rng() % 150);
    const WaringInstance inst(k, dd, N, c);
    ok &= check(count_exact(inst).total() == count_bruteforce(inst),
                "generalized count mismatch at trial " + std::to_string(trial));
  }
  std::cout << "  c=(1,...,1) coincidence and 30 brute-force spot checks done\n";
  return ok;
}

struct Criterion {
  int id;
  const char* title;
  std::function<bool()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "oracle equivalence (DP vs enumeration)", criterion_oracle_equivalence},
      {2, "circle identity (ladder + DFT mean)", criterion_circle_identity},
      {3, "arc split exactness (Mk + mk = r)", criterion_arc_split},
      {4, "Gauss sum dual method", criterion_gauss_dual},
      {5, "singular series dual form", criterion_singular_dual_form},
      {6, "arc-sum multiplicativity", criterion_multiplicativity},
      {7, "singular series positivity and boundedness", criterion_positivity},
      {8, "singular integral identity", criterion_singular_integral},
      {9, "Hua moment exactness and growth", criterion_hua},
      {10, "asymptotic ratio trend at desk scale", criterion_asymptotic_trend},
      {11, "cascade delta decay", criterion_cascade_decay},
      {12, "ball count sandwich", criterion_ball_sandwich},
      {13, "generalized coefficients", criterion_generalized},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int failures = 0;
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  for (const auto& crit : criteria()) {
    if (only != 0 && crit.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = crit.run();
    } catch (const std::exception& e) {
      std::cout << "  EXCEPTION: " << e.what() << "\n";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("ACCEPTANCE %2d (%s): %s  [%.1fs]\n", crit.id, crit.title,
                ok ? "PASS" : "FAIL", secs);
    if (!ok) ++failures;
  }
  return failures;
}
