#include "waring/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "waring/loggamma.hpp"
#include "waring/oscillatory.hpp"

namespace waring {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double log_big(const BigInt& v) {
  signed long exp2;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

Complex ipow(Complex base, int e) {
  Complex r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// product of per-coordinate v factors at theta (a power in the plain case)
struct VProduct {
  std::vector<FilonV> factors;          // one per distinct coefficient
  std::vector<std::pair<int, int>> use;  // (factor index, multiplicity)
  std::vector<std::int64_t> cvals;       // coefficient per factor

  VProduct(int k, std::int64_t N, const CoeffVector& coeffs, bool real_upper) {
    std::vector<std::int64_t> distinct;
    const int d = coeffs ? static_cast<int>(coeffs->size()) : 1;
    for (int i = 0; i < d; ++i) {
      const std::int64_t c = coeffs ? (*coeffs)[static_cast<std::size_t>(i)] : 1;
      auto it = std::find(distinct.begin(), distinct.end(), c);
      if (it == distinct.end()) {
        distinct.push_back(c);
        use.emplace_back(static_cast<int>(distinct.size()) - 1, 1);
      } else {
        ++use[static_cast<std::size_t>(it - distinct.begin())].second;
      }
    }
    for (const std::int64_t c : distinct) {
      const double upper =
          real_upper ? std::pow(static_cast<double>(N) / static_cast<double>(c), 1.0 / k)
                     : static_cast<double>(integer_kth_root(N / c, k));
      factors.emplace_back(k, upper);
      cvals.push_back(c);
    }
  }

  // multiplicity d for the plain problem (coeffs absent)
  void set_plain(int d) { use.front().second = d; }

  Complex operator()(double theta) const {
    Complex prod{1.0, 0.0};
    for (const auto& [fi, mult] : use)
      prod *= ipow(factors[static_cast<std::size_t>(fi)](
                       static_cast<double>(cvals[static_cast<std::size_t>(fi)]) * theta),
                   mult);
    return prod;
  }
};

}  // namespace

MainTerm main_term(int k, int d, std::int64_t N, const CoeffVector& coeffs) {
  if (k < 2 || d < 1 || N < 1)
    throw std::invalid_argument("main_term: k >= 2, d >= 1, N >= 1");
  if (coeffs && static_cast<int>(coeffs->size()) != d)
    throw std::invalid_argument("main_term: coeffs must have length d");
  MainTerm out;
  out.k = k;
  out.d = d;
  out.N = N;
  out.coeffs = coeffs;
  const double dk = static_cast<double>(d) / k;
  out.logValue = d * log_gamma(1.0 + 1.0 / k) - log_gamma(dk) +
                 (dk - 1.0) * std::log(static_cast<double>(N));
  if (coeffs)
    for (const auto c : *coeffs)
      out.logValue -= std::log(static_cast<double>(c)) / k;
  out.overflow = out.logValue > 709.0;
  out.value = std::exp(out.logValue);
  return out;
}

SingularIntegralCheck singular_integral_check(int k, int d, std::int64_t N, double tol) {
  if (d < k + 1)
    throw std::invalid_argument("singular_integral_check: requires d >= k+1");
  if (!(tol > 0.0)) throw std::invalid_argument("singular_integral_check: tol > 0");

  SingularIntegralCheck out;
  const MainTerm mt = main_term(k, d, N);
  out.closedForm = mt.value;

  // v cut at the real upper limit: the closed form is then exact
  const double Z = std::pow(static_cast<double>(N), 1.0 / k);
  const FilonV v(k, Z);
  const double nd = static_cast<double>(N);
  auto f = [&](double xi) {
    return ipow(v(xi), d) * unit_phase(-xi * nd);
  };

  // The window grows until the tail is certifiably below tol. Integrating
  // e(-xi N) by parts once against |v| <= Z (Z^k xi)^(-1/k) and
  // |v'| <= 2 Z / (k xi) gives, per side,
  //   |tail(W)| <= W^(-d/k) / (2 pi N) + (d/(d-1)) (Z/(pi N)) W^(-(d-1)/k),
  // far sharper than the raw integral of |v|^d.
  auto tail_bound = [&](double W) {
    return 2.0 * (std::pow(W, -static_cast<double>(d) / k) / (2.0 * M_PI * nd) +
                  (static_cast<double>(d) / (d - 1.0)) * (Z / (M_PI * nd)) *
                      std::pow(W, -(d - 1.0) / k));
  };
  const double osc = 3.0 * nd;  // e(-xi N) plus the endpoint phase of v^d
  double window = 8.0 / nd;
  Complex total = integrate_oscillatory(f, -window, window, osc,
                                        0.05 * tol * mt.value, 2'000'000);
  for (int round = 0; round < 40; ++round) {
    Complex inc = integrate_oscillatory(f, window, 2.0 * window, osc,
                                        0.05 * tol * mt.value, 2'000'000);
    inc += std::conj(inc);  // the mirrored [-2w, -w] piece
    total += inc;
    window *= 2.0;
    if (4.0 * tail_bound(window) < tol * mt.value &&
        std::abs(inc) < 0.25 * tol * mt.value)
      break;
    if (round == 39)
      throw ConvergenceError("singular_integral_check: window failed to close");
  }
  out.window = window;
  out.integral = total.real();
  out.imagResidual = std::abs(total.imag());
  out.deviation = std::abs(out.integral - out.closedForm) / out.closedForm;
  return out;
}

namespace {

// window integral I_w = int_{|theta| <= w} prod_i v_i(theta) e(-theta N) dtheta
double arc_window_integral(int k, int d, std::int64_t N, double alpha, double tol,
                           const CoeffVector& coeffs) {
  const std::int64_t X = integer_kth_root(N, k);
  const double w = std::pow(static_cast<double>(X), alpha - k);
  VProduct vp(k, N, coeffs, /*real_upper=*/false);
  if (!coeffs) vp.set_plain(d);
  const double nd = static_cast<double>(N);
  auto f = [&](double theta) { return vp(theta) * unit_phase(-theta * nd); };
  // scale of the absolute tolerance: |I_w| <= 2w * prod X_i <= 2w X^d
  const double scale = 2.0 * w * std::pow(static_cast<double>(X), d);
  const Complex half = integrate_oscillatory(f, 0.0, w, 2.0 * nd, 0.5 * tol * scale);
  return 2.0 * half.real();  // v(-t) = conj(v(t)) mirrors the other half
}

}  // namespace

double approx_A1(int k, int d, std::int64_t N, double alpha, double tol,
                 const CoeffVector& coeffs) {
  const std::int64_t X = integer_kth_root(N, k);
  if (X < 2) throw std::invalid_argument("approx_A1: needs X >= 2");
  const std::int64_t Q = major_arc_qmax(X, alpha);
  const double series = truncated_series(k, d, N, Q, coeffs).value;
  return series * arc_window_integral(k, d, N, alpha, tol, coeffs);
}

double approx_A2(int k, int d, std::int64_t N, double alpha, const CoeffVector& coeffs) {
  const std::int64_t X = integer_kth_root(N, k);
  const std::int64_t Q = std::max<std::int64_t>(1, major_arc_qmax(X, alpha));
  return truncated_series(k, d, N, Q, coeffs).value * main_term(k, d, N, coeffs).value;
}

double approx_A3(int k, int d, std::int64_t N, std::int64_t P, double tol,
                 const CoeffVector& coeffs) {
  return euler_product(k, d, N, P, tol, 1000, coeffs).eulerProduct *
         main_term(k, d, N, coeffs).value;
}

VerificationRecord verify(const WaringInstance& instance, double alpha,
                          const VerifyTolerances& tolerances) {
  const int k = instance.k(), d = instance.d();
  const std::int64_t N = instance.N();
  const std::int64_t X = instance.X();
  if (X < 2) throw std::invalid_argument("verify: needs X = floor(N^(1/k)) >= 2");

  VerificationRecord rec;
  rec.k = k;
  rec.d = d;
  rec.N = N;
  rec.coeffs = instance.coeffs();
  rec.alpha = alpha;

  const auto ladder = FourierLadder::build_for_target(k, d, N, instance.coeffs());
  rec.exactCount = circle_integral(ladder, N);

  const auto arcs = build_arcs(k, X, alpha);
  const auto major = arcs.majorIntervals();
  const auto minor = arcs.minorIntervals();
  const Complex mk_major = arc_integral(ladder, N, std::span(major));
  const Complex mk_minor = arc_integral(ladder, N, std::span(minor));
  rec.Mk = mk_major.real();
  rec.arcImagResidual = std::abs(mk_major.imag()) + std::abs(mk_minor.imag());

  const double exact_d = rec.exactCount.get_d();
  rec.mk = exact_d - rec.Mk;          // complement subtraction
  rec.mkDirect = mk_minor.real();     // direct minor-arc integration
  rec.splitResidual = std::abs(rec.Mk + rec.mkDirect - exact_d) /
                      std::max(1.0, std::abs(exact_d));

  rec.mainTerm = main_term(k, d, N, instance.coeffs());
  bool series_ok = true;
  try {
    const auto series = euler_product(k, d, N, tolerances.P, tolerances.chiTol,
                                      tolerances.Q, instance.coeffs());
    rec.singularSeries = series.eulerProduct;
    rec.truncatedSeries = series.truncatedSum;
  } catch (const ConvergenceError&) {
    // below d = 2^k+1 the local densities need not stabilize in budget; the
    // exact-split part of the record stands on its own
    if (d >= (1 << k) + 1) throw;
    series_ok = false;
    rec.singularSeries = std::numeric_limits<double>::quiet_NaN();
    rec.truncatedSeries = truncated_series(k, d, N, tolerances.Q, instance.coeffs()).value;
    rec.flags.push_back("singular-series-unstabilized");
  }

  rec.A1 = approx_A1(k, d, N, alpha, tolerances.quadTol, instance.coeffs());
  rec.A2 = approx_A2(k, d, N, alpha, instance.coeffs());
  rec.A3 = rec.singularSeries * rec.mainTerm.value;

  const double denom = rec.singularSeries * rec.mainTerm.value;
  rec.ratio = !series_ok ? std::numeric_limits<double>::quiet_NaN()
              : rec.exactCount == 0
                  ? 0.0
                  : std::exp(log_big(rec.exactCount) - std::log(denom));
  rec.delta1 = std::abs(rec.Mk - rec.A1) / rec.mainTerm.value;
  rec.delta2 = std::abs(rec.A1 - rec.A2) / rec.mainTerm.value;
  rec.delta3 = std::abs(rec.A2 - rec.A3) / rec.mainTerm.value;

  // regime labels: the paper's thresholds are far beyond desk scale
  const double logN = std::log(static_cast<double>(N));
  const double logd = std::log(static_cast<double>(d));
  rec.flags.push_back(logN >= 3.0 * logd ? "N>=d^3" : "N<d^3");
  rec.flags.push_back(logN >= d * logd ? "N>=d^d" : "N<d^d");
  if (d < (1 << k) + 1) rec.flags.push_back("d<2^k+1");
  return rec;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

ScanSummary scan(int k, int d, const std::vector<std::int64_t>& Ngrid, double alpha,
                 const VerifyTolerances& tolerances) {
  if (!std::is_sorted(Ngrid.begin(), Ngrid.end()))
    throw std::invalid_argument("scan: N grid must be sorted ascending");
  ScanSummary out;
  std::string first_error;
  for (const std::int64_t N : Ngrid) {
    try {
      out.records.push_back(verify(WaringInstance(k, d, N), alpha, tolerances));
    } catch (const std::exception& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  if (out.records.empty() && !Ngrid.empty())
    throw std::runtime_error("scan: every grid point failed; first error: " +
                             first_error);

  const std::size_t n = out.records.size();
  std::vector<double> rdev, d1, d2, d3;
  for (const auto& r : out.records) {
    rdev.push_back(std::abs(r.ratio - 1.0));
    d1.push_back(r.delta1);
    d2.push_back(r.delta2);
    d3.push_back(r.delta3);
  }
  auto half = [&](const std::vector<double>& v, bool upper) {
    const auto mid = static_cast<std::ptrdiff_t>(n / 2);
    return upper ? std::vector<double>(v.begin() + mid, v.end())
                 : std::vector<double>(v.begin(), v.begin() + mid);
  };
  out.ratioDevMedianLower = median(half(rdev, false));
  out.ratioDevMedianUpper = median(half(rdev, true));
  const std::vector<double>* ds[3] = {&d1, &d2, &d3};
  for (int i = 0; i < 3; ++i) {
    out.deltaMedianLower[i] = median(half(*ds[i], false));
    out.deltaMedianUpper[i] = median(half(*ds[i], true));
  }
  return out;
}

}  // namespace waring
