#include <doctest.h>

#include <cmath>

#include "waring/asymptotic.hpp"
#include "waring/counting.hpp"
#include "waring/oscillatory.hpp"

using namespace waring;

TEST_SUITE_BEGIN("asymptotic");

TEST_CASE("main term known values") {
  // Gamma(3/2)^2 / Gamma(1) = pi/4, N-exponent 0
  for (std::int64_t N : {5, 100, 12345}) {
    CHECK(main_term(2, 2, N).value == doctest::Approx(M_PI / 4.0).epsilon(1e-13));
  }
  // Gamma(3/2)^4 / Gamma(2) * N = pi^2 N / 16
  CHECK(main_term(2, 4, 100).value ==
        doctest::Approx(M_PI * M_PI * 100.0 / 16.0).epsilon(1e-13));
  // all-ones coefficients change nothing
  const CoeffVector ones{{1, 1, 1, 1}};
  CHECK(main_term(2, 4, 100, ones).value == main_term(2, 4, 100).value);
  // generalized prefactor (c_1...c_d)^(-1/k)
  const CoeffVector c{{1, 2, 3, 4}};
  CHECK(main_term(2, 4, 100, c).value ==
        doctest::Approx(main_term(2, 4, 100).value / std::sqrt(24.0)).epsilon(1e-12));
  // log value survives value overflow
  const auto big = main_term(2, 400, 1000000);
  CHECK(big.overflow);
  CHECK(std::isfinite(big.logValue));
}

TEST_CASE("singular integral identity") {
  const auto c1 = singular_integral_check(2, 4, 25, 1e-3);
  CHECK(c1.deviation <= 1e-3);
  CHECK(c1.imagResidual < 1e-9 * c1.closedForm);
  const auto c2 = singular_integral_check(2, 3, 9, 1e-3);
  CHECK(c2.deviation <= 1e-3);
  CHECK_THROWS_AS(singular_integral_check(2, 2, 9, 1e-3), std::invalid_argument);
}

TEST_CASE("A1 against a dense window quadrature") {
  // single-arc regime: X^alpha < 2, so A1 = I_w exactly
  const int k = 2, d = 4;
  const std::int64_t N = 50;  // X = 7, 7^0.25 < 2
  const double alpha = 0.25;
  const double a1 = approx_A1(k, d, N, alpha, 1e-10);

  const std::int64_t X = integer_kth_root(N, k);
  const double w = std::pow(static_cast<double>(X), alpha - k);
  Complex riemann = 0.0;
  const int steps = 200000;
  for (int i = 0; i < steps; ++i) {
    const double t = -w + (i + 0.5) * (2.0 * w / steps);
    Complex v = v_integral(k, X, t, 1e-12);
    Complex vd{1.0, 0.0};
    for (int j = 0; j < d; ++j) vd *= v;
    riemann += vd * unit_phase(-t * static_cast<double>(N));
  }
  riemann *= 2.0 * w / steps;
  CHECK(a1 == doctest::Approx(riemann.real()).epsilon(1e-7));
}

TEST_CASE("A2 consistency and Q=1 regime") {
  // X^alpha < 2 keeps the truncation at Q = 1: A2 = main term exactly
  CHECK(approx_A2(2, 5, 50, 0.1) == main_term(2, 5, 50).value);
  // definition-level identity at larger Q
  const std::int64_t N = 10000;  // X = 100, Q = floor(100^0.25) = 3
  const std::int64_t X = integer_kth_root(N, 2);
  const std::int64_t Q = major_arc_qmax(X, 0.25);
  CHECK(Q == 3);
  const double lhs = approx_A2(2, 5, N, 0.25);
  const double rhs = truncated_series(2, 5, N, Q).value * main_term(2, 5, N).value;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("A3 positive at d >= 2^k+1") {
  const double a3 = approx_A3(2, 9, 200);
  CHECK(a3 > 0.0);
}

TEST_CASE("verify assembles a consistent record") {
  const auto rec = verify(WaringInstance(2, 2, 5), 0.25);
  CHECK(rec.exactCount == 2);
  CHECK(rec.Mk + rec.mk == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(rec.splitResidual < 1e-10);

  const auto r8 = verify(WaringInstance(2, 8, 500));
  CHECK(r8.exactCount == count_exact(WaringInstance(2, 8, 500)).total());
  CHECK(r8.splitResidual < 1e-8);
  CHECK(std::abs(r8.mk - r8.mkDirect) <
        1e-8 * std::max(1.0, std::abs(r8.exactCount.get_d())));
  CHECK(r8.ratio > 0.0);
  const std::int64_t X500 = integer_kth_root(500, 2);
  const double expect_a2 =
      truncated_series(2, 8, 500, major_arc_qmax(X500, 0.25)).value * r8.mainTerm.value;
  CHECK(r8.A2 == doctest::Approx(expect_a2).epsilon(1e-12));
  CHECK(r8.A3 == doctest::Approx(r8.singularSeries * r8.mainTerm.value).epsilon(1e-15));
}

TEST_CASE("verify on a generalized instance") {
  const std::vector<std::int64_t> c{1, 1, 2, 3, 1, 1, 1, 1, 1};
  const auto rec = verify(WaringInstance(2, 9, 300, c), 0.25);
  CHECK(rec.exactCount == count_exact(WaringInstance(2, 9, 300, c)).total());
  CHECK(rec.splitResidual < 1e-8);
  CHECK(rec.ratio > 0.0);

  // brute-force anchor at a size inside the enumeration guard
  const std::vector<std::int64_t> c2{1, 2, 3, 1};
  const auto small = verify(WaringInstance(2, 4, 120, c2), 0.25);
  CHECK(small.exactCount == count_bruteforce(WaringInstance(2, 4, 120, c2)));
}

TEST_CASE("scan medians and grid handling") {
  const auto summary = scan(2, 6, {200, 300, 400, 500}, 0.25);
  CHECK(summary.records.size() == 4);
  CHECK(std::isfinite(summary.ratioDevMedianLower));
  CHECK(std::isfinite(summary.ratioDevMedianUpper));
  // singleton grid reduces to verify
  const auto single = scan(2, 6, {300}, 0.25);
  CHECK(single.records.size() == 1);
  CHECK(single.records[0].exactCount == summary.records[1].exactCount);
  // empty grid gives an empty list
  CHECK(scan(2, 6, {}, 0.25).records.empty());
  CHECK_THROWS_AS(scan(2, 6, {300, 200}, 0.25), std::invalid_argument);
}

TEST_SUITE_END();
