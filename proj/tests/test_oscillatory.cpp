#include <doctest.h>

#include <cmath>

#include "waring/oscillatory.hpp"

using namespace waring;

namespace {

// brute-force Riemann/midpoint oracle for v(theta)
Complex v_brute(int k, double X, double theta, std::size_t panels = 1'000'000) {
  Complex sum = 0.0;
  const double h = X / static_cast<double>(panels);
  for (std::size_t i = 0; i < panels; ++i) {
    const double z = (static_cast<double>(i) + 0.5) * h;
    sum += unit_phase(theta * std::pow(z, k));
  }
  return sum * h;
}

}  // namespace

TEST_SUITE_BEGIN("oscillatory");

TEST_CASE("gauss-legendre rules") {
  for (int n : {4, 8, 16}) {
    const auto& rule = gauss_legendre(n);
    double w = 0.0, x2 = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      w += rule.w[i];
      x2 += rule.w[i] * rule.x[i] * rule.x[i];
    }
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  }
}

TEST_CASE("spherical bessel against series values") {
  double jn[13];
  spherical_bessel(2, 1e-10, jn);
  CHECK(jn[0] == doctest::Approx(1.0).epsilon(1e-12));
  spherical_bessel(4, 0.5, jn);
  CHECK(jn[0] == doctest::Approx(std::sin(0.5) / 0.5).epsilon(1e-13));
  CHECK(jn[1] == doctest::Approx(std::sin(0.5) / 0.25 - std::cos(0.5) / 0.5).epsilon(1e-12));
  spherical_bessel(12, 30.0, jn);
  CHECK(jn[0] == doctest::Approx(std::sin(30.0) / 30.0).epsilon(1e-12));

  // Legendre moment identity: int_{-1}^1 P_j(t) e^{i w t} dt = 2 i^j j_j(w)
  for (double omega : {0.3, 2.0, 9.7, 40.0}) {
    spherical_bessel(3, omega, jn);
    const int steps = 200000;
    Complex m2 = 0.0;
    for (int i = 0; i < steps; ++i) {
      const double t = -1.0 + (i + 0.5) * (2.0 / steps);
      const double p2 = 0.5 * (3.0 * t * t - 1.0);
      m2 += p2 * Complex{std::cos(omega * t), std::sin(omega * t)};
    }
    m2 *= 2.0 / steps;
    const Complex expect = 2.0 * Complex{-1.0, 0.0} * jn[2];  // i^2 = -1
    CHECK(std::abs(m2 - expect) < 1e-8);
  }
}

TEST_CASE("v_integral basics") {
  const auto v0 = v_integral(2, 10, 0.0);
  CHECK(v0.real() == 10.0);
  CHECK(v0.imag() == 0.0);

  // Fresnel-type value against the brute oracle
  const auto f = v_integral(2, 1, 1.0, 1e-11);
  const auto fb = v_brute(2, 1.0, 1.0);
  CHECK(std::abs(f - fb) < 1e-9);

  const auto g = v_integral(3, 2, 0.05, 1e-11);
  const auto gb = v_brute(3, 2.0, 0.05);
  CHECK(std::abs(g - gb) < 1e-8);

  // oscillatory regime
  const auto h = v_integral(2, 6, 3.7, 1e-11);
  const auto hb = v_brute(2, 6.0, 3.7, 4'000'000);
  CHECK(std::abs(h - hb) < 1e-8);
}

TEST_CASE("v_integral symmetry and size") {
  for (double theta : {0.013, 0.4, 2.0}) {
    const auto p = v_integral(2, 8, theta, 1e-11);
    const auto m = v_integral(2, 8, -theta, 1e-11);
    CHECK(std::abs(std::conj(p) - m) < 1e-10);
    CHECK(std::abs(p) <= 8.0 + 1e-9);
  }
}

TEST_CASE("v_integral errors") {
  CHECK_THROWS_AS(v_integral(2, 10, 0.5, -1.0), std::invalid_argument);
  // budget far below the oscillation count
  CHECK_THROWS_AS(v_integral(2, 1000, 0.9, 1e-10, 100), ConvergenceError);
}

TEST_CASE("filon evaluator matches v_integral") {
  for (int k : {2, 3, 5}) {
    const FilonV filon(k, 7.0);
    for (double theta : {0.0, 1e-6, 0.003, 0.1, 1.0, 8.5, -0.25}) {
      const auto fast = filon(theta);
      const auto slow = v_integral(k, 7, theta * std::pow(7.0, k) > 4e5 ? 0.0 : theta, 1e-11);
      if (theta * std::pow(7.0, k) > 4e5) continue;
      CHECK(std::abs(fast - slow) < 1e-9);
    }
  }
}

TEST_CASE("filon with non-integer upper limit") {
  const FilonV filon(2, 3.60555127546398929);  // sqrt(13)
  const auto brute = v_brute(2, 3.60555127546398929, 0.37);
  CHECK(std::abs(filon(0.37) - brute) < 1e-7);
}

TEST_CASE("integrate_oscillatory on a closed form") {
  // int_0^1 e(5 xi) dxi = 0; int_0^1 e(0.25 xi) ... known antiderivative
  auto f5 = [](double xi) { return unit_phase(5.0 * xi); };
  CHECK(std::abs(integrate_oscillatory(f5, 0.0, 1.0, 5.0, 1e-12)) < 1e-12);
  auto fq = [](double xi) { return unit_phase(0.25 * xi); };
  const Complex expect = (unit_phase(0.25) - Complex{1.0, 0.0}) /
                         Complex{0.0, 2.0 * M_PI * 0.25};
  CHECK(std::abs(integrate_oscillatory(fq, 0.0, 1.0, 1.0, 1e-12) - expect) < 1e-12);
}

TEST_SUITE_END();
