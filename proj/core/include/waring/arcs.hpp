#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "waring/counting.hpp"
#include "waring/types.hpp"

namespace waring {

// Reduced fraction a/q, 1 <= a <= q, gcd(a, q) = 1. The fraction 1/1 doubles
// as 0 on the circle; distances are always taken mod 1.
struct Fraction {
  std::int64_t a = 1;
  std::int64_t q = 1;

  Fraction() = default;
  Fraction(std::int64_t a, std::int64_t q);

  double value() const { return static_cast<double>(a) / static_cast<double>(q); }
  bool operator==(const Fraction&) const = default;
};

// distance from xi to the nearest integer translate of f
double circle_distance(double xi, const Fraction& f);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

struct Arc {
  Fraction center;
  std::vector<Interval> pieces;  // two pieces when the arc wraps at 0 ~ 1
};

struct ArcDecomposition {
  int k = 0;
  std::int64_t X = 0;
  double alpha = 0.0;
  double halfWidth = 0.0;  // X^(alpha - k)
  std::int64_t qMax = 0;   // floor(X^alpha)
  std::vector<Arc> arcs;
  double totalMajorMeasure = 0.0;

  std::vector<Interval> majorIntervals() const;  // all pieces, sorted by lo
  std::vector<Interval> minorIntervals() const;  // complement within [0, 1]
};

// Enumerates the major arcs around every reduced a/q with q <= floor(X^alpha)
// and verifies they are pairwise disjoint. alpha must lie in (0, 1/3).
ArcDecomposition build_arcs(int k, std::int64_t X, double alpha);

struct DirichletResult {
  Fraction approx;
  // true when the returned fraction certifies |xi - a/q| <= 1/(qQ); can only
  // be false for degenerate floating-point inputs
  bool guaranteed = true;
};

// Best rational approximation with denominator at most Q, via continued
// fraction convergents; among qualifying convergents the smallest q wins.
DirichletResult dirichlet_approx(double xi, std::int64_t Q);

// Major-arc membership of xi for (k, X, alpha), decided through the
// convergents of xi rather than an interval scan.
bool is_major(double xi, int k, std::int64_t X, double alpha);

// largest integer q with q <= X^alpha
std::int64_t major_arc_qmax(std::int64_t X, double alpha);

// Exact Fourier expansion of the d-th power of the Weyl sum (or, in the
// generalized problem, of the product of the coefficient-dilated sums):
// coeffs(m) = #{n, 1 <= n_i <= X_i : sum c_i n_i^k = m} with
// X_i = floor((X^k / c_i)^(1/k)); X_i = X when coeffs are absent.
class FourierLadder {
 public:
  static FourierLadder build(int k, int d, std::int64_t X,
                             const std::optional<std::vector<std::int64_t>>& coeffs = {},
                             const CountingOptions& options = {});

  // Ladder sized for a target N: coordinate limits X_i = floor((N/c_i)^(1/k)),
  // so coeff(N) is the full representation count. Equivalent to build() with
  // X = floor(N^(1/k)) in the plain problem; required for generalized c,
  // where c_i n_i^k <= N can exceed X^k.
  static FourierLadder build_for_target(int k, int d, std::int64_t N,
                                        const std::optional<std::vector<std::int64_t>>& coeffs = {},
                                        const CountingOptions& options = {});

  int k() const { return k_; }
  int d() const { return d_; }
  std::int64_t X() const { return X_; }
  const std::optional<std::vector<std::int64_t>>& coeffs_vector() const { return c_; }

  std::int64_t modes() const { return static_cast<std::int64_t>(coeff_.size()) - 1; }
  const BigInt& coeff(std::int64_t m) const;
  const std::vector<BigInt>& all_coeffs() const { return coeff_; }
  // per-coordinate upper limits X_i actually used
  const std::vector<std::int64_t>& limits() const { return limits_; }

 private:
  FourierLadder() = default;
  int k_ = 0;
  int d_ = 0;
  std::int64_t X_ = 0;
  std::optional<std::vector<std::int64_t>> c_;
  std::vector<std::int64_t> limits_;
  std::vector<BigInt> coeff_;
  static const BigInt kZero;
};

// int_0^1 (f_X(xi))^d e(-N xi) dxi -- exactly the ladder coefficient at N.
BigInt circle_integral(const FourierLadder& ladder, std::int64_t N);

// Float cross-check: mean of M equispaced samples of the integrand, exact
// rational phases. M defaults to modes()+1, the aliasing-free minimum.
double circle_integral_dft_check(const FourierLadder& ladder, std::int64_t N,
                                 std::int64_t M = 0);

// int over [lo,hi] of (f_X)^d e(-N xi) dxi via the closed-form antiderivative
// per Fourier mode, summed outward from m = N in compensated long double.
Complex arc_integral(const FourierLadder& ladder, std::int64_t N, const Interval& interval);
Complex arc_integral(const FourierLadder& ladder, std::int64_t N,
                     std::span<const Interval> intervals);

}  // namespace waring
