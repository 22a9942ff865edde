#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "waring/types.hpp"

namespace waring {

using CoeffVector = std::optional<std::vector<std::int64_t>>;

// A_N(q) = sum over a in [1,q], (a,q)=1 of prod_i G(c_i a/q) * e(-N a/q).
// Real by the a <-> q-a conjugate pairing, which the evaluation enforces.
struct ArcSum {
  std::int64_t q = 1;
  double value = 0.0;
  double imagResidual = 0.0;  // |imag| of the unpaired sum, for the record
};

ArcSum arc_sum(int k, int d, std::int64_t N, std::int64_t q,
               const CoeffVector& coeffs = std::nullopt);

struct TruncatedSeries {
  double value = 0.0;  // sum_{q <= Q} A_N(q)
  std::int64_t Q = 1;
  std::vector<double> partials;  // running sums, partials[q-1] = S_q
  // measured-constant tail shape: c_hat * 10 * Q^(-1/10), from |A(q)| <~ c q^(-11/10)
  double tailEstimate = 0.0;
};

TruncatedSeries truncated_series(int k, int d, std::int64_t N, std::int64_t Q,
                                 const CoeffVector& coeffs = std::nullopt);

struct LocalDensityOptions {
  double tol = 1e-9;
  // p^h never exceeds this (congruence tables get dense beyond it)
  std::int64_t modulus_cap = 10'000'000;
  // per-level compute guard: q * support(q) operations
  std::int64_t work_budget = 4'000'000'000;
  // largest modulus for which the congruence-count cross check runs
  std::int64_t count_form_cap = 1 << 12;
};

// chi_N(p) = sum_h A_N(p^h), stabilized, with the congruence-count form
// p^(h(1-d)) #{x mod p^h : sum c_i x_i^k = N} as the independent check.
struct LocalDensity {
  std::int64_t p = 2;
  int hUsed = 0;
  double value = 0.0;
  bool stabilized = false;
  double characterForm = 0.0;  // S_h via arc sums at prime powers
  double countForm = 0.0;      // density form at the largest checked level
  int countFormLevel = 0;      // that level (may sit below hUsed for big p^h)
};

LocalDensity local_density(int k, int d, std::int64_t N, std::int64_t p,
                           const LocalDensityOptions& options = {},
                           const CoeffVector& coeffs = std::nullopt);

struct SingularSeriesResult {
  int k = 0, d = 0;
  std::int64_t N = 0;
  CoeffVector coeffs;
  double truncatedSum = 0.0;
  std::int64_t Q = 0;
  double eulerProduct = 0.0;
  std::int64_t P = 0;
  double tailEstimate = 0.0;
  std::vector<LocalDensity> factors;
  bool smallDimensionWarning = false;  // d < 2^k + 1: no positivity guarantee
};

// Product over primes p <= P of stabilized local densities, cross-validated
// against the truncated series over q <= Q.
SingularSeriesResult euler_product(int k, int d, std::int64_t N, std::int64_t P,
                                   double tol = 1e-9, std::int64_t Q = 1000,
                                   const CoeffVector& coeffs = std::nullopt);

struct MultiplicativityReport {
  struct Row {
    std::int64_t q1 = 1, q2 = 1;
    double lhs = 0.0;  // A_N(q1 q2)
    double rhs = 0.0;  // A_N(q1) A_N(q2)
    double absDiff = 0.0;
  };
  std::vector<Row> rows;
  double maxAbsDiff = 0.0;
};

MultiplicativityReport multiplicativity_check(
    int k, int d, std::int64_t N,
    std::span<const std::pair<std::int64_t, std::int64_t>> pairs,
    const CoeffVector& coeffs = std::nullopt);

// primes in [2, P]
std::vector<std::int64_t> primes_up_to(std::int64_t P);

}  // namespace waring
