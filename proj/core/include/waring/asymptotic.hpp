#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "waring/arcs.hpp"
#include "waring/instance.hpp"
#include "waring/singular.hpp"
#include "waring/types.hpp"

namespace waring {

// Gamma(1+1/k)^d / Gamma(d/k) * N^(d/k-1), divided by (c_1...c_d)^(1/k) in
// the generalized problem. Always evaluated in log space.
struct MainTerm {
  int k = 0, d = 0;
  std::int64_t N = 0;
  CoeffVector coeffs;
  double logValue = 0.0;
  double value = 0.0;
  bool overflow = false;  // exp(logValue) past double range; logValue still valid
};

MainTerm main_term(int k, int d, std::int64_t N, const CoeffVector& coeffs = std::nullopt);

// Numeric check of int_R v(xi)^d e(-xi N) dxi against the Gamma closed form,
// with v cut at the real upper limit N^(1/k) (where the identity is exact).
// Requires d >= k+1 for absolute convergence.
struct SingularIntegralCheck {
  double integral = 0.0;  // real part of the window integral
  double imagResidual = 0.0;
  double closedForm = 0.0;
  double deviation = 0.0;  // relative
  double window = 0.0;     // [-window, window] actually integrated
};

SingularIntegralCheck singular_integral_check(int k, int d, std::int64_t N, double tol);

// First approximation of the major-arc term: per-arc quadrature of the
// continuous v against the target modulation, summed with exact-phase Gauss
// factors. All arcs share the same halfwidth, so after the substitution
// xi = a/q + theta the inner integral is arc-independent and the arc sum
// collapses onto the truncated singular series.
double approx_A1(int k, int d, std::int64_t N, double alpha, double tol = 1e-9,
                 const CoeffVector& coeffs = std::nullopt);

// A2 = (series truncated at floor(X^alpha)) * main term (the closed form).
double approx_A2(int k, int d, std::int64_t N, double alpha,
                 const CoeffVector& coeffs = std::nullopt);

// A3 = full singular series (Euler product) * main term.
double approx_A3(int k, int d, std::int64_t N, std::int64_t P = 50,
                 double tol = 1e-9, const CoeffVector& coeffs = std::nullopt);

struct VerifyTolerances {
  double quadTol = 1e-9;  // A1 window quadrature, relative
  double chiTol = 1e-9;   // local-density stabilization
  std::int64_t Q = 1000;  // series truncation for the singular-series cross check
  std::int64_t P = 50;    // Euler-product prime cap
};

// One row of the asymptotic experiment.
struct VerificationRecord {
  int k = 0, d = 0;
  std::int64_t N = 0;
  CoeffVector coeffs;
  double alpha = 0.25;
  BigInt exactCount;
  MainTerm mainTerm;
  double singularSeries = 0.0;   // Euler product
  double truncatedSeries = 0.0;  // q <= Q cross check
  double Mk = 0.0;               // exact major-arc integral
  double mk = 0.0;               // exactCount - Mk
  double mkDirect = 0.0;         // direct minor-arc mode integration
  double A1 = 0.0, A2 = 0.0, A3 = 0.0;
  double ratio = 0.0;   // exactCount / (singularSeries * mainTerm)
  double delta1 = 0.0;  // |Mk - A1| / mainTerm
  double delta2 = 0.0;  // |A1 - A2| / mainTerm
  double delta3 = 0.0;  // |A2 - A3| / mainTerm
  double splitResidual = 0.0;   // |Mk + mkDirect - exactCount| / max(1, exactCount)
  double arcImagResidual = 0.0;
  std::vector<std::string> flags;
};

VerificationRecord verify(const WaringInstance& instance, double alpha = 0.25,
                          const VerifyTolerances& tolerances = {});

struct ScanSummary {
  std::vector<VerificationRecord> records;
  // medians over the lower/upper halves of the N grid
  double ratioDevMedianLower = 0.0, ratioDevMedianUpper = 0.0;  // |ratio - 1|
  double deltaMedianLower[3] = {0, 0, 0};
  double deltaMedianUpper[3] = {0, 0, 0};
};

// One record per grid point (ascending N). Per-record errors propagate as
// exceptions only when every record fails; otherwise failed points are
// dropped and flagged in the summary.
ScanSummary scan(int k, int d, const std::vector<std::int64_t>& Ngrid,
                 double alpha = 0.25, const VerifyTolerances& tolerances = {});

}  // namespace waring
