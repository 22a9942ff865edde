#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "waring/types.hpp"

namespace waring {

// f_X(xi) = sum_{n=1}^X e(xi n^k), Kahan-compensated. The phase xi n^k is
// reduced mod 1 in long double; accuracy is limited by the precision of xi
// itself once xi n^k is large.
Complex weyl_sum(int k, std::int64_t X, double xi);

// f_X at the exact rational point j/M: phases are reduced mod M in integer
// arithmetic before any float conversion.
Complex weyl_sum_rational(int k, std::int64_t X, std::int64_t j, std::int64_t M);

// G(a/q) = (1/q) sum_{r=1}^q e(a r^k / q) via the residue histogram
// rho(s) = #{r <= q : r^k = s (mod q)}. Requires gcd(a, q) = 1.
Complex gauss_sum(int k, std::int64_t a, std::int64_t q);

// Same value by direct summation over r; the dual aggregation path.
Complex gauss_sum_direct(int k, std::int64_t a, std::int64_t q);

// G_k(b/q) for every numerator b in [0, q), coprime or not (the generalized
// singular series needs G at c_i a / q). One histogram serves all b.
std::vector<Complex> gauss_sum_all(int k, std::int64_t q);

struct HuaMoment {
  double value = 0.0;        // int_0^1 |f_X|^(k(k+1))
  std::int64_t samples = 0;  // equispaced sample count used
  std::int64_t threshold = 0;  // minimum admissible sample count
};

// Exact k(k+1)-th moment of |f_X|: the integrand is a trigonometric
// polynomial of degree m X^k with m = k(k+1)/2, so averaging M > m X^k
// equispaced samples gives the integral up to roundoff. M defaults to the
// threshold + 1; any admissible M gives the same value.
HuaMoment hua_moment(int k, std::int64_t X,
                     std::optional<std::int64_t> M = std::nullopt);

enum class BoundName { weyl_minor, gauss_decay, hua_moment, v_decay };

std::string bound_name_string(BoundName name);

// Measured supremum of (quantity) / (bound shape with the constant removed)
// over a parameter grid. Records where the supremum happened; never claims
// the paper-side constants.
struct BoundCheckReport {
  BoundName bound = BoundName::gauss_decay;
  std::size_t gridSize = 0;
  double worstRatio = 0.0;
  std::map<std::string, double> worstWitness;  // named fields of the argmax point
  std::optional<double> fittedExponent;        // log-log slope where meaningful
};

struct WeylMinorGrid {
  int k = 2;
  std::int64_t X = 64;
  double alpha = 0.25;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
};

struct GaussDecayGrid {
  int k = 2;
  std::int64_t qMax = 50;
};

struct HuaMomentGrid {
  int k = 2;
  std::vector<std::int64_t> Xs = {16, 32, 64, 128};
};

struct VDecayGrid {
  int k = 2;
  std::int64_t X = 100;
  std::vector<double> thetas;
  double tol = 1e-10;
};

// |f_X(xi)| vs X^(1 - alpha sigma(k)) on uniformly sampled minor-arc points.
BoundCheckReport measure_bound(const WeylMinorGrid& grid);
// |G(a/q)| vs q^(-sigma(k)) over all reduced a/q with q <= qMax.
BoundCheckReport measure_bound(const GaussDecayGrid& grid);
// moment growth vs N^(k^2): consecutive-X ratios and the fitted slope.
BoundCheckReport measure_bound(const HuaMomentGrid& grid);
// |v(theta)| vs X (1 + X^k |theta|)^(-1/k).
BoundCheckReport measure_bound(const VDecayGrid& grid);

}  // namespace waring
