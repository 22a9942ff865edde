#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "waring/types.hpp"

namespace waring {

// One instance of the (generalized) problem: count d-tuples of positive
// integers with c_1 n_1^k + ... + c_d n_d^k = N. When coeffs is absent all
// c_i are 1. Immutable after construction; construction validates
// k >= 2, d >= 1, N >= 1, c_i >= 1 and gcd(c_1,...,c_d) = 1.
class WaringInstance {
 public:
  WaringInstance(int k, int d, std::int64_t N,
                 std::optional<std::vector<std::int64_t>> coeffs = std::nullopt);

  int k() const { return k_; }
  int d() const { return d_; }
  std::int64_t N() const { return N_; }
  const std::optional<std::vector<std::int64_t>>& coeffs() const { return coeffs_; }

  bool generalized() const { return coeffs_.has_value(); }

  // c_i (1-based exposure is avoided; index is 0-based), 1 when coeffs absent.
  std::int64_t coeff(int i) const {
    return coeffs_ ? (*coeffs_)[static_cast<std::size_t>(i)] : 1;
  }

  // X = floor(N^(1/k)).
  std::int64_t X() const;

  // Largest admissible value of n_i: floor((N/c_i)^(1/k)).
  std::int64_t coordinate_limit(int i) const;

 private:
  int k_;
  int d_;
  std::int64_t N_;
  std::optional<std::vector<std::int64_t>> coeffs_;
};

}  // namespace waring
