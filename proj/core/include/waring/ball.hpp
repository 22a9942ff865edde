#pragma once

#include <cstdint>

#include "waring/counting.hpp"
#include "waring/types.hpp"

namespace waring {

// Lattice points of Z^d inside the k-norm ball of radius N^(1/k), against
// the closed-form Lebesgue measure of the same ball.
struct BallCount {
  int k = 0;
  int d = 0;
  std::int64_t N = 0;
  BigInt latticeCount;  // #{x in Z^d : sum |x_j|^k <= N}
  double volume = 0.0;  // (2 Gamma(1+1/k))^d / Gamma(1+d/k) * N^(d/k)
  double ratio = 0.0;   // latticeCount / volume
};

BallCount ball_count(int k, int d, std::int64_t N,
                     const CountingOptions& options = {});

}  // namespace waring
