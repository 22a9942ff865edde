#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "waring/instance.hpp"
#include "waring/types.hpp"

namespace waring {

struct CountingOptions {
  // capacity guard for the d x (N+1) table of big integers
  std::size_t max_table_cells = 50'000'000;
  // enumeration guard for count_bruteforce: X^d must stay below this
  std::int64_t bruteforce_guard = 100'000'000;
  // schoolbook convolution is used while (row length) * (support size) per
  // dimension step stays below this; the dense NTT/CRT path takes over above
  std::int64_t ntt_threshold = 500'000'000;
};

// The convolution ladder: counts(j, n) = #{(n_1..n_j) in N^j : sum of the
// first j terms c_i n_i^k = n}, for 1 <= j <= d, 0 <= n <= N.
class RepCountTable {
 public:
  RepCountTable(WaringInstance instance, std::vector<std::vector<BigInt>> rows);

  const WaringInstance& instance() const { return instance_; }
  int k() const { return instance_.k(); }
  int d() const { return instance_.d(); }
  std::int64_t N() const { return instance_.N(); }

  // counts(j, n); zero for n outside [0, N]
  const BigInt& at(int j, std::int64_t n) const;
  // counts(d, N), the representation count the ladder was built for
  const BigInt& total() const;
  const std::vector<BigInt>& row(int j) const;

 private:
  WaringInstance instance_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[j-1] has length N+1
  static const BigInt kZero;
};

// Exact count by dynamic programming over dimension steps. The ground-truth
// oracle for every analytic object in this project.
RepCountTable count_exact(const WaringInstance& instance,
                          const CountingOptions& options = {});

// Exhaustive enumeration; independent of the DP path. Refuses when the
// enumeration guard X^d is exceeded.
BigInt count_bruteforce(const WaringInstance& instance,
                        const CountingOptions& options = {});

namespace detail {

// One dimension step: out[n] = sum over (pos, w) in support of w * in[n-pos],
// truncated to out_len entries. `bound` must dominate every output value;
// it selects the dense NTT path's CRT width when that path activates.
std::vector<BigInt> convolve_with_support(
    const std::vector<BigInt>& in,
    const std::vector<std::pair<std::int64_t, std::uint32_t>>& support,
    std::size_t out_len, const BigInt& bound, const CountingOptions& options);

// support of the single-coordinate generating function: positions c*m^k <= limit
std::vector<std::pair<std::int64_t, std::uint32_t>> power_support(
    int k, std::int64_t coeff, std::int64_t limit, std::int64_t max_base);

}  // namespace detail

}  // namespace waring
