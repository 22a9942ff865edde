#include "waring/ball.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "waring/loggamma.hpp"

namespace waring {

BallCount ball_count(int k, int d, std::int64_t N, const CountingOptions& options) {
  if (k < 2 || d < 1 || N < 1)
    throw std::invalid_argument("ball_count: requires k >= 2, d >= 1, N >= 1");
  const auto cells = static_cast<std::size_t>(d) * static_cast<std::size_t>(N + 1);
  if (cells > options.max_table_cells)
    throw CapacityError("ball_count: table of " + std::to_string(cells) +
                        " big integers exceeds budget");

  // signed single-coordinate indicator: weight 1 at 0, weight 2 at each |x|^k
  std::vector<std::pair<std::int64_t, std::uint32_t>> support{{0, 1u}};
  for (const auto& [pos, w] : detail::power_support(k, 1, N, N))
    support.emplace_back(pos, 2 * w);

  std::vector<BigInt> row(static_cast<std::size_t>(N + 1));
  row[0] = 1;
  BigInt bound = 1;
  const BigInt per_step = 2 * BigInt(static_cast<long>(support.size())) + 1;
  for (int j = 0; j < d; ++j) {
    bound *= per_step;
    row = detail::convolve_with_support(row, support,
                                        static_cast<std::size_t>(N + 1), bound,
                                        options);
  }

  BallCount result;
  result.k = k;
  result.d = d;
  result.N = N;
  result.latticeCount = 0;
  for (const auto& v : row) result.latticeCount += v;

  const double dk = static_cast<double>(d) / k;
  const double log_volume = d * (std::log(2.0) + log_gamma(1.0 + 1.0 / k)) -
                            log_gamma(1.0 + dk) +
                            dk * std::log(static_cast<double>(N));
  result.volume = std::exp(log_volume);

  // ratio via logs so huge lattice counts stay representable
  signed long exp2;
  const double mant = mpz_get_d_2exp(&exp2, result.latticeCount.get_mpz_t());
  const double log_count = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
  result.ratio = std::exp(log_count - log_volume);
  return result;
}

}  // namespace waring
