#include "waring/counting.hpp"

#include <algorithm>
#include <string>

#include "waring/ntt.hpp"
#include "waring/parallel.hpp"

namespace waring {

const BigInt RepCountTable::kZero = 0;

RepCountTable::RepCountTable(WaringInstance instance,
                             std::vector<std::vector<BigInt>> rows)
    : instance_(std::move(instance)), rows_(std::move(rows)) {}

const BigInt& RepCountTable::at(int j, std::int64_t n) const {
  if (n < 0 || n > N()) return kZero;
  return rows_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(n)];
}

const BigInt& RepCountTable::total() const { return at(d(), N()); }

const std::vector<BigInt>& RepCountTable::row(int j) const {
  return rows_[static_cast<std::size_t>(j - 1)];
}

namespace detail {

std::vector<std::pair<std::int64_t, std::uint32_t>> power_support(
    int k, std::int64_t coeff, std::int64_t limit, std::int64_t max_base) {
  std::vector<std::pair<std::int64_t, std::uint32_t>> support;
  for (std::int64_t m = 1; m <= max_base; ++m) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(k));
    p *= coeff;
    if (p > limit) break;
    support.emplace_back(p.get_si(), 1u);
  }
  return support;
}

std::vector<BigInt> convolve_with_support(
    const std::vector<BigInt>& in,
    const std::vector<std::pair<std::int64_t, std::uint32_t>>& support,
    std::size_t out_len, const BigInt& bound, const CountingOptions& options) {
  const std::int64_t work =
      static_cast<std::int64_t>(out_len) * static_cast<std::int64_t>(support.size());
  if (work > options.ntt_threshold) {
    std::vector<BigInt> out;
    if (ntt::convolve_truncated(in, support, out_len, bound, out)) return out;
    // bound exceeded the 3-prime CRT capacity; schoolbook still exact
  }
  std::vector<BigInt> out(out_len);
  parallel_for_blocks(out_len, [&](std::size_t lo, std::size_t hi) {
    for (const auto& [pos, w] : support) {
      const auto ps = static_cast<std::size_t>(pos);
      if (ps >= hi) continue;
      const std::size_t start = std::max(lo, ps);
      for (std::size_t n = start; n < hi; ++n) {
        const std::size_t src = n - ps;
        if (src >= in.size()) continue;
        if (w == 1)
          out[n] += in[src];
        else
          out[n] += w * in[src];
      }
    }
  });
  return out;
}

}  // namespace detail

RepCountTable count_exact(const WaringInstance& instance,
                          const CountingOptions& options) {
  const std::int64_t N = instance.N();
  const int d = instance.d();
  const auto cells = static_cast<std::size_t>(d) * static_cast<std::size_t>(N + 1);
  if (cells > options.max_table_cells)
    throw CapacityError("count_exact: table of " + std::to_string(cells) +
                        " big integers exceeds budget of " +
                        std::to_string(options.max_table_cells));

  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<std::size_t>(d));

  std::vector<BigInt> row(static_cast<std::size_t>(N + 1));
  auto support0 = detail::power_support(instance.k(), instance.coeff(0), N, N);
  for (const auto& [pos, w] : support0) row[static_cast<std::size_t>(pos)] = w;
  rows.push_back(row);

  BigInt bound = std::max<std::size_t>(support0.size(), 1);
  for (int j = 1; j < d; ++j) {
    auto support = detail::power_support(instance.k(), instance.coeff(j), N, N);
    bound *= std::max<std::size_t>(support.size(), 1);
    rows.push_back(detail::convolve_with_support(
        rows.back(), support, static_cast<std::size_t>(N + 1), bound, options));
  }
  return RepCountTable(instance, std::move(rows));
}

namespace {

void enumerate(const WaringInstance& inst, int depth, std::int64_t remaining,
               const std::vector<std::int64_t>& min_tail, BigInt& count) {
  const int d = inst.d();
  if (depth == d) {
    if (remaining == 0) ++count;
    return;
  }
  if (remaining < min_tail[static_cast<std::size_t>(depth)]) return;
  const std::int64_t c = inst.coeff(depth);
  for (std::int64_t m = 1;; ++m) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(inst.k()));
    p *= c;
    if (p > remaining) break;
    enumerate(inst, depth + 1, remaining - p.get_si(), min_tail, count);
  }
}

}  // namespace

BigInt count_bruteforce(const WaringInstance& instance,
                        const CountingOptions& options) {
  const std::int64_t X = instance.X();
  BigInt space;
  mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(std::max<std::int64_t>(X, 1)),
                static_cast<unsigned long>(instance.d()));
  if (space > options.bruteforce_guard)
    throw CapacityError("count_bruteforce: X^d = " + space.get_str() +
                        " exceeds enumeration guard " +
                        std::to_string(options.bruteforce_guard));

  // min_tail[i] = sum of c_j over j >= i: cheapest completion of a partial tuple
  std::vector<std::int64_t> min_tail(static_cast<std::size_t>(instance.d()) + 1, 0);
  for (int i = instance.d() - 1; i >= 0; --i)
    min_tail[static_cast<std::size_t>(i)] =
        min_tail[static_cast<std::size_t>(i) + 1] + instance.coeff(i);

  BigInt count = 0;
  enumerate(instance, 0, instance.N(), min_tail, count);
  return count;
}

}  // namespace waring
