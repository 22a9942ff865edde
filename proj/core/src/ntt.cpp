#include "waring/ntt.hpp"

#include <algorithm>
#include <cassert>

#include "waring/parallel.hpp"

namespace waring {
namespace ntt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

void transform(std::vector<std::uint64_t>& a, bool invert, const Prime& prime) {
  const std::size_t n = a.size();
  assert((n & (n - 1)) == 0);
  const std::uint64_t p = prime.p;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = powmod(prime.root, (p - 1) / len, p);
    if (invert) w = powmod(w, p - 2, p);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t cur = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::uint64_t u = a[i + j];
        std::uint64_t v = mulmod(a[i + j + len / 2], cur, p);
        a[i + j] = u + v < p ? u + v : u + v - p;
        a[i + j + len / 2] = u >= v ? u - v : u + p - v;
        cur = mulmod(cur, w, p);
      }
    }
  }
  if (invert) {
    std::uint64_t inv_n = powmod(n % p, p - 2, p);
    for (auto& x : a) x = mulmod(x, inv_n, p);
  }
}

bool convolve_truncated(const std::vector<BigInt>& a,
                        const std::vector<std::pair<std::int64_t, std::uint32_t>>& b,
                        std::size_t out_len, const BigInt& bound,
                        std::vector<BigInt>& out) {
  // capacity: product of selected prime moduli must exceed `bound`
  int nprimes = 0;
  BigInt cap = 1;
  while (nprimes < 3 && cap <= bound) {
    cap *= BigInt(kPrimes[nprimes].p);
    ++nprimes;
  }
  if (cap <= bound) return false;

  std::int64_t max_pos = 0;
  for (const auto& [pos, w] : b) max_pos = std::max(max_pos, pos);
  const std::size_t take = std::min(a.size(), out_len);
  std::size_t need = take + static_cast<std::size_t>(max_pos) + 1;
  std::size_t m = 1;
  while (m < need) m <<= 1;

  std::vector<std::vector<std::uint64_t>> residues(
      static_cast<std::size_t>(nprimes));
  parallel_for(static_cast<std::size_t>(nprimes), [&](std::size_t pi) {
    const Prime& pr = kPrimes[pi];
    std::vector<std::uint64_t> fa(m, 0), fb(m, 0);
    for (std::size_t i = 0; i < take; ++i)
      fa[i] = mpz_fdiv_ui(a[i].get_mpz_t(), pr.p);
    for (const auto& [pos, w] : b) fb[static_cast<std::size_t>(pos)] = w % pr.p;
    transform(fa, false, pr);
    transform(fb, false, pr);
    for (std::size_t i = 0; i < m; ++i) fa[i] = mulmod(fa[i], fb[i], pr.p);
    transform(fa, true, pr);
    fa.resize(out_len);
    residues[pi] = std::move(fa);
  });

  // Garner reconstruction, incremental over the selected primes.
  std::vector<BigInt> result(out_len);
  parallel_for_blocks(out_len, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t n = lo; n < hi; ++n) {
      BigInt x(residues[0][n]);
      BigInt base(kPrimes[0].p);
      for (int pi = 1; pi < nprimes; ++pi) {
        const std::uint64_t p = kPrimes[pi].p;
        std::uint64_t xr = mpz_fdiv_ui(x.get_mpz_t(), p);
        std::uint64_t br = mpz_fdiv_ui(base.get_mpz_t(), p);
        std::uint64_t diff = residues[pi][n] >= xr
                                 ? residues[pi][n] - xr
                                 : residues[pi][n] + p - xr;
        std::uint64_t t = mulmod(diff, powmod(br, p - 2, p), p);
        x += base * BigInt(t);
        base *= BigInt(p);
      }
      result[n] = std::move(x);
    }
  });
  out = std::move(result);
  return true;
}

}  // namespace ntt
}  // namespace waring
