#pragma once

#include <cstdint>
#include <vector>

#include "waring/types.hpp"

namespace waring {

// Number-theoretic transform over fixed 58..62-bit primes with CRT
// reconstruction. Backs the dense path of the counting convolutions; the
// schoolbook sparse path stays the default at small sizes.
namespace ntt {

struct Prime {
  std::uint64_t p;
  std::uint64_t root;  // primitive root mod p
};

// p - 1 divisible by 2^57, 2^56, 2^55 respectively, so transform sizes up
// to 2^55 are supported by all three.
inline constexpr Prime kPrimes[3] = {
    {4179340454199820289ULL, 3},  // 29 * 2^57 + 1
    {1945555039024054273ULL, 5},  // 27 * 2^56 + 1
    {180143985094819841ULL, 6},   // 5 * 2^55 + 1
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p);

// In-place iterative radix-2 transform; a.size() must be a power of two.
void transform(std::vector<std::uint64_t>& a, bool invert, const Prime& prime);

// out[n] = sum over (pos, w) in b of w * a[n - pos], for 0 <= n < out_len.
// `bound` must dominate every output value; the routine picks how many CRT
// primes it needs. Returns false (and leaves `out` untouched) when `bound`
// exceeds the capacity of all three primes combined.
bool convolve_truncated(const std::vector<BigInt>& a,
                        const std::vector<std::pair<std::int64_t, std::uint32_t>>& b,
                        std::size_t out_len, const BigInt& bound,
                        std::vector<BigInt>& out);

}  // namespace ntt
}  // namespace waring
