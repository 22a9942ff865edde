#include "waring/instance.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace waring {

Complex unit_phase(double z) {
  const double two_pi = 6.283185307179586476925286766559;
  double f = z - std::floor(z);
  return {std::cos(two_pi * f), std::sin(two_pi * f)};
}

std::int64_t integer_kth_root(std::int64_t n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("integer_kth_root: n >= 0, k >= 1");
  if (n == 0) return 0;
  if (k == 1) return n;
  auto r = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(n), 1.0 / k)));
  // float estimate can be off by one either way near perfect powers
  auto pw = [k](std::int64_t b) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(k));
    return p;
  };
  while (r > 0 && pw(r) > n) --r;
  while (pw(r + 1) <= n) ++r;
  return r;
}

WaringInstance::WaringInstance(int k, int d, std::int64_t N,
                               std::optional<std::vector<std::int64_t>> coeffs)
    : k_(k), d_(d), N_(N), coeffs_(std::move(coeffs)) {
  if (k_ < 2) throw std::invalid_argument("WaringInstance: k must be >= 2");
  if (d_ < 1) throw std::invalid_argument("WaringInstance: d must be >= 1");
  if (N_ < 1) throw std::invalid_argument("WaringInstance: N must be >= 1");
  if (coeffs_) {
    if (static_cast<int>(coeffs_->size()) != d_)
      throw std::invalid_argument("WaringInstance: coeffs must have length d");
    std::int64_t g = 0;
    for (std::int64_t c : *coeffs_) {
      if (c < 1) throw std::invalid_argument("WaringInstance: coefficients must be >= 1");
      g = std::gcd(g, c);
    }
    if (g != 1)
      throw std::invalid_argument("WaringInstance: coefficients share a common factor " +
                                  std::to_string(g));
  }
}

std::int64_t WaringInstance::X() const { return integer_kth_root(N_, k_); }

std::int64_t WaringInstance::coordinate_limit(int i) const {
  return integer_kth_root(N_ / coeff(i), k_);
}

}  // namespace waring
