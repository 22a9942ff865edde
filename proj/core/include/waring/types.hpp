#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace waring {

using BigInt = mpz_class;
using Complex = std::complex<double>;

// Thrown when a request would exceed the configured memory budget
// (counting tables, Fourier ladders) or an enumeration guard.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an adaptive quadrature or a p-adic stabilization loop
// exhausts its budget before reaching the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// e(z) = exp(2*pi*i*z), the paper-wide unit character.
Complex unit_phase(double z);

// floor(N^(1/k)) computed exactly for 64-bit N.
std::int64_t integer_kth_root(std::int64_t n, int k);

// sigma(k) = 1/(k(k-1)), the Weyl exponent for power k.
inline double weyl_sigma(int k) { return 1.0 / (static_cast<double>(k) * (k - 1)); }

}  // namespace waring
