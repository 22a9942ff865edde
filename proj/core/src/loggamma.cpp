#include "waring/loggamma.hpp"

#include <cmath>
#include <stdexcept>

namespace waring {

namespace {

// Lanczos g = 7, n = 9 coefficient set (Godfrey's tabulation).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
constexpr double kG = 7.0;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;  // log(2*pi)/2
constexpr double kLogPi = 1.1447298858494001741434273513531;

double lanczos_core(double x) {
  // valid for x >= 0.5
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  double t = x + kG - 0.5;
  return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: requires x > 0");
  if (x >= 0.5) return lanczos_core(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return kLogPi - std::log(std::sin(M_PI * x)) - lanczos_core(1.0 - x);
}

double gamma_fn(double x) { return std::exp(log_gamma(x)); }

}  // namespace waring
