#pragma once

namespace waring {

// log Gamma(x) for x > 0 via a Lanczos approximation (g = 7, 9 terms),
// accurate to ~15 significant digits on the domain this project uses.
// Kept separate from std::lgamma so the two can cross-check each other.
double log_gamma(double x);

// Gamma(x) = exp(log_gamma(x)); overflows to +inf past x ~ 171.6.
double gamma_fn(double x);

}  // namespace waring
