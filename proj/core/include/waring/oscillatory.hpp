#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "waring/types.hpp"

namespace waring {

struct GLRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre rule of order n, computed once and cached.
const GLRule& gauss_legendre(int n);

// j_0..j_nmax at x >= 0 into out[0..nmax].
void spherical_bessel(int nmax, double x, double* out);

// v(theta) = int_0^X e(theta z^k) dz. Computed in the u = z^k variable,
// where the phase is linear: panels align with half-periods of e(theta u)
// and the integrable endpoint weight u^(1/k-1) is confined to a smooth
// first panel handled back in the z variable. Adaptive bisection against
// an embedded lower-order rule until the error estimate is below tol.
Complex v_integral(int k, std::int64_t X, double theta, double tol = 1e-10,
                   std::size_t panel_budget = 500'000);

// Filon-type evaluator for v(theta) = int_0^Z e(theta z^k) dz with a real
// upper limit Z: the amplitude u^(1/k-1) is expanded once in Legendre
// polynomials on a fixed graded panel set, after which any theta costs one
// spherical-Bessel moment sweep per panel. Serves the quadrature loops
// where v is evaluated thousands of times.
class FilonV {
 public:
  FilonV(int k, double upper_z, int degree = 12);

  Complex operator()(double theta) const;

  int k() const { return k_; }
  double upper_z() const { return upper_z_; }

 private:
  struct Panel {
    double center;
    double halfwidth;
    std::vector<double> coeff;  // Legendre coefficients of u^(1/k-1)
  };
  int k_;
  double upper_z_;
  int degree_;
  double upper_;      // Z^k
  double tail_cut_;   // panels stop here; [0, tail_cut_] handled by series
  std::vector<Panel> panels_;
};

// Adaptive integral of f over [lo, hi] where f oscillates at most
// osc_scale cycles per unit length. Panels start at half-period size and
// bisect until the embedded error estimate meets tol (absolute).
Complex integrate_oscillatory(const std::function<Complex(double)>& f,
                              double lo, double hi, double osc_scale,
                              double tol, std::size_t panel_budget = 200'000);

}  // namespace waring
