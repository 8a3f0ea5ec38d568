#pragma once

#include "frameq/hilbert.hpp"

namespace frameq {

struct GaussianParams {
  double kappa = 1.0;
  /// Absolute bound on the first omitted theta-sum term.
  double truncation_tol = 1e-18;
};

/// Smallest A with exp(-kappa pi (A d - s)^2 / d) < truncation_tol; the theta
/// sum runs over |alpha| <= A.
int theta_window(const HilbertSpace& space, const GaussianParams& params);

/// Periodized Gaussian g_kappa(n) = sum_alpha exp(-kappa pi (n + alpha d)^2 / d).
/// The window is symmetric and summed in +/- pairs, so g(-n) == g(n) bitwise.
StateVector discrete_gaussian(const HilbertSpace& space, const GaussianParams& params);

/// || F g_kappa - kappa^{-1/2} g_{1/kappa} ||.
double gaussian_fourier_residual(const HilbertSpace& space, double kappa);

/// g_1 / ||g_1||.
StateVector vacuum_state(const HilbertSpace& space);

}  // namespace frameq
