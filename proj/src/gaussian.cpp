#include "frameq/gaussian.hpp"

#include <cmath>
#include <string>

namespace frameq {

namespace {

void require_positive_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw FrameError(ErrorKind::invalid_argument,
                     "kappa must be positive and finite, got " + std::to_string(kappa));
  }
}

}  // namespace

int theta_window(const HilbertSpace& space, const GaussianParams& params) {
  require_positive_kappa(params.kappa);
  if (!(params.truncation_tol > 0.0)) {
    throw FrameError(ErrorKind::invalid_argument, "truncation_tol must be positive");
  }
  const double d = space.dim();
  const double s = space.half();
  const double log_tol = std::log(params.truncation_tol);
  int window = 1;
  while (true) {
    const double x = window * d - s;
    if (-params.kappa * kPi * x * x / d < log_tol) break;
    ++window;
  }
  return window;
}

StateVector discrete_gaussian(const HilbertSpace& space, const GaussianParams& params) {
  const int window = theta_window(space, params);
  const double d = space.dim();
  const double rate = params.kappa * kPi / d;
  CVector out(space.dim());
  for (int n : space.indices()) {
    auto term = [&](int alpha) {
      const double x = n + alpha * d;
      return std::exp(-rate * x * x);
    };
    // Outermost pairs first; the small tail lands before the dominant term.
    double sum = 0.0;
    for (int alpha = window; alpha >= 1; --alpha) sum += term(alpha) + term(-alpha);
    sum += term(0);
    out(space.slot(n)) = sum;
  }
  return {space, std::move(out)};
}

double gaussian_fourier_residual(const HilbertSpace& space, double kappa) {
  require_positive_kappa(kappa);
  const StateVector g = discrete_gaussian(space, {kappa});
  const StateVector g_dual = discrete_gaussian(space, {1.0 / kappa});
  const CVector lhs = dft(space).matrix * g.amplitudes;
  return (lhs - g_dual.amplitudes / std::sqrt(kappa)).norm();
}

StateVector vacuum_state(const HilbertSpace& space) {
  StateVector g = discrete_gaussian(space, {1.0});
  g.amplitudes /= g.amplitudes.norm();
  return g;
}

}  // namespace frameq
