#include "frameq/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace frameq {

namespace {

void validate_density_matrix(const Operator& op, double tol) {
  const double herm = op.hermitian_defect();
  if (herm >= tol) {
    std::ostringstream msg;
    msg << "density operator is not Hermitian (defect " << herm << ")";
    throw FrameError(ErrorKind::invariant_violation, msg.str());
  }
  const Complex tr = op.trace();
  if (std::abs(tr - 1.0) >= tol) {
    std::ostringstream msg;
    msg << "density operator trace is " << tr << ", expected 1";
    throw FrameError(ErrorKind::invariant_violation, msg.str());
  }
  const double lo = op.min_eigenvalue();
  if (lo < -tol) {
    std::ostringstream msg;
    msg << "density operator has negative eigenvalue " << lo;
    throw FrameError(ErrorKind::invariant_violation, msg.str());
  }
}

CovariantImage finish_covariance(const CoherentFrame& frame, const CMatrix& transformed,
                                 const PhaseSpaceFunction& g, double tol, const char* what) {
  DensityOperator rho_g = density_from_function(frame, g, tol);
  const double residual = frobenius(transformed - rho_g.op().matrix);
  if (residual >= tol) {
    std::ostringstream msg;
    msg << what << ": covariance residual " << residual << " exceeds " << tol;
    throw FrameError(ErrorKind::invariant_violation, msg.str());
  }
  return {std::move(rho_g), g, residual};
}

}  // namespace

DensityOperator DensityOperator::from_operator(Operator op, double tol) {
  validate_density_matrix(op, tol);
  return DensityOperator(std::move(op), std::nullopt);
}

const PhaseSpaceFunction& DensityOperator::require_source(const char* what) const {
  if (!source_) {
    throw FrameError(ErrorKind::missing_source,
                     std::string(what) + " needs a density operator built from a phase-space function");
  }
  return *source_;
}

Eigen::VectorXd DensityOperator::spectrum(double tol) const {
  Eigen::VectorXd ev = op_.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) < 0.0 && ev(i) > -tol) ev(i) = 0.0;
  return ev;
}

void validate_state_function(const PhaseSpaceFunction& f, double total_tol) {
  const double d = f.space().dim();
  if (!f.is_real()) {
    throw FrameError(ErrorKind::complex_values, "state function must be real-valued");
  }
  const RMatrix v = f.values().real();
  for (int n : f.space().indices()) {
    for (int k : f.space().indices()) {
      const double x = v(f.space().slot(n), f.space().slot(k));
      if (x < 0.0) {
        std::ostringstream msg;
        msg << "state function has negative entry " << x << " at (" << n << "," << k << ")";
        throw FrameError(ErrorKind::negative_entry, msg.str());
      }
      if (x > d) {
        std::ostringstream msg;
        msg << "state function entry " << x << " at (" << n << "," << k << ") exceeds d = " << d;
        throw FrameError(ErrorKind::entry_above_bound, msg.str());
      }
    }
  }
  const double total = v.sum();
  if (std::abs(total - d) > total_tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state function sums to " << total << ", expected d = " << d;
    throw FrameError(ErrorKind::wrong_total, msg.str());
  }
}

DensityOperator density_from_function(const CoherentFrame& frame, const PhaseSpaceFunction& f, double tol) {
  require_same_space(frame.space(), f.space(), "density_from_function");
  validate_state_function(f);
  Operator op = quantize(frame, f);
  validate_density_matrix(op, tol);
  return DensityOperator(std::move(op), f);
}

double purity(const DensityOperator& rho) {
  const CMatrix& m = rho.op().matrix;
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return (m * m).trace().real();
}

double purity_from_source(const CoherentFrame& frame, const DensityOperator& rho) {
  const PhaseSpaceFunction& f = rho.require_source("purity_from_source");
  const int d = frame.dim();
  const CMatrix gram = frame.states().adjoint() * frame.states();
  Eigen::VectorXd w(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) w(i * d + j) = f.values()(i, j).real();
  const RMatrix overlap2 = gram.cwiseAbs2();
  return w.dot(overlap2 * w) / (static_cast<double>(d) * d);
}

Complex expectation(const CoherentFrame& frame, const DensityOperator& rho, const Operator& a) {
  const PhaseSpaceFunction& f = rho.require_source("expectation");
  require_same_space(frame.space(), a.space, "expectation");
  const HilbertSpace& space = frame.space();
  Complex sum = 0.0;
  for (int n : space.indices()) {
    for (int k : space.indices()) {
      const auto v = frame.states().col(frame.label(n, k));
      sum += f(n, k) * v.dot(a.matrix * v);
    }
  }
  return sum / static_cast<double>(space.dim());
}

Complex trace_expectation(const DensityOperator& rho, const Operator& a) {
  require_same_space(rho.space(), a.space, "trace_expectation");
  return (a.matrix * rho.op().matrix).trace();
}

CovariantImage fourier_transform_density(const CoherentFrame& frame, const DensityOperator& rho, double tol) {
  const PhaseSpaceFunction& f = rho.require_source("fourier_transform_density");
  const CMatrix fm = dft(frame.space()).matrix;
  const CMatrix transformed = fm * rho.op().matrix * fm.adjoint();
  const PhaseSpaceFunction g = f.reindexed([](int n, int k) { return std::pair<long long, long long>{-k, n}; });
  return finish_covariance(frame, transformed, g, tol, "fourier_transform_density");
}

CovariantImage displace_density(const CoherentFrame& frame, const DensityOperator& rho, long long m,
                                long long l, double tol) {
  const PhaseSpaceFunction& f = rho.require_source("displace_density");
  const CMatrix dm = displacement(frame.space(), m, l).matrix;
  const CMatrix transformed = dm * rho.op().matrix * dm.adjoint();
  const PhaseSpaceFunction g =
      f.reindexed([m, l](int n, int k) { return std::pair<long long, long long>{n - m, k - l}; });
  return finish_covariance(frame, transformed, g, tol, "displace_density");
}

CovariantImage transpose_density(const CoherentFrame& frame, const DensityOperator& rho, double tol) {
  const PhaseSpaceFunction& f = rho.require_source("transpose_density");
  const CMatrix transformed = rho.op().matrix.transpose();
  const PhaseSpaceFunction g = f.reindexed([](int n, int k) { return std::pair<long long, long long>{n, -k}; });
  return finish_covariance(frame, transformed, g, tol, "transpose_density");
}

CovariantImage parity_density(const CoherentFrame& frame, const DensityOperator& rho, double tol) {
  const PhaseSpaceFunction& f = rho.require_source("parity_density");
  const CMatrix p = parity_op(frame.space()).matrix;
  const CMatrix transformed = p * rho.op().matrix * p;
  const PhaseSpaceFunction g = f.reindexed([](int n, int k) { return std::pair<long long, long long>{-n, -k}; });
  return finish_covariance(frame, transformed, g, tol, "parity_density");
}

DensityOperator convex_combine(const CoherentFrame& frame, double lambda, const DensityOperator& rho_f,
                               const DensityOperator& rho_g) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw FrameError(ErrorKind::invalid_argument, "convex weight must lie in [0, 1]");
  }
  const PhaseSpaceFunction& f = rho_f.require_source("convex_combine");
  const PhaseSpaceFunction& g = rho_g.require_source("convex_combine");
  require_same_space(f.space(), g.space(), "convex_combine");
  const PhaseSpaceFunction h = Complex(1.0 - lambda) * f + Complex(lambda) * g;
  return density_from_function(frame, h);
}

WignerGrid wigner(const Operator& rho) {
  const HilbertSpace& space = rho.space;
  const int d = space.dim();
  RMatrix values(d, d);
  double max_imag = 0.0;
  for (int n : space.indices()) {
    for (int k : space.indices()) {
      Complex sum = 0.0;
      for (int m : space.indices()) {
        // e^{-4 pi i k m/d}, exponent reduced mod d.
        const long long e = ((-2LL * k * m) % d + d) % d;
        sum += std::polar(1.0, 2.0 * kPi * static_cast<double>(e) / d) * rho(n + m, n - m);
      }
      sum /= static_cast<double>(d);
      values(space.slot(n), space.slot(k)) = sum.real();
      max_imag = std::max(max_imag, std::abs(sum.imag()));
    }
  }
  return {space, std::move(values), max_imag};
}

WignerGrid wigner_theta_form(const DensityOperator& rho, int theta_window) {
  if (theta_window < 1) {
    throw FrameError(ErrorKind::invalid_argument, "theta_window must be at least 1");
  }
  const PhaseSpaceFunction& f = rho.require_source("wigner_theta_form");
  const HilbertSpace& space = rho.space();
  const int d = space.dim();
  const int width = 2 * theta_window + 1;

  // gauss(slot(x), alpha + window) = e^{-2pi/d (x + alpha d/2)^2} for centered x.
  RMatrix gauss(d, width);
  for (int x : space.indices()) {
    for (int a = -theta_window; a <= theta_window; ++a) {
      const double y = x + 0.5 * a * d;
      gauss(space.slot(x), a + theta_window) = std::exp(-2.0 * kPi / d * y * y);
    }
  }
  RMatrix sign(width, width);
  for (int a = -theta_window; a <= theta_window; ++a)
    for (int b = -theta_window; b <= theta_window; ++b)
      sign(a + theta_window, b + theta_window) = ((a * b) % 2 == 0) ? 1.0 : -1.0;
  // kernel(x, y) = sum_{alpha,beta} (-1)^{alpha beta} gauss(x, alpha) gauss(y, beta).
  const RMatrix kernel = gauss * sign * gauss.transpose();

  const RMatrix fr = f.values().real();
  RMatrix values = RMatrix::Zero(d, d);
  for (int m : space.indices()) {
    for (int l : space.indices()) {
      double sum = 0.0;
      for (int n : space.indices())
        for (int k : space.indices())
          sum += fr(space.slot(n), space.slot(k)) * kernel(space.slot(m - n), space.slot(l - k));
      values(space.slot(m), space.slot(l)) = sum;
    }
  }
  values /= values.sum();
  return {space, std::move(values), 0.0};
}

}  // namespace frameq
