#include "frameq/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace frameq {

PhaseSpaceFunction::PhaseSpaceFunction(HilbertSpace space, CMatrix values)
    : space_(space), values_(std::move(values)) {
  if (values_.rows() != space_.dim() || values_.cols() != space_.dim()) {
    throw FrameError(ErrorKind::dimension_mismatch, "phase-space grid shape does not match dimension");
  }
}

PhaseSpaceFunction PhaseSpaceFunction::constant(const HilbertSpace& space, Complex value) {
  return {space, CMatrix::Constant(space.dim(), space.dim(), value)};
}

PhaseSpaceFunction PhaseSpaceFunction::delta(const HilbertSpace& space, long long m, long long l, double height) {
  CMatrix v = CMatrix::Zero(space.dim(), space.dim());
  v(space.slot(m), space.slot(l)) = height;
  return {space, std::move(v)};
}

PhaseSpaceFunction PhaseSpaceFunction::from(const HilbertSpace& space,
                                            const std::function<Complex(int, int)>& fn) {
  CMatrix v(space.dim(), space.dim());
  for (int n : space.indices())
    for (int k : space.indices()) v(space.slot(n), space.slot(k)) = fn(n, k);
  return {space, std::move(v)};
}

bool PhaseSpaceFunction::is_real(double tol) const {
  return values_.imag().cwiseAbs().maxCoeff() <= tol;
}

bool PhaseSpaceFunction::is_nonnegative(double tol) const {
  return is_real(tol) && values_.real().minCoeff() >= -tol;
}

std::size_t PhaseSpaceFunction::support_size(double tol) const {
  return static_cast<std::size_t>((values_.cwiseAbs().array() > tol).count());
}

PhaseSpaceFunction PhaseSpaceFunction::reindexed(
    const std::function<std::pair<long long, long long>(int, int)>& remap) const {
  return from(space_, [&](int n, int k) {
    const auto [a, b] = remap(n, k);
    return (*this)(a, b);
  });
}

PhaseSpaceFunction PhaseSpaceFunction::operator+(const PhaseSpaceFunction& other) const {
  require_same_space(space_, other.space_, "PhaseSpaceFunction sum");
  return {space_, values_ + other.values_};
}

PhaseSpaceFunction operator*(Complex c, const PhaseSpaceFunction& f) { return {f.space_, c * f.values_}; }

Operator quantize(const CoherentFrame& frame, const PhaseSpaceFunction& f) {
  require_same_space(frame.space(), f.space(), "quantize");
  const int d = frame.dim();
  // Row-major flattening of the grid matches the frame's column labels.
  CVector weights(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) weights(i * d + j) = f.values()(i, j);
  const CMatrix& v = frame.states();
  CMatrix out = v * weights.asDiagonal() * v.adjoint();
  out /= static_cast<double>(d);
  return {frame.space(), std::move(out)};
}

Complex quantize_trace(const PhaseSpaceFunction& f) { return f.total() / static_cast<double>(f.space().dim()); }

PhaseSpaceFunction harmonic_function(const HilbertSpace& space) {
  return PhaseSpaceFunction::from(space, [](int n, int k) { return Complex(0.5 * (n * n + k * k), 0.0); });
}

Operator harmonic_operator(const CoherentFrame& frame) {
  return quantize(frame, harmonic_function(frame.space()));
}

int sign_alternations(const CVector& psi, double zero_tol) {
  int count = 0;
  int previous = 0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const double x = psi(i).real();
    if (std::abs(psi(i)) < zero_tol) continue;
    const int sign = x > 0.0 ? 1 : -1;
    if (previous != 0 && sign != previous) ++count;
    previous = sign;
  }
  return count;
}

OrderedEigenbasis order_by_sign_alternations(const Operator& op, double tol) {
  if (op.hermitian_defect() >= tol) {
    throw FrameError(ErrorKind::invalid_argument, "sign-alternation ordering needs a Hermitian operator");
  }
  if (op.matrix.imag().norm() >= tol) {
    throw FrameError(ErrorKind::complex_values, "sign-alternation ordering needs a real matrix");
  }
  const RMatrix real = 0.5 * (op.matrix.real() + op.matrix.real().transpose());
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(real);
  if (solver.info() != Eigen::Success) {
    throw FrameError(ErrorKind::invariant_violation, "eigen-decomposition did not converge");
  }
  const int d = op.space.dim();
  constexpr double kZero = 1e-8;

  struct Level {
    Eigen::VectorXd vec;
    double value;
    int count;
  };
  std::vector<Level> levels;
  levels.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXd v = solver.eigenvectors().col(i);
    for (int j = 0; j < d; ++j) {
      if (std::abs(v(j)) > kZero) {
        if (v(j) < 0.0) v = -v;
        break;
      }
    }
    const int count = sign_alternations(v.cast<Complex>(), kZero);
    levels.push_back({std::move(v), solver.eigenvalues()(i), count});
  }
  std::stable_sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return a.count < b.count; });
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].count == levels[i - 1].count) {
      std::ostringstream msg;
      msg << "ordering failure: eigenvalues " << levels[i - 1].value << " and " << levels[i].value
          << " both have " << levels[i].count << " sign alternations";
      throw FrameError(ErrorKind::ordering_failure, msg.str());
    }
  }

  OrderedEigenbasis out{op.space, {}, {}, {}};
  for (const Level& level : levels) {
    out.vectors.emplace_back(op.space, level.vec.cast<Complex>());
    out.eigenvalues.push_back(level.value);
    out.alternation_counts.push_back(level.count);
  }
  return out;
}

Operator frac_fourier(const OrderedEigenbasis& basis, double alpha) {
  const int d = basis.space.dim();
  CMatrix out = CMatrix::Zero(d, d);
  for (std::size_t n = 0; n < basis.vectors.size(); ++n) {
    const Complex phase = std::polar(1.0, -kPi * static_cast<double>(n) * alpha / 2.0);
    const CVector& v = basis.vectors[n].amplitudes;
    out += phase * (v * v.adjoint());
  }
  return {basis.space, std::move(out)};
}

std::vector<FourierLevelReport> fourier_eigen_report(const OrderedEigenbasis& basis) {
  static const Complex kPowers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  const CMatrix f = dft(basis.space).matrix;
  std::vector<FourierLevelReport> out;
  for (std::size_t n = 0; n < basis.vectors.size(); ++n) {
    const CVector& v = basis.vectors[n].amplitudes;
    const CVector fv = f * v;
    FourierLevelReport rep{static_cast<int>(n), 0, std::numeric_limits<double>::infinity(), 0.0};
    for (int p = 0; p < 4; ++p) {
      const double r = (fv - kPowers[p] * v).norm();
      if (r < rep.best_residual) {
        rep.best_residual = r;
        rep.best_power = p;
      }
    }
    rep.predicted_residual = (fv - kPowers[n % 4] * v).norm();
    out.push_back(rep);
  }
  return out;
}

Operator harper_operator(const HilbertSpace& space) {
  const int d = space.dim();
  CMatrix h = CMatrix::Zero(d, d);
  for (int n : space.indices()) {
    h(space.slot(n), space.slot(n)) += 2.0 * std::cos(2.0 * kPi * n / d);
    h(space.slot(n), space.slot(n - 1)) += 1.0;
    h(space.slot(n), space.slot(n + 1)) += 1.0;
  }
  return {space, std::move(h)};
}

StateVector hermite_gauss_samples(const HilbertSpace& space, int level) {
  const int d = space.dim();
  if (level < 0 || level >= d) {
    throw FrameError(ErrorKind::invalid_argument,
                     "Hermite-Gauss level must lie in [0, d-1], got " + std::to_string(level));
  }
  const double scale = std::sqrt(2.0 * kPi / d);
  CVector out(d);
  for (int q : space.indices()) {
    // H_n by the physicists' three-term recurrence.
    const double x = q * scale;
    double h_prev = 1.0;
    double h = 2.0 * x;
    if (level == 0) h = 1.0;
    for (int j = 1; j < level; ++j) {
      const double next = 2.0 * x * h - 2.0 * j * h_prev;
      h_prev = h;
      h = next;
    }
    out(space.slot(q)) = h * std::exp(-kPi * q * q / d);
  }
  out /= out.norm();
  return {space, std::move(out)};
}

}  // namespace frameq
