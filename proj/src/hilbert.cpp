#include "frameq/hilbert.hpp"

#include <cmath>
#include <string>

namespace frameq {

HilbertSpace::HilbertSpace(int s) : s_(s) {
  if (s < 0) {
    throw FrameError(ErrorKind::invalid_argument,
                     "half-range s must be nonnegative, got " + std::to_string(s));
  }
}

HilbertSpace HilbertSpace::from_dim(int d) {
  if (d < 1 || d % 2 == 0) {
    throw FrameError(ErrorKind::invalid_argument,
                     "dimension must be odd and positive, got " + std::to_string(d));
  }
  return HilbertSpace((d - 1) / 2);
}

int HilbertSpace::center_mod(long long n) const noexcept {
  const long long d = dim();
  long long r = (n + s_) % d;
  if (r < 0) r += d;
  return static_cast<int>(r) - s_;
}

std::vector<int> HilbertSpace::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (int n = -s_; n <= s_; ++n) out.push_back(n);
  return out;
}

HilbertSpace make_space(int s) { return HilbertSpace(s); }

int center_mod(long long n, const HilbertSpace& space) noexcept { return space.center_mod(n); }

void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* what) {
  if (!(a == b)) {
    throw FrameError(ErrorKind::dimension_mismatch,
                     std::string(what) + ": dimension " + std::to_string(a.dim()) +
                         " does not match " + std::to_string(b.dim()));
  }
}

StateVector::StateVector(HilbertSpace sp, CVector amp) : space(sp), amplitudes(std::move(amp)) {
  if (amplitudes.size() != space.dim()) {
    throw FrameError(ErrorKind::dimension_mismatch, "state vector length does not match dimension");
  }
}

bool StateVector::is_normalized(double tol) const { return std::abs(amplitudes.squaredNorm() - 1.0) < tol; }

Operator::Operator(HilbertSpace sp, CMatrix m) : space(sp), matrix(std::move(m)) {
  if (matrix.rows() != space.dim() || matrix.cols() != space.dim()) {
    throw FrameError(ErrorKind::dimension_mismatch, "operator shape does not match dimension");
  }
}

StateVector Operator::apply(const StateVector& psi) const {
  require_same_space(space, psi.space, "Operator::apply");
  return {space, matrix * psi.amplitudes};
}

double Operator::hermitian_defect() const { return frobenius(matrix - matrix.adjoint()); }

double Operator::unitary_defect() const {
  return frobenius(matrix.adjoint() * matrix - CMatrix::Identity(space.dim(), space.dim()));
}

Eigen::VectorXd Operator::eigenvalues() const {
  const CMatrix herm = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double Operator::min_eigenvalue() const { return eigenvalues()(0); }

Operator operator*(const Operator& a, const Operator& b) {
  require_same_space(a.space, b.space, "operator product");
  return {a.space, a.matrix * b.matrix};
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_space(a.space, b.space, "operator sum");
  return {a.space, a.matrix + b.matrix};
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_space(a.space, b.space, "operator difference");
  return {a.space, a.matrix - b.matrix};
}

Operator operator*(Complex c, const Operator& a) { return {a.space, c * a.matrix}; }

double frobenius(const CMatrix& m) { return m.norm(); }

double distance(const Operator& a, const Operator& b) {
  require_same_space(a.space, b.space, "distance");
  return frobenius(a.matrix - b.matrix);
}

double distance(const StateVector& a, const StateVector& b) {
  require_same_space(a.space, b.space, "distance");
  return (a.amplitudes - b.amplitudes).norm();
}

StateVector basis_state(const HilbertSpace& space, long long m) {
  CVector v = CVector::Zero(space.dim());
  v(space.slot(m)) = 1.0;
  return {space, std::move(v)};
}

Complex inner(const StateVector& psi, const StateVector& phi) {
  require_same_space(psi.space, phi.space, "inner");
  // Eigen's dot conjugates the first argument.
  return psi.amplitudes.dot(phi.amplitudes);
}

Operator outer(const StateVector& psi, const StateVector& phi) {
  require_same_space(psi.space, phi.space, "outer");
  return {psi.space, psi.amplitudes * phi.amplitudes.adjoint()};
}

Operator projector(const StateVector& psi) { return outer(psi, psi); }

Operator identity(const HilbertSpace& space) {
  return {space, CMatrix::Identity(space.dim(), space.dim())};
}

Operator dft(const HilbertSpace& space) {
  const int d = space.dim();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  CMatrix f(d, d);
  for (int k : space.indices()) {
    for (int n : space.indices()) {
      // Reduce k*n mod d so the phase argument stays small.
      const long long kn = ((static_cast<long long>(k) * n) % d + d) % d;
      f(space.slot(k), space.slot(n)) = scale * std::polar(1.0, -2.0 * kPi * static_cast<double>(kn) / d);
    }
  }
  return {space, std::move(f)};
}

Operator position_op(const HilbertSpace& space) {
  CMatrix q = CMatrix::Zero(space.dim(), space.dim());
  for (int n : space.indices()) q(space.slot(n), space.slot(n)) = static_cast<double>(n);
  return {space, std::move(q)};
}

Operator momentum_op(const HilbertSpace& space) {
  const Operator f = dft(space);
  return {space, f.matrix.adjoint() * position_op(space).matrix * f.matrix};
}

Operator parity_op(const HilbertSpace& space) {
  CMatrix p = CMatrix::Zero(space.dim(), space.dim());
  for (int n : space.indices()) p(space.slot(-n), space.slot(n)) = 1.0;
  return {space, std::move(p)};
}

}  // namespace frameq
