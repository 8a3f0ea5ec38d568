#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "frameq/error.hpp"

namespace frameq {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kPi = 3.14159265358979323846;

/// Odd-dimensional space C^d, d = 2s+1, indexed by the centered range
/// {-s, ..., s}. Storage slot i holds centered index i - s.
class HilbertSpace {
 public:
  explicit HilbertSpace(int s);
  static HilbertSpace from_dim(int d);

  int half() const noexcept { return s_; }
  int dim() const noexcept { return 2 * s_ + 1; }

  /// Representative of n mod d in {-s, ..., s}.
  int center_mod(long long n) const noexcept;
  int slot(long long n) const noexcept { return center_mod(n) + s_; }
  int index_at(int slot) const noexcept { return slot - s_; }

  /// Centered indices -s..s in ascending order.
  std::vector<int> indices() const;

  friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;

 private:
  int s_;
};

HilbertSpace make_space(int s);
int center_mod(long long n, const HilbertSpace& space) noexcept;

struct StateVector {
  HilbertSpace space;
  CVector amplitudes;

  StateVector(HilbertSpace sp, CVector amp);

  Complex operator()(long long n) const { return amplitudes(space.slot(n)); }
  double norm() const { return amplitudes.norm(); }
  bool is_normalized(double tol = kDefaultTol) const;
};

struct Operator {
  HilbertSpace space;
  CMatrix matrix;

  Operator(HilbertSpace sp, CMatrix m);

  /// Entry <m|A|n> in centered indices.
  Complex operator()(long long m, long long n) const {
    return matrix(space.slot(m), space.slot(n));
  }

  Operator adjoint() const { return {space, matrix.adjoint()}; }
  Complex trace() const { return matrix.trace(); }
  StateVector apply(const StateVector& psi) const;

  double hermitian_defect() const;
  double unitary_defect() const;
  bool is_hermitian(double tol = kDefaultTol) const { return hermitian_defect() < tol; }
  bool is_unitary(double tol = kDefaultTol) const { return unitary_defect() < tol; }
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const;
  bool is_psd(double tol = kDefaultTol) const { return min_eigenvalue() >= -tol; }
  /// Ascending eigenvalues of the Hermitian part.
  Eigen::VectorXd eigenvalues() const;
};

Operator operator*(const Operator& a, const Operator& b);
Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(Complex c, const Operator& a);

double frobenius(const CMatrix& m);
double distance(const Operator& a, const Operator& b);
double distance(const StateVector& a, const StateVector& b);

StateVector basis_state(const HilbertSpace& space, long long m);
Complex inner(const StateVector& psi, const StateVector& phi);
Operator outer(const StateVector& psi, const StateVector& phi);
Operator projector(const StateVector& psi);

Operator identity(const HilbertSpace& space);
/// Entry (k,n) = d^{-1/2} exp(-2 pi i k n / d).
Operator dft(const HilbertSpace& space);
Operator position_op(const HilbertSpace& space);
/// F^dag q F.
Operator momentum_op(const HilbertSpace& space);
/// |j> -> |-j>.
Operator parity_op(const HilbertSpace& space);

void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* what);

}  // namespace frameq
