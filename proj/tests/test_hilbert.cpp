#include <doctest.h>

#include "frameq/error.hpp"
#include "frameq/hilbert.hpp"
#include "oracles.hpp"

using namespace frameq;

TEST_CASE("make_space maps s to d = 2s+1") {
  CHECK(make_space(1).dim() == 3);
  CHECK(make_space(3).dim() == 7);
  CHECK(make_space(15).dim() == 31);
  CHECK(make_space(0).dim() == 1);
  CHECK_THROWS_AS(make_space(-1), FrameError);
}

TEST_CASE("from_dim rejects even and non-positive dimensions") {
  CHECK(HilbertSpace::from_dim(5).half() == 2);
  for (int d : {0, 2, 4, -3}) {
    try {
      (void)HilbertSpace::from_dim(d);
      FAIL("expected rejection of d=" << d);
    } catch (const FrameError& e) {
      CHECK(e.kind() == ErrorKind::invalid_argument);
    }
  }
}

TEST_CASE("index range is exactly -s..s") {
  const HilbertSpace sp = make_space(3);
  const std::vector<int> idx = sp.indices();
  REQUIRE(idx.size() == 7);
  CHECK(idx.front() == -3);
  CHECK(idx.back() == 3);
  for (int i = 0; i < 7; ++i) CHECK(sp.slot(idx[i]) == i);
}

TEST_CASE("center_mod") {
  const HilbertSpace d3 = HilbertSpace::from_dim(3);
  const HilbertSpace d7 = HilbertSpace::from_dim(7);
  CHECK(center_mod(4, d3) == 1);
  CHECK(center_mod(-2, d3) == 1);
  CHECK(center_mod(2, d7) == 2);
  CHECK(d7.center_mod(-4) == 3);
  CHECK(d7.center_mod(700000000003LL) == oracle::centered(oracle::slot(700000000003LL, 7), 7));
  for (long long n = -50; n <= 50; ++n) {
    const int r = d7.center_mod(n);
    CHECK(r >= -3);
    CHECK(r <= 3);
    CHECK((n - r) % 7 == 0);
  }
}

TEST_CASE("basis_state") {
  const HilbertSpace sp = make_space(1);
  CHECK(basis_state(sp, 0).amplitudes == CVector::Unit(3, 1));
  CHECK(basis_state(sp, -1).amplitudes == CVector::Unit(3, 0));
  CHECK(basis_state(sp, 4).amplitudes == CVector::Unit(3, 2));
  CHECK(basis_state(sp, 0).is_normalized());
}

TEST_CASE("inner conjugates the first slot") {
  const HilbertSpace sp = make_space(1);
  const StateVector d0 = basis_state(sp, 0);
  const StateVector d1 = basis_state(sp, 1);
  CHECK(std::abs(inner(d0, d0) - 1.0) == 0.0);
  CHECK(std::abs(inner(d0, d1)) == 0.0);
  const StateVector id0(sp, Complex(0, 1) * d0.amplitudes);
  CHECK(std::abs(inner(id0, d0) - Complex(0, -1)) == 0.0);
  try {
    (void)inner(d0, basis_state(make_space(2), 0));
    FAIL("expected dimension mismatch");
  } catch (const FrameError& e) {
    CHECK(e.kind() == ErrorKind::dimension_mismatch);
  }
}

TEST_CASE("StateVector rejects a wrong-length amplitude vector") {
  CHECK_THROWS_AS(StateVector(make_space(1), CVector::Zero(4)), FrameError);
  CHECK_THROWS_AS(Operator(make_space(1), CMatrix::Zero(3, 4)), FrameError);
}

TEST_CASE("dft matches the direct formula") {
  for (int d : {1, 3, 5, 9, 31}) {
    const HilbertSpace sp = HilbertSpace::from_dim(d);
    const Operator f = dft(sp);
    CHECK(frobenius(f.matrix - oracle::dft(d)) < 1e-12);
    CHECK((f * f.adjoint() - identity(sp)).matrix.norm() < 1e-12);
  }
  const HilbertSpace d3 = make_space(1);
  const StateVector col = dft(d3).apply(basis_state(d3, 0));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(col.amplitudes(i) - 1.0 / std::sqrt(3.0)) < 1e-15);
  const Operator f = dft(d3);
  CHECK(distance(f * f * f * f, identity(d3)) < 1e-12);
}

TEST_CASE("position, momentum and parity operators") {
  const HilbertSpace d3 = make_space(1);
  const Operator q = position_op(d3);
  CHECK(q.matrix.real() == Eigen::Vector3d(-1, 0, 1).asDiagonal().toDenseMatrix());
  CHECK(distance(q.apply(basis_state(d3, 1)), basis_state(d3, 1)) == 0.0);
  CHECK(std::abs(q.trace()) == 0.0);

  const Operator p = momentum_op(d3);
  CHECK(p.hermitian_defect() < 1e-12);
  const Eigen::VectorXd ev = p.eigenvalues();
  CHECK(ev(0) == doctest::Approx(-1).epsilon(1e-12));
  CHECK(std::abs(ev(1)) < 1e-12);
  CHECK(ev(2) == doctest::Approx(1).epsilon(1e-12));

  const HilbertSpace d5 = make_space(2);
  const oracle::Mat pm = oracle::dft(5).adjoint() * oracle::position(5) * oracle::dft(5);
  CHECK(frobenius(momentum_op(d5).matrix - pm) < 1e-12);
  CHECK(std::abs(momentum_op(d5)(0, 0)) < 1e-12);

  const Operator par = parity_op(d5);
  for (int j : d5.indices()) CHECK(distance(par.apply(basis_state(d5, j)), basis_state(d5, -j)) == 0.0);
  CHECK(distance(par * par, identity(d5)) == 0.0);
  CHECK(distance(dft(d5) * dft(d5), par) < 1e-12);
}

TEST_CASE("operator predicates") {
  const HilbertSpace sp = make_space(2);
  CHECK(identity(sp).is_hermitian());
  CHECK(identity(sp).is_unitary());
  CHECK(identity(sp).is_psd());
  CHECK_FALSE((Complex(-1.0) * identity(sp)).is_psd());
  CHECK(dft(sp).is_unitary());
  CHECK_FALSE(dft(sp).is_hermitian());
  CHECK(position_op(sp).min_eigenvalue() == doctest::Approx(-2.0));
  CHECK_THROWS_AS(identity(sp) + identity(make_space(1)), FrameError);
}
