#pragma once
// Reference implementations used only by the tests. Each one is written from
// the defining formula with plain loops, sharing no code with the library.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double pi = 3.14159265358979323846;

inline int wrap(long long x, int d) { return static_cast<int>(((x % d) + d) % d); }
// Slot of centered index n in a space of dimension d.
inline int slot(long long n, int d) { return wrap(n + (d - 1) / 2, d); }
inline int centered(int slot, int d) { return slot - (d - 1) / 2; }

// Periodized Gaussian with a fixed window |alpha| <= 10.
inline double theta(int d, double kappa, long long n) {
  double sum = 0.0;
  for (int a = -10; a <= 10; ++a) {
    const double x = static_cast<double>(n) + a * d;
    sum += std::exp(-kappa * pi * x * x / d);
  }
  return sum;
}

inline Vec theta_vector(int d, double kappa) {
  Vec v(d);
  for (int i = 0; i < d; ++i) v(i) = theta(d, kappa, centered(i, d));
  return v;
}

inline Mat dft(int d) {
  Mat f(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      f(r, c) = std::polar(1.0 / std::sqrt(double(d)), -2.0 * pi * centered(r, d) * centered(c, d) / d);
  return f;
}

inline Mat position(int d) {
  Mat q = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) q(i, i) = centered(i, d);
  return q;
}

// D(n,k) = e^{-i pi nk/d} exp(2 pi i k q/d) exp(-2 pi i n p/d) via matrix exponentials.
inline Mat displacement(int d, int n, int k) {
  const Mat f = dft(d);
  const Mat q = position(d);
  const Mat p = f.adjoint() * q * f;
  const cd i(0.0, 1.0);
  const Mat a = (i * (2.0 * pi * k / d) * q).exp();
  const Mat b = (-i * (2.0 * pi * n / d) * p).exp();
  return std::polar(1.0, -pi * n * k / d) * a * b;
}

inline Vec vacuum(int d) {
  Vec g = theta_vector(d, 1.0);
  return g / g.norm();
}

inline Vec coherent(int d, int n, int k) { return displacement(d, n, k) * vacuum(d); }

// (1/d) sum f(n,k) |n;k><n;k| with f indexed by slots.
inline Mat quantize(int d, const Mat& f) {
  Mat out = Mat::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Vec c = coherent(d, centered(a, d), centered(b, d));
      out += f(a, b) * c * c.adjoint();
    }
  return out / double(d);
}

// W(n,k) = (1/d) sum_m e^{-4 pi i k m/d} rho(n+m, n-m), slots in and out.
inline Mat wigner(const Mat& rho) {
  const int d = static_cast<int>(rho.rows());
  Mat w = Mat::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int n = centered(a, d);
      const int k = centered(b, d);
      cd sum = 0.0;
      for (int m = -(d - 1) / 2; m <= (d - 1) / 2; ++m)
        sum += std::polar(1.0, -4.0 * pi * k * m / d) * rho(slot(n + m, d), slot(n - m, d));
      w(a, b) = sum / double(d);
    }
  return w;
}

// Index-contraction partial traces for A (slow) (x) B (fast).
inline Mat trace_out_a(const Mat& rho, int da, int db) {
  Mat out = Mat::Zero(db, db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int l = 0; l < db; ++l) out(j, l) += rho(i * db + j, i * db + l);
  return out;
}

inline Mat trace_out_b(const Mat& rho, int da, int db) {
  Mat out = Mat::Zero(da, da);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k)
      for (int j = 0; j < db; ++j) out(i, k) += rho(i * db + j, k * db + j);
  return out;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace oracle
