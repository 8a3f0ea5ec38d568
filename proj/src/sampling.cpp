#include "frameq/sampling.hpp"

namespace frameq {

PhaseSpaceFunction random_state_function(const HilbertSpace& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int d = space.dim();
  RMatrix v(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(i, j) = unit(rng);
  v *= d / v.sum();
  return {space, v.cast<Complex>()};
}

PhaseSpaceFunction random_complex_function(const HilbertSpace& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  const int d = space.dim();
  CMatrix v(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(i, j) = Complex(sym(rng), sym(rng));
  return {space, std::move(v)};
}

BipartitePhaseFunction random_state_function(const BipartiteSpace& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t count = static_cast<std::size_t>(space.dim()) * static_cast<std::size_t>(space.dim());
  std::vector<double> v(count);
  double total = 0.0;
  for (double& x : v) {
    x = unit(rng);
    total += x;
  }
  for (double& x : v) x *= space.dim() / total;
  return {space, std::move(v)};
}

BipartitePhaseFunction random_uniform_in_a_function(const BipartiteSpace& space, std::mt19937_64& rng) {
  const PhaseSpaceFunction uniform_a = PhaseSpaceFunction::constant(space.a, 1.0 / space.a.dim());
  return BipartitePhaseFunction::product(uniform_a, random_state_function(space.b, rng));
}

Operator random_density_matrix(const HilbertSpace& space, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const int d = space.dim();
  CMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return {space, std::move(rho)};
}

}  // namespace frameq
