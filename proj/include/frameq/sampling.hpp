#pragma once

#include <random>

#include "frameq/composite.hpp"

namespace frameq {

/// Uniform(0,1) entries rescaled so the grid sums to d; entries stay in [0, d].
PhaseSpaceFunction random_state_function(const HilbertSpace& space, std::mt19937_64& rng);

/// Complex entries with real and imaginary parts in [-1, 1].
PhaseSpaceFunction random_complex_function(const HilbertSpace& space, std::mt19937_64& rng);

BipartitePhaseFunction random_state_function(const BipartiteSpace& space, std::mt19937_64& rng);

/// f(n,m;k,l) = g(m,l)/d_A with g a random valid B-side function. Independent
/// of the A' labels, so its A'-marginal quantizes to I/d_A.
BipartitePhaseFunction random_uniform_in_a_function(const BipartiteSpace& space, std::mt19937_64& rng);

/// Random density matrix G G^dag / tr(G G^dag) with Gaussian G.
Operator random_density_matrix(const HilbertSpace& space, std::mt19937_64& rng);

}  // namespace frameq
