#ifndef RELIM_DENSITY_HPP
#define RELIM_DENSITY_HPP

#include "relim/rational.hpp"
#include "relim/structure.hpp"

namespace relim {

// Exact density calculus. All four return exact rationals in [0, 1].
// Convention: p, t0 and tind are zero when ‖N‖ < ‖M‖.

/// Probability that a uniformly random ‖M‖-subset of [‖N‖] induces a copy of M.
Density density_p(const Structure& m, const Structure& n);

/// Probability that a uniformly random map [‖M‖] -> [‖N‖] is a homomorphism.
Density density_t(const Structure& m, const Structure& n);

/// Probability that a uniformly random injection is a homomorphism.
Density density_t0(const Structure& m, const Structure& n);

/// Probability that a uniformly random injection is an embedding.
Density density_tind(const Structure& m, const Structure& n);

/// Probability that a random permutation of [‖M‖] is an automorphism;
/// equals density_tind(M, M).
Density automorphism_probability(const Structure& m);

} // namespace relim

#endif
