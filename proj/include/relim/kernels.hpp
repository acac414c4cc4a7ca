#ifndef RELIM_KERNELS_HPP
#define RELIM_KERNELS_HPP

#include <cstdint>

#include "relim/structure.hpp"

namespace relim {

// Exact counting kernels behind the density functions. The unqualified
// versions are OpenMP-parallel over a rank space; relim::serial holds plain
// loop / backtracking implementations used as reference in tests and as the
// baseline in the benchmark. Both sides must return identical counts.

/// ‖M‖-subsets A of [‖N‖] with N|_A isomorphic to M.
std::uint64_t count_induced_copies(const Structure& m, const Structure& n);

/// Maps [‖M‖] -> [‖N‖] preserving all relations forward (out of ‖N‖^‖M‖).
std::uint64_t count_homomorphisms(const Structure& m, const Structure& n);

/// Injective maps preserving all relations forward.
std::uint64_t count_injective_homomorphisms(const Structure& m, const Structure& n);

/// Injective maps preserving relation patterns in both directions.
std::uint64_t count_embeddings(const Structure& m, const Structure& n);

namespace serial {
std::uint64_t count_induced_copies(const Structure& m, const Structure& n);
std::uint64_t count_homomorphisms(const Structure& m, const Structure& n);
std::uint64_t count_injective_homomorphisms(const Structure& m, const Structure& n);
std::uint64_t count_embeddings(const Structure& m, const Structure& n);
} // namespace serial

} // namespace relim

#endif
