#ifndef RELIM_SEED_HPP
#define RELIM_SEED_HPP

#include <vector>

#include "relim/subset_index.hpp"

namespace relim {

/// One value in [0,1] per indexed subset of the universe. Tuples that touch
/// the same set of elements see the same value; this is the entire source of
/// exchangeability in the sampling constructions.
class SeedTuple {
public:
    SeedTuple(SubsetIndex index, std::vector<double> values);

    const SubsetIndex& index() const { return index_; }
    double value_at(std::size_t pos) const { return values_[pos]; }
    double value_for_mask(std::uint64_t mask) const { return values_[index_.position(mask)]; }
    const std::vector<double>& values() const { return values_; }

private:
    SubsetIndex index_;
    std::vector<double> values_;
};

/// Independent uniform [0,1) draws, one per nonempty subset of [m] of size
/// <= cap. Each value is a pure function of (seed, subset), so the tuple is
/// reproducible and independent of enumeration order.
SeedTuple sample_seed(int m, int cap, std::uint64_t seed);

/// The same draw for a single subset, without materializing the whole tuple.
double seed_value(std::uint64_t seed, std::uint64_t subset_mask);

} // namespace relim

#endif
