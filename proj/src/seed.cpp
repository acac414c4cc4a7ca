#include "relim/seed.hpp"

#include "relim/errors.hpp"
#include "relim/rng.hpp"

namespace relim {

SeedTuple::SeedTuple(SubsetIndex index, std::vector<double> values)
    : index_(std::move(index)), values_(std::move(values)) {
    if (values_.size() != index_.count())
        throw DomainError("seed tuple needs one value per indexed subset");
    for (double v : values_)
        if (!(v >= 0.0 && v <= 1.0)) throw DomainError("seed value outside [0,1]");
}

double seed_value(std::uint64_t seed, std::uint64_t subset_mask) {
    return unit_double(derive(seed, subset_mask));
}

SeedTuple sample_seed(int m, int cap, std::uint64_t seed) {
    if (m < 1) throw DomainError("seed tuple requires m >= 1");
    SubsetIndex index(m, cap);
    std::vector<double> values(index.count());
    for (std::size_t pos = 0; pos < index.count(); ++pos)
        values[pos] = seed_value(seed, index.mask_at(pos));
    return SeedTuple(std::move(index), std::move(values));
}

} // namespace relim
