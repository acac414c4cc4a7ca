#ifndef RELIM_CATALOG_HPP
#define RELIM_CATALOG_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "relim/limit.hpp"
#include "relim/rational.hpp"
#include "relim/structure.hpp"

namespace relim {

/// Isomorphism-invariant key: the lexicographically least relation bitstring
/// over all relabelings of the universe.
std::string canonical_key(const Structure& s);

/// One representative per isomorphism class of structures on [k], in a
/// deterministic order. Throws ResourceError when the labeled enumeration
/// (2^total tuple slots) is out of reach.
std::vector<Structure> isomorphism_types(const Signature& sig, int k);

/// Random structure on [m]: every tuple slot is filled independently with
/// the given probability. Deterministic in the seed.
Structure random_structure(const Signature& sig, int m, std::uint64_t seed, double density = 0.5);

/// Fixed catalog of the size-k isomorphism types with constant-time lookup
/// of the type of a k-element structure.
class TypeCatalog {
public:
    TypeCatalog(Signature sig, int k);

    const std::vector<Structure>& types() const { return types_; }
    int pattern_size() const { return k_; }

    /// Index of the type of s (‖s‖ must equal k).
    int index_of(const Structure& s) const;

private:
    Signature sig_;
    int k_ = 0;
    std::vector<Structure> types_;
    std::unordered_map<std::string, int> by_key_;
};

/// Exact limit densities next to sampled induced-subset frequencies for
/// every size-k type: `empirical[i]` is the mean over `trials` samples of
/// size m of the fraction of k-subsets inducing type i, kept as an exact
/// count ratio. Sampling uses one independent stream per trial.
struct ConvergenceTable {
    int pattern_size = 0;
    int sample_size = 0;
    std::uint64_t trials = 0;
    std::vector<Structure> types;
    std::vector<Rational> exact;
    std::vector<Rational> empirical;
};

ConvergenceTable convergence_table(const StepLimit& f, int pattern_size, int sample_size,
                                   std::uint64_t trials, std::uint64_t seed);

} // namespace relim

#endif
