#ifndef RELIM_LIMIT_HPP
#define RELIM_LIMIT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "relim/coding.hpp"
#include "relim/rational.hpp"
#include "relim/seed.hpp"
#include "relim/signature.hpp"
#include "relim/structure.hpp"

namespace relim {

/// Color a in [l] with y in [(a-1)/l, a/l); the last interval is closed,
/// [(l-1)/l, 1]. Total on [0,1].
int interval_of(double y, int l);

/// One color per nonempty subset of the positions [t], in subset-enumeration
/// order (size, then lexicographic). Identifies a resolution-l hypercube in
/// the cube indexed by those subsets.
class CellSignature {
public:
    CellSignature(int t, std::vector<std::uint8_t> colors);

    int tuple_arity() const { return t_; }
    const std::vector<std::uint8_t>& colors() const { return colors_; }

    bool operator==(const CellSignature&) const = default;
    auto operator<=>(const CellSignature&) const = default;

private:
    int t_ = 0;
    std::vector<std::uint8_t> colors_; // length 2^t - 1, values 1..l
};

/// A step limit: for every (symbol, partition) key a set of selected cell
/// signatures at one shared resolution l. Acts as a sampling template for
/// random structures, and supports exact measure computations.
class StepLimit {
public:
    StepLimit(Signature sig, int resolution);

    /// Every cell selected at every key (the "complete" template).
    static StepLimit complete(Signature sig, int resolution);

    const Signature& sig() const { return sig_; }
    int resolution() const { return resolution_; }

    void select(int symbol, int partition_rank, std::vector<std::uint8_t> colors);
    void select(int symbol, const SetPartition& p, const CellSignature& cell);

    bool selected(int symbol, int partition_rank, std::span<const std::uint8_t> colors) const;

    /// Selected signatures at a key, sorted lexicographically.
    const std::vector<std::vector<std::uint8_t>>& cells(int symbol, int partition_rank) const {
        return cells_[static_cast<std::size_t>(symbol)][static_cast<std::size_t>(partition_rank)];
    }

    std::size_t total_selected() const;

    bool operator==(const StepLimit&) const = default;

private:
    Signature sig_;
    int resolution_ = 1;
    // [symbol][partition rank] -> sorted selected color vectors
    std::vector<std::vector<std::vector<std::vector<std::uint8_t>>>> cells_;
};

/// The deterministic structure on [m] computed from a seed tuple: a coded
/// edge on positions b̄ holds iff the colors of the seed values of the sets
/// {b_l : l in B} form a selected cell signature. OpenMP-parallel over
/// tuples; relim::serial::realize is the plain-loop reference.
Structure realize(const StepLimit& f, int m, const SeedTuple& seed);

/// realize at a fresh uniform seed tuple derived from `seed`.
Structure sample_structure(const StepLimit& f, int m, std::uint64_t seed);

/// Exact probability that the identity map embeds M into a sampled structure
/// of size ‖M‖: enumerates all colorings of the subset family (the value is
/// a Lebesgue measure, but membership only depends on interval colors).
/// Throws ResourceError beyond 10^8 colorings.
Density embedding_measure(const Structure& m, const StepLimit& f);

/// Probability that a sample of size ‖M‖ is isomorphic to M:
/// embedding_measure(M, F) * ‖M‖! / |Aut(M)|.
Density induced_density(const Structure& m, const StepLimit& f);

/// Monte Carlo frequency of "identity embeds M" over `trials` sampled seed
/// tuples. Counter-based streams make the result independent of thread count.
double mc_embedding_frequency(const Structure& m, const StepLimit& f,
                              std::uint64_t trials, std::uint64_t seed);

namespace serial {
Structure realize(const StepLimit& f, int m, const SeedTuple& seed);
Density embedding_measure(const Structure& m, const StepLimit& f);
double mc_embedding_frequency(const Structure& m, const StepLimit& f,
                              std::uint64_t trials, std::uint64_t seed);
} // namespace serial

} // namespace relim

#endif
