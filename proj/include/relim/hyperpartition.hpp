#ifndef RELIM_HYPERPARTITION_HPP
#define RELIM_HYPERPARTITION_HPP

#include <vector>

#include "relim/limit.hpp"
#include "relim/rational.hpp"
#include "relim/seed.hpp"
#include "relim/structure.hpp"

namespace relim {

/// For each level j in [levels], an l-coloring of the j-element subsets of
/// [ground]. Storing colors on subsets (not tuples) makes the signature
/// symmetry hold by construction; tuple-level color classes are derived
/// views.
class Hyperpartition {
public:
    Hyperpartition(int ground, int levels, int colors, std::vector<std::uint8_t> color_by_subset);

    int ground() const { return index_.ground(); }
    int levels() const { return index_.cap(); }
    int colors() const { return colors_; }
    const SubsetIndex& index() const { return index_; }

    int color_of_mask(std::uint64_t mask) const {
        return color_[index_.position(mask)];
    }
    int color_of(std::span<const int> elements) const {
        return color_of_mask(SubsetIndex::mask_of(elements));
    }

    /// Number of j-element subsets with each color: [j-1][color-1].
    std::vector<std::vector<std::uint64_t>> class_sizes() const;

private:
    SubsetIndex index_; // subsets of [ground] of size <= levels
    int colors_ = 1;
    std::vector<std::uint8_t> color_;
};

/// Signature of a distinct-entry tuple: the colors of the element sets
/// {x_i : i in A} over the nonempty position subsets A. Tuples with repeated
/// entries have no cell and are rejected.
CellSignature cell_signature(const Hyperpartition& h, std::span<const int> tuple);

/// All distinct-entry tuples with the given signature, in lexicographic
/// order. The cells over all signatures partition the distinct tuples.
std::vector<Tuple> cell(const Hyperpartition& h, const CellSignature& e);

/// Smallest uniform bound on the pairwise differences of the normalized
/// tuple-level class measures: max over levels j and color pairs of
/// |j!·(|H^j_e| - |H^j_e'|)| / ground^j. Zero iff all classes at each level
/// have equal cardinality.
Rational equitability_delta(const Hyperpartition& h);

/// Color every indexed subset by the interval of its seed value.
Hyperpartition hyperpartition_from_seed(const SeedTuple& seed, int colors);

/// The structure whose coded edge sets are the unions of the hyperpartition
/// cells selected by the step limit. Matches realize on seed-derived
/// hyperpartitions.
Structure step_structure(const Hyperpartition& h, const StepLimit& f);

} // namespace relim

#endif
