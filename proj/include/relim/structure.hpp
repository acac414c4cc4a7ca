#ifndef RELIM_STRUCTURE_HPP
#define RELIM_STRUCTURE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "relim/signature.hpp"

namespace relim {

using Tuple = std::vector<int>;
using TupleSet = std::vector<Tuple>; // kept sorted lexicographically, no duplicates

/// A finite structure over universe [m] = {1..m}: one tuple set per relation
/// symbol. Immutable after construction; relation sets are canonically sorted.
class Structure {
public:
    Structure(Signature sig, int size, std::vector<TupleSet> relations);

    static Structure empty(Signature sig, int size);

    const Signature& sig() const { return sig_; }
    int size() const { return size_; }
    const TupleSet& relation(int i) const { return relations_[static_cast<std::size_t>(i)]; }
    const std::vector<TupleSet>& relations() const { return relations_; }

    bool has_tuple(int i, std::span<const int> tuple) const;
    std::size_t total_tuples() const;

    bool operator==(const Structure&) const = default;

private:
    Signature sig_;
    int size_ = 0;
    std::vector<TupleSet> relations_;
};

/// Substructure induced on a subset of the universe, relabeled to [|A|] by
/// the increasing enumeration of A. A must be a nonempty subset of [size].
Structure induced_substructure(const Structure& n, const std::vector<int>& subset);

/// Rename universe elements: perm[old-1] = new, a bijection on [size].
Structure relabel(const Structure& n, const std::vector<int>& perm);

/// f maps [‖M‖] -> [‖N‖] as f[j-1]; preserves every relation forward.
bool is_homomorphism(const std::vector<int>& f, const Structure& m, const Structure& n);

/// Injective and relation-pattern preserving in both directions.
bool is_embedding(const std::vector<int>& f, const Structure& m, const Structure& n);

/// Backtracking search over bijections with profile pruning; equals the
/// exhaustive answer.
bool is_isomorphic(const Structure& m, const Structure& n);

/// Number of automorphisms, by pruned backtracking. Throws ResourceError if
/// the search tree exceeds the enumeration budget.
std::uint64_t automorphism_count(const Structure& m);

} // namespace relim

#endif
