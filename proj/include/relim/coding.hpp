#ifndef RELIM_CODING_HPP
#define RELIM_CODING_HPP

#include <vector>

#include "relim/partition.hpp"
#include "relim/structure.hpp"

namespace relim {

/// One coordinate of the coded family: a relation symbol together with a
/// partition of its argument positions.
struct IndexKey {
    int symbol = 0; // 0-based index into the signature
    SetPartition partition;

    bool operator==(const IndexKey&) const = default;
};

/// The coded form of a structure: for each (symbol, partition) key, a set of
/// tuples with pairwise-distinct entries: a uniform directed hypergraph of
/// arity class_count(partition). Missing keys mean empty edge sets; full key
/// enumeration is available via keys().
class DHypFamily {
public:
    DHypFamily(Signature sig, int size);
    DHypFamily(Signature sig, int size, std::vector<std::vector<TupleSet>> edges);

    const Signature& sig() const { return sig_; }
    int size() const { return size_; }

    int partition_count_for(int symbol) const {
        return static_cast<int>(edges_[static_cast<std::size_t>(symbol)].size());
    }
    const TupleSet& edges(int symbol, int partition_rank) const {
        return edges_[static_cast<std::size_t>(symbol)][static_cast<std::size_t>(partition_rank)];
    }
    const TupleSet& edges(const IndexKey& key) const;
    void set_edges(int symbol, int partition_rank, TupleSet edges);

    /// All (symbol, partition) keys in canonical order: symbols in signature
    /// order, partitions in enumeration order.
    std::vector<IndexKey> keys() const;

    std::size_t total_edges() const;

    bool operator==(const DHypFamily&) const = default;

private:
    void validate() const;

    Signature sig_;
    int size_ = 0;
    std::vector<std::vector<TupleSet>> edges_; // [symbol][partition rank]
};

/// Split each relation by the kernel partition of its tuples and keep only
/// the deduplicated distinct-entry tuples.
DHypFamily encode(const Structure& n);

/// The unique structure coded by the family: each edge expands back to the
/// full tuple through its partition. Inverse of encode.
Structure decode(const DHypFamily& d);

} // namespace relim

#endif
