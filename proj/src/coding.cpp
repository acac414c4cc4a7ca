#include "relim/coding.hpp"

#include <algorithm>

#include "relim/errors.hpp"

namespace relim {

DHypFamily::DHypFamily(Signature sig, int size) : sig_(std::move(sig)), size_(size) {
    if (size_ < 0) throw DomainError("family universe size must be >= 0");
    edges_.resize(static_cast<std::size_t>(sig_.count()));
    for (int i = 0; i < sig_.count(); ++i)
        edges_[static_cast<std::size_t>(i)].resize(partition_count(sig_.arity(i)));
}

DHypFamily::DHypFamily(Signature sig, int size, std::vector<std::vector<TupleSet>> edges)
    : sig_(std::move(sig)), size_(size), edges_(std::move(edges)) {
    if (size_ < 0) throw DomainError("family universe size must be >= 0");
    if (static_cast<int>(edges_.size()) != sig_.count())
        throw DomainError("one edge-set group per relation symbol required");
    for (int i = 0; i < sig_.count(); ++i)
        if (edges_[static_cast<std::size_t>(i)].size() != partition_count(sig_.arity(i)))
            throw DomainError("one edge set per partition required for " + sig_.name(i));
    validate();
    for (auto& group : edges_)
        for (auto& set : group) {
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
        }
}

void DHypFamily::validate() const {
    for (int i = 0; i < sig_.count(); ++i) {
        const auto parts = partitions_of(sig_.arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const int t = parts[pr].class_count();
            for (const auto& e : edges_[static_cast<std::size_t>(i)][pr]) {
                if (static_cast<int>(e.size()) != t)
                    throw DomainError("edge length does not match partition class count");
                for (int a : e)
                    if (a < 1 || a > size_) throw DomainError("edge entry out of range");
                for (std::size_t x = 0; x < e.size(); ++x)
                    for (std::size_t y = x + 1; y < e.size(); ++y)
                        if (e[x] == e[y]) throw DomainError("edge has repeated entries");
            }
        }
    }
}

const TupleSet& DHypFamily::edges(const IndexKey& key) const {
    if (key.partition.ground() != sig_.arity(key.symbol))
        throw DomainError("partition ground set does not match symbol arity");
    return edges(key.symbol, partition_rank(key.partition));
}

void DHypFamily::set_edges(int symbol, int partition_rank, TupleSet edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_[static_cast<std::size_t>(symbol)][static_cast<std::size_t>(partition_rank)] = std::move(edges);
    validate();
}

std::vector<IndexKey> DHypFamily::keys() const {
    std::vector<IndexKey> out;
    for (int i = 0; i < sig_.count(); ++i)
        for (auto& p : partitions_of(sig_.arity(i)))
            out.push_back(IndexKey{i, p});
    return out;
}

std::size_t DHypFamily::total_edges() const {
    std::size_t n = 0;
    for (const auto& group : edges_)
        for (const auto& set : group) n += set.size();
    return n;
}

DHypFamily encode(const Structure& n) {
    DHypFamily out(n.sig(), n.size());
    for (int i = 0; i < n.sig().count(); ++i) {
        const auto parts = partitions_of(n.sig().arity(i));
        std::vector<TupleSet> buckets(parts.size());
        for (const auto& t : n.relation(i)) {
            const SetPartition p = induced_partition(t);
            // rank by position in the canonical enumeration
            std::size_t pr = 0;
            while (parts[pr] != p) ++pr;
            buckets[pr].push_back(dedup(t));
        }
        for (std::size_t pr = 0; pr < parts.size(); ++pr)
            out.set_edges(i, static_cast<int>(pr), std::move(buckets[pr]));
    }
    return out;
}

Structure decode(const DHypFamily& d) {
    std::vector<TupleSet> rels(static_cast<std::size_t>(d.sig().count()));
    for (int i = 0; i < d.sig().count(); ++i) {
        const auto parts = partitions_of(d.sig().arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr)
            for (const auto& e : d.edges(i, static_cast<int>(pr)))
                rels[static_cast<std::size_t>(i)].push_back(expand(parts[pr], e));
    }
    return Structure(d.sig(), d.size(), std::move(rels));
}

} // namespace relim
