#ifndef RELIM_PARTITION_HPP
#define RELIM_PARTITION_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace relim {

/// A partition of [t] = {1..t} into nonempty classes, ordered so that the
/// minima of the classes increase. Canonically represented by its restricted
/// growth string: rgs[j] is the 0-based class id of element j+1, class ids
/// are assigned in order of first occurrence, rgs[0] == 0.
class SetPartition {
public:
    explicit SetPartition(std::vector<int> rgs);

    int ground() const { return static_cast<int>(rgs_.size()); } // t
    int class_count() const { return class_count_; }
    const std::vector<int>& rgs() const { return rgs_; }

    /// Classes as sorted 1-based element lists, in increasing-minimum order.
    std::vector<std::vector<int>> classes() const;

    /// 0-based class id of 1-based element j.
    int class_of(int j) const { return rgs_[static_cast<std::size_t>(j) - 1]; }

    /// Text form "1,2|3": classes joined by '|', elements by ','.
    std::string to_string() const;

    bool operator==(const SetPartition& other) const = default;
    auto operator<=>(const SetPartition& other) const = default;

private:
    std::vector<int> rgs_;
    int class_count_ = 0;
};

/// All partitions of [t] in lexicographic restricted-growth-string order.
/// Sizes follow the Bell numbers: 1, 2, 5, 15, 52 for t = 1..5.
std::vector<SetPartition> partitions_of(int t);

/// Number of partitions of [t] (Bell number).
std::uint64_t partition_count(int t);

/// Position of `p` within partitions_of(p.ground()).
int partition_rank(const SetPartition& p);

/// The kernel partition of a tuple: positions j, j' share a class iff the
/// entries are equal.
SetPartition induced_partition(std::span<const int> tuple);

/// First occurrences of each distinct entry, in original order.
std::vector<int> dedup(std::span<const int> tuple);

/// Inverse of (induced_partition, dedup): expand a distinct-entry tuple back
/// to a ground()-length tuple, position j taking the entry of its class.
std::vector<int> expand(const SetPartition& p, std::span<const int> deduped);

SetPartition parse_partition(const std::string& text);

} // namespace relim

#endif
