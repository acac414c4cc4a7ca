#ifndef RELIM_SUBSET_INDEX_HPP
#define RELIM_SUBSET_INDEX_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace relim {

/// The family of nonempty subsets of [ground] with at most `cap` elements,
/// enumerated by size then lexicographically by element list. Subsets are
/// bitmasks (bit k set means element k+1 present), which bounds ground to 64.
class SubsetIndex {
public:
    SubsetIndex(int ground, int cap);

    int ground() const { return ground_; }
    int cap() const { return cap_; }
    std::size_t count() const { return subsets_.size(); }
    std::uint64_t mask_at(std::size_t pos) const { return subsets_[pos]; }
    const std::vector<std::uint64_t>& masks() const { return subsets_; }

    /// Position of a subset; DomainError if it is not in the family.
    std::size_t position(std::uint64_t mask) const;

    static std::uint64_t mask_of(std::span<const int> elements);

private:
    int ground_ = 0;
    int cap_ = 0;
    std::vector<std::uint64_t> subsets_;
    std::unordered_map<std::uint64_t, std::size_t> position_;
};

} // namespace relim

#endif
