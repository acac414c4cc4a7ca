#include "relim/subset_index.hpp"

#include <algorithm>

#include "relim/errors.hpp"

namespace relim {

SubsetIndex::SubsetIndex(int ground, int cap) : ground_(ground), cap_(cap) {
    if (ground < 0 || ground > 64)
        throw DomainError("subset family supports ground sets of at most 64 elements");
    if (cap < 0) throw DomainError("negative subset size cap");
    cap_ = std::min(cap, ground);
    // by size, then lexicographic by ascending element list
    std::vector<int> pick;
    for (int s = 1; s <= cap_; ++s) {
        pick.assign(static_cast<std::size_t>(s), 0);
        for (int j = 0; j < s; ++j) pick[static_cast<std::size_t>(j)] = j + 1;
        while (true) {
            std::uint64_t mask = 0;
            for (int e : pick) mask |= 1ULL << (e - 1);
            position_.emplace(mask, subsets_.size());
            subsets_.push_back(mask);
            int j = s - 1;
            while (j >= 0 && pick[static_cast<std::size_t>(j)] == ground_ - (s - 1 - j)) --j;
            if (j < 0) break;
            ++pick[static_cast<std::size_t>(j)];
            for (int q = j + 1; q < s; ++q)
                pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q) - 1] + 1;
        }
    }
}

std::size_t SubsetIndex::position(std::uint64_t mask) const {
    auto it = position_.find(mask);
    if (it == position_.end()) throw DomainError("subset not in the indexed family");
    return it->second;
}

std::uint64_t SubsetIndex::mask_of(std::span<const int> elements) {
    std::uint64_t mask = 0;
    for (int e : elements) {
        if (e < 1 || e > 64) throw DomainError("subset element out of range for mask");
        mask |= 1ULL << (e - 1);
    }
    return mask;
}

} // namespace relim
