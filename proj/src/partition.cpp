#include "relim/partition.hpp"

#include <algorithm>
#include <cstdint>

#include "relim/errors.hpp"

namespace relim {

SetPartition::SetPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
    if (rgs_.empty()) throw DomainError("partition of the empty set");
    int next = 0;
    for (int c : rgs_) {
        if (c < 0 || c > next) throw DomainError("not a restricted growth string");
        if (c == next) ++next;
    }
    class_count_ = next;
}

std::vector<std::vector<int>> SetPartition::classes() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(class_count_));
    for (std::size_t j = 0; j < rgs_.size(); ++j)
        out[static_cast<std::size_t>(rgs_[j])].push_back(static_cast<int>(j) + 1);
    return out;
}

std::string SetPartition::to_string() const {
    std::string s;
    for (const auto& cls : classes()) {
        if (!s.empty()) s += '|';
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(cls[i]);
        }
    }
    return s;
}

std::vector<SetPartition> partitions_of(int t) {
    if (t < 1) throw DomainError("partitions_of requires t >= 1");
    std::vector<SetPartition> out;
    std::vector<int> rgs(static_cast<std::size_t>(t), 0);
    // Odometer over restricted growth strings in lexicographic order.
    while (true) {
        out.emplace_back(rgs);
        int j = t - 1;
        for (; j > 0; --j) {
            int maxprev = 0;
            for (int i = 0; i < j; ++i) maxprev = std::max(maxprev, rgs[static_cast<std::size_t>(i)]);
            if (rgs[static_cast<std::size_t>(j)] <= maxprev) break;
        }
        if (j == 0) break;
        ++rgs[static_cast<std::size_t>(j)];
        std::fill(rgs.begin() + j + 1, rgs.end(), 0);
    }
    return out;
}

std::uint64_t partition_count(int t) {
    return static_cast<std::uint64_t>(partitions_of(t).size());
}

int partition_rank(const SetPartition& p) {
    const auto all = partitions_of(p.ground());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == p) return static_cast<int>(i);
    throw DomainError("partition not found in canonical enumeration");
}

SetPartition induced_partition(std::span<const int> tuple) {
    if (tuple.empty()) throw DomainError("induced_partition of empty tuple");
    std::vector<int> rgs(tuple.size());
    std::vector<int> seen; // distinct entries in order of first occurrence
    for (std::size_t j = 0; j < tuple.size(); ++j) {
        auto it = std::find(seen.begin(), seen.end(), tuple[j]);
        if (it == seen.end()) {
            rgs[j] = static_cast<int>(seen.size());
            seen.push_back(tuple[j]);
        } else {
            rgs[j] = static_cast<int>(it - seen.begin());
        }
    }
    return SetPartition(std::move(rgs));
}

std::vector<int> dedup(std::span<const int> tuple) {
    if (tuple.empty()) throw DomainError("dedup of empty tuple");
    std::vector<int> out;
    for (int x : tuple)
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

std::vector<int> expand(const SetPartition& p, std::span<const int> deduped) {
    if (static_cast<int>(deduped.size()) != p.class_count())
        throw DomainError("expand: tuple length does not match class count");
    std::vector<int> out(static_cast<std::size_t>(p.ground()));
    for (int j = 1; j <= p.ground(); ++j)
        out[static_cast<std::size_t>(j) - 1] = deduped[static_cast<std::size_t>(p.class_of(j))];
    return out;
}

SetPartition parse_partition(const std::string& text) {
    std::vector<std::vector<int>> classes;
    std::vector<int> current;
    std::string num;
    auto flush_num = [&] {
        if (num.empty()) throw DomainError("bad partition text: " + text);
        current.push_back(std::stoi(num));
        num.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            num += c;
        } else if (c == ',') {
            flush_num();
        } else if (c == '|') {
            flush_num();
            classes.push_back(std::move(current));
            current.clear();
        } else {
            throw DomainError("bad partition text: " + text);
        }
    }
    flush_num();
    classes.push_back(std::move(current));

    int t = 0;
    for (const auto& cls : classes) t += static_cast<int>(cls.size());
    std::vector<int> rgs(static_cast<std::size_t>(t), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int j : classes[c]) {
            if (j < 1 || j > t || rgs[static_cast<std::size_t>(j) - 1] != -1)
                throw DomainError("classes do not partition [t]: " + text);
            rgs[static_cast<std::size_t>(j) - 1] = static_cast<int>(c);
        }
    // Normalize class ids to first-occurrence order.
    std::vector<int> remap(classes.size(), -1);
    int next = 0;
    for (int& c : rgs) {
        if (remap[static_cast<std::size_t>(c)] == -1) remap[static_cast<std::size_t>(c)] = next++;
        c = remap[static_cast<std::size_t>(c)];
    }
    return SetPartition(std::move(rgs));
}

} // namespace relim
