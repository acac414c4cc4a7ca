#include "relim/hyperpartition.hpp"

#include <algorithm>
#include <bit>

#include "relim/errors.hpp"

namespace relim {

Hyperpartition::Hyperpartition(int ground, int levels, int colors,
                               std::vector<std::uint8_t> color_by_subset)
    : index_(ground, levels), colors_(colors), color_(std::move(color_by_subset)) {
    if (ground < 1) throw DomainError("hyperpartition needs a nonempty ground set");
    if (levels < 1) throw DomainError("hyperpartition needs at least one level");
    if (colors_ < 1) throw DomainError("hyperpartition needs at least one color");
    if (colors_ > 255) throw DomainError("more than 255 colors is not supported");
    if (color_.size() != index_.count())
        throw DomainError("one color per indexed subset required");
    for (auto c : color_)
        if (c < 1 || c > colors_) throw DomainError("subset color out of range");
}

std::vector<std::vector<std::uint64_t>> Hyperpartition::class_sizes() const {
    std::vector<std::vector<std::uint64_t>> sizes(
        static_cast<std::size_t>(levels()),
        std::vector<std::uint64_t>(static_cast<std::size_t>(colors_), 0));
    for (std::size_t pos = 0; pos < index_.count(); ++pos) {
        const int j = std::popcount(index_.mask_at(pos));
        ++sizes[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(color_[pos]) - 1];
    }
    return sizes;
}

CellSignature cell_signature(const Hyperpartition& h, std::span<const int> tuple) {
    const int u = static_cast<int>(tuple.size());
    if (u < 1) throw DomainError("cell signature of empty tuple");
    if (u > h.levels()) throw DomainError("tuple longer than the hyperpartition levels");
    for (std::size_t x = 0; x < tuple.size(); ++x) {
        if (tuple[x] < 1 || tuple[x] > h.ground()) throw DomainError("tuple entry out of range");
        for (std::size_t y = x + 1; y < tuple.size(); ++y)
            if (tuple[x] == tuple[y]) throw DomainError("tuple has repeated entries");
    }
    SubsetIndex positions(u, u);
    std::vector<std::uint8_t> colors(positions.count());
    for (std::size_t s = 0; s < positions.count(); ++s) {
        const std::uint64_t pmask = positions.mask_at(s);
        std::uint64_t mask = 0;
        for (int pos = 0; pos < u; ++pos)
            if (pmask & (1ULL << pos)) mask |= 1ULL << (tuple[static_cast<std::size_t>(pos)] - 1);
        colors[s] = static_cast<std::uint8_t>(h.color_of_mask(mask));
    }
    return CellSignature(u, std::move(colors));
}

std::vector<Tuple> cell(const Hyperpartition& h, const CellSignature& e) {
    const int u = e.tuple_arity();
    if (u > h.levels()) throw DomainError("signature arity exceeds the hyperpartition levels");
    std::vector<Tuple> out;
    if (u > h.ground()) return out;
    Tuple b(static_cast<std::size_t>(u), 1);
    // lexicographic odometer over [ground]^u, distinct entries only
    while (true) {
        bool distinct = true;
        for (std::size_t x = 0; x < b.size() && distinct; ++x)
            for (std::size_t y = x + 1; y < b.size(); ++y)
                if (b[x] == b[y]) { distinct = false; break; }
        if (distinct && cell_signature(h, b) == e) out.push_back(b);
        int q = u - 1;
        while (q >= 0 && b[static_cast<std::size_t>(q)] == h.ground()) {
            b[static_cast<std::size_t>(q)] = 1;
            --q;
        }
        if (q < 0) break;
        ++b[static_cast<std::size_t>(q)];
    }
    return out;
}

Rational equitability_delta(const Hyperpartition& h) {
    const auto sizes = h.class_sizes();
    Rational delta(0);
    mpz_class ground_pow = 1;
    for (int j = 1; j <= h.levels(); ++j) {
        ground_pow *= static_cast<unsigned long>(h.ground());
        const auto& row = sizes[static_cast<std::size_t>(j) - 1];
        const std::uint64_t biggest = *std::max_element(row.begin(), row.end());
        const std::uint64_t smallest = *std::min_element(row.begin(), row.end());
        const Rational diff =
            ratio(factorial(static_cast<unsigned>(j)) *
                      mpz_class(static_cast<unsigned long>(biggest - smallest)),
                  ground_pow);
        delta = std::max(delta, diff);
    }
    return delta;
}

Hyperpartition hyperpartition_from_seed(const SeedTuple& seed, int colors) {
    std::vector<std::uint8_t> color(seed.index().count());
    for (std::size_t pos = 0; pos < seed.index().count(); ++pos)
        color[pos] = static_cast<std::uint8_t>(interval_of(seed.value_at(pos), colors));
    return Hyperpartition(seed.index().ground(), seed.index().cap(), colors, std::move(color));
}

Structure step_structure(const Hyperpartition& h, const StepLimit& f) {
    if (h.colors() != f.resolution())
        throw DomainError("hyperpartition colors do not match the limit resolution");
    if (h.levels() < std::min(f.sig().max_arity(), h.ground()))
        throw DomainError("hyperpartition levels below the maximum arity");
    const int m = h.ground();
    DHypFamily fam(f.sig(), m);
    for (int i = 0; i < f.sig().count(); ++i) {
        const auto parts = partitions_of(f.sig().arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const int t = parts[pr].class_count();
            if (t > m || f.cells(i, static_cast<int>(pr)).empty()) continue;
            TupleSet edges;
            Tuple b(static_cast<std::size_t>(t), 1);
            std::vector<std::uint8_t> colors;
            while (true) {
                bool distinct = true;
                for (std::size_t x = 0; x < b.size() && distinct; ++x)
                    for (std::size_t y = x + 1; y < b.size(); ++y)
                        if (b[x] == b[y]) { distinct = false; break; }
                if (distinct) {
                    const CellSignature sig = cell_signature(h, b);
                    if (f.selected(i, static_cast<int>(pr), sig.colors())) edges.push_back(b);
                }
                int q = t - 1;
                while (q >= 0 && b[static_cast<std::size_t>(q)] == m) {
                    b[static_cast<std::size_t>(q)] = 1;
                    --q;
                }
                if (q < 0) break;
                ++b[static_cast<std::size_t>(q)];
            }
            fam.set_edges(i, static_cast<int>(pr), std::move(edges));
        }
    }
    return decode(fam);
}

} // namespace relim
