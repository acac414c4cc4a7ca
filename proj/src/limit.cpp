#include "relim/limit.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "relim/errors.hpp"
#include "relim/rng.hpp"

namespace relim {

namespace {

constexpr std::uint64_t kColoringBudget = 100'000'000;
constexpr std::uint64_t kTupleBudget = 1'000'000'000;

// Position subsets of [t] as 0-based position lists, in family order.
std::vector<std::vector<int>> position_subsets(int t) {
    SubsetIndex idx(t, t);
    std::vector<std::vector<int>> out(idx.count());
    for (std::size_t s = 0; s < idx.count(); ++s) {
        std::uint64_t mask = idx.mask_at(s);
        for (int pos = 0; pos < t; ++pos)
            if (mask & (1ULL << pos)) out[s].push_back(pos);
    }
    return out;
}

void decode_tuple(std::uint64_t rank, int m, int t, int* b) {
    for (int q = t - 1; q >= 0; --q) {
        b[q] = static_cast<int>(rank % static_cast<std::uint64_t>(m)) + 1;
        rank /= static_cast<std::uint64_t>(m);
    }
}

bool entries_distinct(const int* b, int t) {
    for (int x = 0; x < t; ++x)
        for (int y = x + 1; y < t; ++y)
            if (b[x] == b[y]) return false;
    return true;
}

// lexicographic successor of a tuple over [m]; carries from the last entry
void advance_tuple(int* b, int m, int t) {
    int q = t - 1;
    while (q >= 0 && b[q] == m) b[q--] = 1;
    if (q >= 0) ++b[q];
}

bool decode_distinct_tuple(std::uint64_t rank, int m, int t, int* b) {
    decode_tuple(rank, m, t, b);
    return entries_distinct(b, t);
}

} // namespace

int interval_of(double y, int l) {
    if (l < 1) throw DomainError("resolution must be >= 1");
    if (!(y >= 0.0 && y <= 1.0)) throw DomainError("value outside [0,1]");
    const int a = static_cast<int>(std::floor(y * l)) + 1;
    return std::min(a, l);
}

CellSignature::CellSignature(int t, std::vector<std::uint8_t> colors) : t_(t), colors_(std::move(colors)) {
    if (t_ < 1) throw DomainError("cell signature needs t >= 1");
    if (colors_.size() != (1ULL << t_) - 1)
        throw DomainError("cell signature needs one color per nonempty subset of [t]");
    for (auto c : colors_)
        if (c < 1) throw DomainError("cell signature colors start at 1");
}

StepLimit::StepLimit(Signature sig, int resolution) : sig_(std::move(sig)), resolution_(resolution) {
    if (resolution_ < 1) throw DomainError("resolution must be >= 1");
    if (resolution_ > 255) throw DomainError("resolution above 255 is not supported");
    cells_.resize(static_cast<std::size_t>(sig_.count()));
    for (int i = 0; i < sig_.count(); ++i)
        cells_[static_cast<std::size_t>(i)].resize(partition_count(sig_.arity(i)));
}

StepLimit StepLimit::complete(Signature sig, int resolution) {
    StepLimit f(std::move(sig), resolution);
    for (int i = 0; i < f.sig_.count(); ++i) {
        const auto parts = partitions_of(f.sig_.arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const int t = parts[pr].class_count();
            const std::size_t comps = (1ULL << t) - 1;
            std::uint64_t total = 0;
            if (!checked_pow(static_cast<std::uint64_t>(resolution), static_cast<unsigned>(comps),
                             10'000'000, total))
                throw ResourceError("complete step limit would enumerate too many cells");
            std::vector<std::uint8_t> colors(comps, 1);
            for (std::uint64_t rank = 0; rank < total; ++rank) {
                std::uint64_t rest = rank;
                for (std::size_t q = 0; q < comps; ++q) {
                    colors[q] = static_cast<std::uint8_t>(rest % static_cast<std::uint64_t>(resolution) + 1);
                    rest /= static_cast<std::uint64_t>(resolution);
                }
                f.select(i, static_cast<int>(pr), colors);
            }
        }
    }
    return f;
}

void StepLimit::select(int symbol, int partition_rank, std::vector<std::uint8_t> colors) {
    if (symbol < 0 || symbol >= sig_.count()) throw DomainError("symbol index out of range");
    auto& group = cells_[static_cast<std::size_t>(symbol)];
    if (partition_rank < 0 || partition_rank >= static_cast<int>(group.size()))
        throw DomainError("partition rank out of range");
    const auto parts = partitions_of(sig_.arity(symbol));
    const int t = parts[static_cast<std::size_t>(partition_rank)].class_count();
    if (colors.size() != (1ULL << t) - 1)
        throw DomainError("cell signature has the wrong number of components");
    for (auto c : colors)
        if (c < 1 || c > resolution_) throw DomainError("cell color out of range");
    auto& set = group[static_cast<std::size_t>(partition_rank)];
    auto it = std::lower_bound(set.begin(), set.end(), colors);
    if (it == set.end() || *it != colors) set.insert(it, std::move(colors));
}

void StepLimit::select(int symbol, const SetPartition& p, const CellSignature& cell) {
    if (p.ground() != sig_.arity(symbol))
        throw DomainError("partition ground set does not match symbol arity");
    if (cell.tuple_arity() != p.class_count())
        throw DomainError("cell signature arity does not match partition class count");
    select(symbol, partition_rank(p), cell.colors());
}

bool StepLimit::selected(int symbol, int partition_rank, std::span<const std::uint8_t> colors) const {
    const auto& set = cells_[static_cast<std::size_t>(symbol)][static_cast<std::size_t>(partition_rank)];
    auto it = std::lower_bound(set.begin(), set.end(), colors,
                               [](const std::vector<std::uint8_t>& a, std::span<const std::uint8_t> b) {
                                   return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                               });
    return it != set.end() && it->size() == colors.size() &&
           std::equal(it->begin(), it->end(), colors.begin());
}

std::size_t StepLimit::total_selected() const {
    std::size_t n = 0;
    for (const auto& group : cells_)
        for (const auto& set : group) n += set.size();
    return n;
}

namespace {

void check_realize_args(const StepLimit& f, int m, const SeedTuple& seed) {
    if (m < 1) throw DomainError("realize requires m >= 1");
    if (seed.index().ground() != m) throw DomainError("seed tuple indexed over the wrong ground set");
    if (seed.index().cap() < std::min(f.sig().max_arity(), m))
        throw DomainError("seed tuple does not cover subsets up to the maximum arity");
}

template <typename TupleSink>
void scan_key_tuples_serial(const StepLimit& f, int m, const SeedTuple& seed,
                            int symbol, int pr, int t, TupleSink sink) {
    const auto psubs = position_subsets(t);
    std::vector<std::uint8_t> colors(psubs.size());
    std::vector<int> b(static_cast<std::size_t>(t));
    std::uint64_t total = 0;
    if (!checked_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(t), kTupleBudget, total))
        throw ResourceError("tuple enumeration exceeds the budget");
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        if (!decode_distinct_tuple(rank, m, t, b.data())) continue;
        for (std::size_t s = 0; s < psubs.size(); ++s) {
            std::uint64_t mask = 0;
            for (int pos : psubs[s]) mask |= 1ULL << (b[static_cast<std::size_t>(pos)] - 1);
            colors[s] = static_cast<std::uint8_t>(interval_of(seed.value_for_mask(mask), f.resolution()));
        }
        if (f.selected(symbol, pr, colors)) sink(b);
    }
}

} // namespace

Structure realize(const StepLimit& f, int m, const SeedTuple& seed) {
    check_realize_args(f, m, seed);
    DHypFamily fam(f.sig(), m);
    for (int i = 0; i < f.sig().count(); ++i) {
        const auto parts = partitions_of(f.sig().arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const int t = parts[pr].class_count();
            if (t > m || f.cells(i, static_cast<int>(pr)).empty()) continue;
            const auto psubs = position_subsets(t);
            std::uint64_t total = 0;
            if (!checked_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(t), kTupleBudget, total))
                throw ResourceError("tuple enumeration exceeds the budget");
            TupleSet edges;
#pragma omp parallel if (total > 32768)
            {
                const std::uint64_t threads = static_cast<std::uint64_t>(omp_get_num_threads());
                const std::uint64_t tid = static_cast<std::uint64_t>(omp_get_thread_num());
                const std::uint64_t chunk = (total + threads - 1) / threads;
                const std::uint64_t lo = std::min(tid * chunk, total);
                const std::uint64_t hi = std::min(lo + chunk, total);
                TupleSet local;
                std::vector<std::uint8_t> colors(psubs.size());
                std::vector<int> b(static_cast<std::size_t>(t));
                if (lo < hi) decode_tuple(lo, m, t, b.data());
                for (std::uint64_t rank = lo; rank < hi; ++rank) {
                    if (entries_distinct(b.data(), t)) {
                        for (std::size_t s = 0; s < psubs.size(); ++s) {
                            std::uint64_t mask = 0;
                            for (int pos : psubs[s])
                                mask |= 1ULL << (b[static_cast<std::size_t>(pos)] - 1);
                            colors[s] = static_cast<std::uint8_t>(
                                interval_of(seed.value_for_mask(mask), f.resolution()));
                        }
                        if (f.selected(i, static_cast<int>(pr), colors)) local.push_back(b);
                    }
                    advance_tuple(b.data(), m, t);
                }
#pragma omp critical
                edges.insert(edges.end(), local.begin(), local.end());
            }
            fam.set_edges(i, static_cast<int>(pr), std::move(edges));
        }
    }
    return decode(fam);
}

Structure sample_structure(const StepLimit& f, int m, std::uint64_t seed) {
    if (m < 1) throw DomainError("sample_structure requires m >= 1");
    const int cap = std::max(1, std::min(f.sig().max_arity(), m));
    return realize(f, m, sample_seed(m, cap, seed));
}

namespace {

// One membership comparison per (key, distinct tuple): the coded edge of M
// must agree with cell-signature selection under every coloring.
struct EmbeddingCheck {
    int symbol = 0;
    int partition_rank = 0;
    bool expected = false;
    std::vector<std::size_t> color_positions; // into the coloring array, r([t]) order
};

struct EmbeddingProblem {
    SubsetIndex index;
    std::uint64_t total = 0; // l^|index|
    std::vector<EmbeddingCheck> checks;

    EmbeddingProblem(const Structure& m, const StepLimit& f)
        : index(m.size(), std::min(f.sig().max_arity(), m.size())) {
        if (m.sig() != f.sig()) throw DomainError("structure and limit have different signatures");
        if (!checked_pow(static_cast<std::uint64_t>(f.resolution()),
                         static_cast<unsigned>(index.count()), kColoringBudget, total))
            throw ResourceError("embedding measure would enumerate more than the coloring budget");
        const DHypFamily coded = encode(m);
        for (int i = 0; i < f.sig().count(); ++i) {
            const auto parts = partitions_of(f.sig().arity(i));
            for (std::size_t pr = 0; pr < parts.size(); ++pr) {
                const int t = parts[pr].class_count();
                if (t > m.size()) continue;
                const auto psubs = position_subsets(t);
                std::vector<int> b(static_cast<std::size_t>(t));
                std::uint64_t tuples = 1;
                for (int q = 0; q < t; ++q) tuples *= static_cast<std::uint64_t>(m.size());
                for (std::uint64_t rank = 0; rank < tuples; ++rank) {
                    if (!decode_distinct_tuple(rank, m.size(), t, b.data())) continue;
                    EmbeddingCheck c;
                    c.symbol = i;
                    c.partition_rank = static_cast<int>(pr);
                    const auto& set = coded.edges(i, static_cast<int>(pr));
                    c.expected = std::binary_search(set.begin(), set.end(), b);
                    for (const auto& ps : psubs) {
                        std::uint64_t mask = 0;
                        for (int pos : ps) mask |= 1ULL << (b[static_cast<std::size_t>(pos)] - 1);
                        c.color_positions.push_back(index.position(mask));
                    }
                    checks.push_back(std::move(c));
                }
            }
        }
    }

    bool holds(const StepLimit& f, const std::uint8_t* coloring,
               std::vector<std::uint8_t>& scratch) const {
        for (const auto& c : checks) {
            scratch.resize(c.color_positions.size());
            for (std::size_t s = 0; s < c.color_positions.size(); ++s)
                scratch[s] = coloring[c.color_positions[s]];
            if (f.selected(c.symbol, c.partition_rank, scratch) != c.expected) return false;
        }
        return true;
    }
};

void decode_coloring(std::uint64_t rank, int l, std::size_t k, std::uint8_t* colors) {
    for (std::size_t q = 0; q < k; ++q) {
        colors[q] = static_cast<std::uint8_t>(rank % static_cast<std::uint64_t>(l) + 1);
        rank /= static_cast<std::uint64_t>(l);
    }
}

} // namespace

Density embedding_measure(const Structure& m, const StepLimit& f) {
    if (m.sig() != f.sig()) throw DomainError("structure and limit have different signatures");
    if (m.size() == 0) return Rational(1);
    EmbeddingProblem prob(m, f);
    const std::size_t k = prob.index.count();
    const int l = f.resolution();
    std::uint64_t count = 0;
#pragma omp parallel reduction(+ : count) if (prob.total > 16384)
    {
        const std::uint64_t threads = static_cast<std::uint64_t>(omp_get_num_threads());
        const std::uint64_t tid = static_cast<std::uint64_t>(omp_get_thread_num());
        const std::uint64_t chunk = (prob.total + threads - 1) / threads;
        const std::uint64_t lo = std::min(tid * chunk, prob.total);
        const std::uint64_t hi = std::min(lo + chunk, prob.total);
        if (lo < hi) {
            std::vector<std::uint8_t> coloring(k);
            std::vector<std::uint8_t> scratch;
            decode_coloring(lo, l, k, coloring.data());
            for (std::uint64_t rank = lo; rank < hi; ++rank) {
                if (prob.holds(f, coloring.data(), scratch)) ++count;
                // carry increment, least significant position first
                std::size_t q = 0;
                while (q < k && coloring[q] == static_cast<std::uint8_t>(l)) coloring[q++] = 1;
                if (q < k) ++coloring[q];
            }
        }
    }
    return ratio(count, prob.total);
}

Density induced_density(const Structure& m, const StepLimit& f) {
    Density em = embedding_measure(m, f);
    if (m.size() == 0) return em;
    const std::uint64_t aut = automorphism_count(m);
    return em * ratio(factorial(static_cast<unsigned>(m.size())),
                      mpz_class(static_cast<unsigned long>(aut)));
}

double mc_embedding_frequency(const Structure& m, const StepLimit& f,
                              std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw DomainError("trial count must be >= 1");
    if (m.size() == 0) return 1.0;
    EmbeddingProblem prob(m, f);
    const std::size_t k = prob.index.count();
    const int l = f.resolution();
    std::uint64_t hits = 0;
#pragma omp parallel if (trials > 4096)
    {
        std::vector<std::uint8_t> coloring(k);
        std::vector<std::uint8_t> scratch;
#pragma omp for reduction(+ : hits) schedule(static)
        for (std::int64_t trial = 0; trial < static_cast<std::int64_t>(trials); ++trial) {
            const std::uint64_t trial_seed = derive(seed, static_cast<std::uint64_t>(trial));
            for (std::size_t pos = 0; pos < k; ++pos)
                coloring[pos] = static_cast<std::uint8_t>(
                    interval_of(seed_value(trial_seed, prob.index.mask_at(pos)), l));
            if (prob.holds(f, coloring.data(), scratch)) ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

namespace serial {

Structure realize(const StepLimit& f, int m, const SeedTuple& seed) {
    check_realize_args(f, m, seed);
    DHypFamily fam(f.sig(), m);
    for (int i = 0; i < f.sig().count(); ++i) {
        const auto parts = partitions_of(f.sig().arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const int t = parts[pr].class_count();
            if (t > m || f.cells(i, static_cast<int>(pr)).empty()) continue;
            TupleSet edges;
            scan_key_tuples_serial(f, m, seed, i, static_cast<int>(pr), t,
                                   [&](const std::vector<int>& b) { edges.push_back(b); });
            fam.set_edges(i, static_cast<int>(pr), std::move(edges));
        }
    }
    return decode(fam);
}

Density embedding_measure(const Structure& m, const StepLimit& f) {
    if (m.sig() != f.sig()) throw DomainError("structure and limit have different signatures");
    if (m.size() == 0) return Rational(1);
    EmbeddingProblem prob(m, f);
    const std::size_t k = prob.index.count();
    const int l = f.resolution();
    // odometer over colorings instead of rank decoding
    std::vector<std::uint8_t> coloring(k, 1);
    std::vector<std::uint8_t> scratch;
    std::uint64_t count = 0;
    while (true) {
        if (prob.holds(f, coloring.data(), scratch)) ++count;
        std::size_t q = 0;
        while (q < k && coloring[q] == static_cast<std::uint8_t>(l)) {
            coloring[q] = 1;
            ++q;
        }
        if (q == k) break;
        ++coloring[q];
    }
    return ratio(count, prob.total);
}

double mc_embedding_frequency(const Structure& m, const StepLimit& f,
                              std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw DomainError("trial count must be >= 1");
    if (m.size() == 0) return 1.0;
    EmbeddingProblem prob(m, f);
    const std::size_t k = prob.index.count();
    const int l = f.resolution();
    std::vector<std::uint8_t> coloring(k);
    std::vector<std::uint8_t> scratch;
    std::uint64_t hits = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = derive(seed, trial);
        for (std::size_t pos = 0; pos < k; ++pos)
            coloring[pos] = static_cast<std::uint8_t>(
                interval_of(seed_value(trial_seed, prob.index.mask_at(pos)), l));
        if (prob.holds(f, coloring.data(), scratch)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

} // namespace serial

} // namespace relim
