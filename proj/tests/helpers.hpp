#ifndef RELIM_TESTS_HELPERS_HPP
#define RELIM_TESTS_HELPERS_HPP

// Independent oracles and generators shared by the unit and acceptance
// suites. The oracles deliberately avoid the code paths they check:
// brute-force enumeration only, no rank spaces, no backtracking.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "relim/catalog.hpp"
#include "relim/density.hpp"
#include "relim/hyperpartition.hpp"
#include "relim/io.hpp"
#include "relim/limit.hpp"
#include "relim/removal.hpp"
#include "relim/rng.hpp"
#include "relim/structure.hpp"

namespace testutil {

using namespace relim;

// ---- partitions ------------------------------------------------------

// All partitions of [t] as unordered families of classes, by recursive
// element insertion (element j joins an existing class or opens a new one).
inline void collect_partitions(int t, int next, std::vector<std::vector<int>>& classes,
                               std::vector<std::vector<std::vector<int>>>& out) {
    if (next > t) {
        out.push_back(classes);
        return;
    }
    for (std::size_t c = 0; c <= classes.size(); ++c) {
        if (c == classes.size()) classes.push_back({});
        classes[c].push_back(next);
        collect_partitions(t, next + 1, classes, out);
        classes[c].pop_back();
        if (classes[c].empty()) classes.pop_back();
    }
}

inline std::vector<std::vector<std::vector<int>>> partitions_oracle(int t) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> classes;
    collect_partitions(t, 1, classes, out);
    return out;
}

// ---- isomorphism and densities ---------------------------------------

// Exhaustive: try every bijection.
inline bool iso_oracle(const Structure& a, const Structure& b) {
    if (a.size() != b.size()) return false;
    if (a.size() == 0) return true;
    std::vector<int> perm(static_cast<std::size_t>(a.size()));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (is_embedding(perm, a, b)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Enumerate k-subsets of [n] recursively.
inline void for_each_subset(int n, int k, std::vector<int>& acc,
                            const std::function<void(const std::vector<int>&)>& fn, int from = 1) {
    if (static_cast<int>(acc.size()) == k) {
        fn(acc);
        return;
    }
    for (int v = from; v <= n; ++v) {
        acc.push_back(v);
        for_each_subset(n, k, acc, fn, v + 1);
        acc.pop_back();
    }
}

inline Rational p_oracle(const Structure& m, const Structure& n) {
    if (n.size() < m.size()) return Rational(0);
    if (m.size() == 0) return Rational(1);
    std::uint64_t hits = 0, total = 0;
    std::vector<int> acc;
    for_each_subset(n.size(), m.size(), acc, [&](const std::vector<int>& subset) {
        ++total;
        if (iso_oracle(m, induced_substructure(n, subset))) ++hits;
    });
    return ratio(hits, total);
}

// All maps [m] -> [n] by recursion.
inline void for_each_map(int msize, int nsize, std::vector<int>& f,
                         const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(f.size()) == msize) {
        fn(f);
        return;
    }
    for (int v = 1; v <= nsize; ++v) {
        f.push_back(v);
        for_each_map(msize, nsize, f, fn);
        f.pop_back();
    }
}

inline Rational t_oracle(const Structure& m, const Structure& n) {
    if (m.size() == 0) return Rational(1);
    if (n.size() == 0) return Rational(0);
    std::uint64_t hits = 0, total = 0;
    std::vector<int> f;
    for_each_map(m.size(), n.size(), f, [&](const std::vector<int>& map) {
        ++total;
        if (is_homomorphism(map, m, n)) ++hits;
    });
    return ratio(hits, total);
}

// Injections as (k-subset, permutation) pairs.
template <typename Pred>
Rational injection_fraction_oracle(const Structure& m, const Structure& n, Pred pred) {
    if (n.size() < m.size()) return Rational(0);
    if (m.size() == 0) return Rational(1);
    std::uint64_t hits = 0, total = 0;
    std::vector<int> acc;
    for_each_subset(n.size(), m.size(), acc, [&](const std::vector<int>& subset) {
        std::vector<int> image = subset;
        std::sort(image.begin(), image.end());
        do {
            ++total;
            if (pred(image)) ++hits;
        } while (std::next_permutation(image.begin(), image.end()));
    });
    return ratio(hits, total);
}

inline Rational t0_oracle(const Structure& m, const Structure& n) {
    return injection_fraction_oracle(m, n, [&](const std::vector<int>& f) {
        return is_homomorphism(f, m, n);
    });
}

inline Rational tind_oracle(const Structure& m, const Structure& n) {
    return injection_fraction_oracle(m, n, [&](const std::vector<int>& f) {
        return is_embedding(f, m, n);
    });
}

// ---- step limits ------------------------------------------------------

// One binary relation at resolution 2: no loops, and a distinct pair is
// related iff the seed value of the pair set falls in the upper interval;
// the relation is symmetric by construction.
inline StepLimit half_density_binary() {
    StepLimit f(binary_signature(), 2);
    for (std::uint8_t c1 = 1; c1 <= 2; ++c1)
        for (std::uint8_t c2 = 1; c2 <= 2; ++c2)
            f.select(0, 1, {c1, c2, 2});
    return f;
}

inline Signature random_signature(std::uint64_t seed) {
    const int nsym = 1 + static_cast<int>(bounded(derive(seed, 1), 3));
    const char* names[3] = {"A", "B", "C"};
    std::vector<Symbol> symbols;
    for (int i = 0; i < nsym; ++i)
        symbols.push_back({names[i], 1 + static_cast<int>(bounded(derive(seed, 10 + static_cast<std::uint64_t>(i)), 3))});
    return Signature(std::move(symbols));
}

// Every cell tossed in independently with probability 1/2.
inline StepLimit random_step_limit(const Signature& sig, int l, std::uint64_t seed) {
    StepLimit f(sig, l);
    for (int i = 0; i < sig.count(); ++i) {
        const auto parts = partitions_of(sig.arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const int t = parts[pr].class_count();
            const std::size_t comps = (1ULL << t) - 1;
            std::uint64_t total = 1;
            for (std::size_t q = 0; q < comps; ++q) total *= static_cast<std::uint64_t>(l);
            for (std::uint64_t rank = 0; rank < total; ++rank) {
                if (unit_double(derive(seed, (static_cast<std::uint64_t>(i) << 40) ^
                                                 (static_cast<std::uint64_t>(pr) << 32) ^ rank)) < 0.5)
                    continue;
                std::vector<std::uint8_t> colors(comps);
                std::uint64_t rest = rank;
                for (std::size_t q = 0; q < comps; ++q) {
                    colors[q] = static_cast<std::uint8_t>(rest % static_cast<std::uint64_t>(l) + 1);
                    rest /= static_cast<std::uint64_t>(l);
                }
                f.select(i, static_cast<int>(pr), std::move(colors));
            }
        }
    }
    return f;
}

// Random valid coded family: every distinct-entry tuple in with prob 1/2.
inline DHypFamily random_dhyp(const Signature& sig, int m, std::uint64_t seed) {
    DHypFamily d(sig, m);
    std::uint64_t counter = 0;
    for (int i = 0; i < sig.count(); ++i) {
        const auto parts = partitions_of(sig.arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const int t = parts[pr].class_count();
            if (t > m) continue;
            TupleSet edges;
            std::vector<int> b(static_cast<std::size_t>(t), 1);
            while (true) {
                bool distinct = true;
                for (std::size_t x = 0; x < b.size() && distinct; ++x)
                    for (std::size_t y = x + 1; y < b.size(); ++y)
                        if (b[x] == b[y]) { distinct = false; break; }
                if (distinct && unit_double(derive(seed, counter)) < 0.5) edges.push_back(b);
                ++counter;
                int q = t - 1;
                while (q >= 0 && b[static_cast<std::size_t>(q)] == m) {
                    b[static_cast<std::size_t>(q)] = 1;
                    --q;
                }
                if (q < 0) break;
                ++b[static_cast<std::size_t>(q)];
            }
            d.set_edges(i, static_cast<int>(pr), std::move(edges));
        }
    }
    return d;
}

// realize from the raw-tuple rule, no coded family involved: a tuple is
// related iff the colors of its deduplicated entry sets are selected.
inline Structure realize_oracle(const StepLimit& f, int m, const SeedTuple& y) {
    std::vector<TupleSet> rels(static_cast<std::size_t>(f.sig().count()));
    for (int i = 0; i < f.sig().count(); ++i) {
        const int r = f.sig().arity(i);
        std::vector<int> a(static_cast<std::size_t>(r), 1);
        while (true) {
            const SetPartition p = induced_partition(a);
            const std::vector<int> b = dedup(a);
            const int t = static_cast<int>(b.size());
            SubsetIndex positions(t, t);
            std::vector<std::uint8_t> colors(positions.count());
            for (std::size_t s = 0; s < positions.count(); ++s) {
                std::uint64_t mask = 0;
                for (int pos = 0; pos < t; ++pos)
                    if (positions.mask_at(s) & (1ULL << pos))
                        mask |= 1ULL << (b[static_cast<std::size_t>(pos)] - 1);
                colors[s] = static_cast<std::uint8_t>(interval_of(y.value_for_mask(mask), f.resolution()));
            }
            if (f.selected(i, partition_rank(p), colors)) rels[static_cast<std::size_t>(i)].push_back(a);
            int q = r - 1;
            while (q >= 0 && a[static_cast<std::size_t>(q)] == m) {
                a[static_cast<std::size_t>(q)] = 1;
                --q;
            }
            if (q < 0) break;
            ++a[static_cast<std::size_t>(q)];
        }
    }
    return Structure(f.sig(), m, std::move(rels));
}

// Exact identity-embedding measure by midpoint colorings through the public
// sampler: every coloring is represented by the seed placing each value at
// the middle of its interval.
inline Rational embedding_measure_oracle(const Structure& m, const StepLimit& f) {
    SubsetIndex idx(m.size(), std::min(f.sig().max_arity(), m.size()));
    const std::size_t k = idx.count();
    const int l = f.resolution();
    std::uint64_t total = 1;
    for (std::size_t q = 0; q < k; ++q) total *= static_cast<std::uint64_t>(l);
    std::vector<int> identity(static_cast<std::size_t>(m.size()));
    std::iota(identity.begin(), identity.end(), 1);
    std::uint64_t hits = 0;
    std::vector<double> values(k);
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        std::uint64_t rest = rank;
        for (std::size_t q = 0; q < k; ++q) {
            const int color = static_cast<int>(rest % static_cast<std::uint64_t>(l)) + 1;
            rest /= static_cast<std::uint64_t>(l);
            values[q] = (static_cast<double>(color) - 0.5) / static_cast<double>(l);
        }
        const Structure n = realize(f, m.size(), SeedTuple(idx, values));
        if (is_embedding(identity, m, n)) ++hits;
    }
    return ratio(hits, total);
}

// Seed tuple whose value at S is the original value at the image of S.
inline SeedTuple permuted_seed(const SeedTuple& y, const std::vector<int>& perm) {
    std::vector<double> values(y.index().count());
    for (std::size_t pos = 0; pos < y.index().count(); ++pos) {
        const std::uint64_t mask = y.index().mask_at(pos);
        std::uint64_t mapped = 0;
        for (int e = 0; e < y.index().ground(); ++e)
            if (mask & (1ULL << e)) mapped |= 1ULL << (perm[static_cast<std::size_t>(e)] - 1);
        values[pos] = y.value_for_mask(mapped);
    }
    return SeedTuple(y.index(), std::move(values));
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int j = n - 1; j > 0; --j) {
        const int q = static_cast<int>(bounded(derive(seed, static_cast<std::uint64_t>(j)),
                                               static_cast<std::uint64_t>(j) + 1));
        std::swap(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(q)]);
    }
    return perm;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j)
        inv[static_cast<std::size_t>(perm[j]) - 1] = static_cast<int>(j) + 1;
    return inv;
}

// The directed 3-cycle and friends used across suites.
inline Structure directed_cycle3() {
    return Structure(binary_signature(), 3, {{{1, 2}, {2, 3}, {3, 1}}});
}

inline Structure directed_edge2() {
    return Structure(binary_signature(), 2, {{{1, 2}}});
}

// All six arcs on three vertices: the triangle as a symmetric digraph.
inline Structure symmetric_triangle() {
    return Structure(binary_signature(), 3, {{{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}});
}

} // namespace testutil

#endif
