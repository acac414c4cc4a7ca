#include "relim/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <vector>

#include "relim/errors.hpp"
#include "relim/rational.hpp"

namespace relim {

namespace {

constexpr std::uint64_t kEnumBudget = 1'000'000'000;
constexpr std::uint64_t kTableBudget = 200'000'000;

// Flat membership tables: one byte per tuple of [size]^arity; entry a_r is
// the least significant digit of the flat index.
struct RelationTables {
    int size = 0;
    std::vector<std::vector<std::uint8_t>> table; // [symbol][flat tuple index]

    explicit RelationTables(const Structure& s) : size(s.size()) {
        table.resize(static_cast<std::size_t>(s.sig().count()));
        for (int i = 0; i < s.sig().count(); ++i) {
            std::uint64_t cells = 0;
            if (!checked_pow(static_cast<std::uint64_t>(size), static_cast<unsigned>(s.sig().arity(i)),
                             kTableBudget, cells))
                throw ResourceError("relation membership table exceeds the budget");
            table[static_cast<std::size_t>(i)].assign(cells, 0);
            for (const auto& t : s.relation(i)) {
                std::uint64_t idx = 0;
                for (int a : t) idx = idx * static_cast<std::uint64_t>(size) + static_cast<std::uint64_t>(a - 1);
                table[static_cast<std::size_t>(i)][idx] = 1;
            }
        }
    }

    bool contains(int i, std::uint64_t flat) const { return table[static_cast<std::size_t>(i)][flat] != 0; }
};

// f given as 0-based images f0[j] = f(j+1) - 1.
bool hom_at(const Structure& m, const RelationTables& nt, const int* f0) {
    for (int i = 0; i < m.sig().count(); ++i)
        for (const auto& t : m.relation(i)) {
            std::uint64_t idx = 0;
            for (int a : t)
                idx = idx * static_cast<std::uint64_t>(nt.size) +
                      static_cast<std::uint64_t>(f0[a - 1]);
            if (!nt.contains(i, idx)) return false;
        }
    return true;
}

bool emb_at(const Structure& m, const RelationTables& mt, const RelationTables& nt, const int* f0) {
    const std::uint64_t mm = static_cast<std::uint64_t>(m.size());
    for (int i = 0; i < m.sig().count(); ++i) {
        const int r = m.sig().arity(i);
        std::uint64_t total = 1;
        for (int q = 0; q < r; ++q) total *= mm;
        for (std::uint64_t midx = 0; midx < total; ++midx) {
            // peel base-m digits (last tuple entry first) and assemble the
            // image index in the same digit positions
            std::uint64_t rest = midx;
            std::uint64_t nidx = 0;
            std::uint64_t mult = 1;
            for (int q = 0; q < r; ++q) {
                const std::uint64_t digit = rest % mm;
                rest /= mm;
                nidx += static_cast<std::uint64_t>(f0[digit]) * mult;
                mult *= static_cast<std::uint64_t>(nt.size);
            }
            if (mt.contains(i, midx) != nt.contains(i, nidx)) return false;
        }
    }
    return true;
}

std::uint64_t map_space(const Structure& m, const Structure& n) {
    std::uint64_t total = 0;
    if (!checked_pow(static_cast<std::uint64_t>(n.size()), static_cast<unsigned>(m.size()),
                     kEnumBudget, total))
        throw ResourceError("map enumeration exceeds the budget");
    return total;
}

// Backtracking over injective partial maps; calls leaf() at full maps.
template <typename Leaf>
void injective_backtrack(int msize, int nsize, int* f0, char* used, int depth, Leaf leaf) {
    if (depth == msize) {
        leaf();
        return;
    }
    for (int v = 0; v < nsize; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        f0[depth] = v;
        injective_backtrack(msize, nsize, f0, used, depth + 1, leaf);
        used[v] = 0;
    }
}

// Parallel scan over the map space, one stripe per image of the first
// element. Stripes do exactly the serial work, so thread count only affects
// wall time, never the count.
template <typename Pred>
std::uint64_t scan_maps(const Structure& m, const Structure& n, bool injective_only, Pred pred) {
    const std::uint64_t total = map_space(m, n);
    const int msize = m.size();
    const int nsize = n.size();
    std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(dynamic) if (total > 32768)
    for (int v = 0; v < nsize; ++v) {
        std::vector<int> f0(static_cast<std::size_t>(msize), 0);
        f0[0] = v;
        if (injective_only) {
            std::vector<char> used(static_cast<std::size_t>(nsize), 0);
            used[static_cast<std::size_t>(v)] = 1;
            injective_backtrack(msize, nsize, f0.data(), used.data(), 1,
                                [&] { count += pred(f0.data()) ? 1 : 0; });
        } else {
            while (true) {
                if (pred(f0.data())) ++count;
                int j = 1;
                while (j < msize && f0[static_cast<std::size_t>(j)] == nsize - 1)
                    f0[static_cast<std::size_t>(j++)] = 0;
                if (j == msize) break;
                ++f0[static_cast<std::size_t>(j)];
            }
        }
    }
    return count;
}

// C(i, j) for i <= n, j <= k, saturating at the enumeration budget.
std::vector<std::vector<std::uint64_t>> binomial_table(int n, int k) {
    std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)][0] = 1;
        for (int j = 1; j <= std::min(i, k); ++j) {
            const std::uint64_t a = c[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
            const std::uint64_t b = c[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (a > kEnumBudget || b > kEnumBudget) ? kEnumBudget + 1 : std::min(a + b, kEnumBudget + 1);
        }
    }
    return c;
}

// rank-th k-subset of [n] in colexicographic order, 1-based ascending.
void unrank_colex(std::uint64_t rank, int k, const std::vector<std::vector<std::uint64_t>>& c, int* out) {
    for (int j = k; j >= 1; --j) {
        int lo = j - 1; // largest element index candidate (0-based value c means element c+1)
        while (c[static_cast<std::size_t>(lo) + 1][static_cast<std::size_t>(j)] <= rank) ++lo;
        out[j - 1] = lo + 1;
        rank -= c[static_cast<std::size_t>(lo)][static_cast<std::size_t>(j)];
    }
}

} // namespace

std::uint64_t count_induced_copies(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() > n.size()) return 0;
    if (m.size() == 0) return 1;
    const auto binomials = binomial_table(n.size(), m.size());
    const std::uint64_t total =
        binomials[static_cast<std::size_t>(n.size())][static_cast<std::size_t>(m.size())];
    if (total > kEnumBudget) throw ResourceError("subset enumeration exceeds the budget");
    const int k = m.size();
    std::uint64_t count = 0;
#pragma omp parallel reduction(+ : count) if (total > 512)
    {
        const std::uint64_t threads = static_cast<std::uint64_t>(omp_get_num_threads());
        const std::uint64_t tid = static_cast<std::uint64_t>(omp_get_thread_num());
        const std::uint64_t chunk = (total + threads - 1) / threads;
        const std::uint64_t lo = std::min(tid * chunk, total);
        const std::uint64_t hi = std::min(lo + chunk, total);
        if (lo < hi) {
            std::vector<int> subset(static_cast<std::size_t>(k));
            unrank_colex(lo, k, binomials, subset.data());
            for (std::uint64_t rank = lo; rank < hi; ++rank) {
                if (is_isomorphic(m, induced_substructure(n, subset))) ++count;
                // colex successor
                int j = 0;
                while (j < k) {
                    const int limit = (j + 1 < k) ? subset[static_cast<std::size_t>(j) + 1] - 1
                                                  : n.size();
                    if (subset[static_cast<std::size_t>(j)] < limit) break;
                    ++j;
                }
                if (j < k) {
                    ++subset[static_cast<std::size_t>(j)];
                    for (int q = 0; q < j; ++q) subset[static_cast<std::size_t>(q)] = q + 1;
                }
            }
        }
    }
    return count;
}

std::uint64_t count_homomorphisms(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() == 0) return 1;
    if (n.size() == 0) return 0;
    RelationTables nt(n);
    return scan_maps(m, n, false, [&](const int* f0) { return hom_at(m, nt, f0); });
}

std::uint64_t count_injective_homomorphisms(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() == 0) return 1;
    if (n.size() < m.size()) return 0;
    RelationTables nt(n);
    return scan_maps(m, n, true, [&](const int* f0) { return hom_at(m, nt, f0); });
}

std::uint64_t count_embeddings(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() == 0) return 1;
    if (n.size() < m.size()) return 0;
    RelationTables mt(m);
    RelationTables nt(n);
    return scan_maps(m, n, true, [&](const int* f0) { return emb_at(m, mt, nt, f0); });
}

namespace serial {

std::uint64_t count_induced_copies(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() > n.size()) return 0;
    if (m.size() == 0) return 1;
    const int k = m.size();
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) subset[static_cast<std::size_t>(j)] = j + 1;
    std::uint64_t count = 0;
    while (true) {
        if (is_isomorphic(m, induced_substructure(n, subset))) ++count;
        // next k-combination of [n] in lexicographic order
        int j = k - 1;
        while (j >= 0 && subset[static_cast<std::size_t>(j)] == n.size() - (k - 1 - j)) --j;
        if (j < 0) break;
        ++subset[static_cast<std::size_t>(j)];
        for (int q = j + 1; q < k; ++q)
            subset[static_cast<std::size_t>(q)] = subset[static_cast<std::size_t>(q) - 1] + 1;
    }
    return count;
}

std::uint64_t count_homomorphisms(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() == 0) return 1;
    if (n.size() == 0) return 0;
    map_space(m, n); // budget check
    RelationTables nt(n);
    const int msize = m.size();
    const int nsize = n.size();
    std::vector<int> f0(static_cast<std::size_t>(msize), 0);
    std::uint64_t count = 0;
    while (true) {
        if (hom_at(m, nt, f0.data())) ++count;
        int j = 0;
        while (j < msize && f0[static_cast<std::size_t>(j)] == nsize - 1) {
            f0[static_cast<std::size_t>(j)] = 0;
            ++j;
        }
        if (j == msize) break;
        ++f0[static_cast<std::size_t>(j)];
    }
    return count;
}

std::uint64_t count_injective_homomorphisms(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() == 0) return 1;
    if (n.size() < m.size()) return 0;
    RelationTables nt(n);
    std::vector<int> f0(static_cast<std::size_t>(m.size()));
    std::vector<char> used(static_cast<std::size_t>(n.size()), 0);
    std::uint64_t count = 0;
    injective_backtrack(m.size(), n.size(), f0.data(), used.data(), 0,
                        [&] { count += hom_at(m, nt, f0.data()) ? 1 : 0; });
    return count;
}

std::uint64_t count_embeddings(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() == 0) return 1;
    if (n.size() < m.size()) return 0;
    RelationTables mt(m);
    RelationTables nt(n);
    std::vector<int> f0(static_cast<std::size_t>(m.size()));
    std::vector<char> used(static_cast<std::size_t>(n.size()), 0);
    std::uint64_t count = 0;
    injective_backtrack(m.size(), n.size(), f0.data(), used.data(), 0,
                        [&] { count += emb_at(m, mt, nt, f0.data()) ? 1 : 0; });
    return count;
}

} // namespace serial

} // namespace relim
