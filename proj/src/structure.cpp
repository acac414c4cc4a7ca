#include "relim/structure.hpp"

#include <algorithm>
#include <functional>

#include "relim/errors.hpp"

namespace relim {

Structure::Structure(Signature sig, int size, std::vector<TupleSet> relations)
    : sig_(std::move(sig)), size_(size), relations_(std::move(relations)) {
    if (size_ < 0) throw DomainError("structure size must be >= 0");
    if (static_cast<int>(relations_.size()) != sig_.count())
        throw DomainError("one tuple set per relation symbol required");
    for (int i = 0; i < sig_.count(); ++i) {
        auto& rel = relations_[static_cast<std::size_t>(i)];
        const int r = sig_.arity(i);
        for (const auto& t : rel) {
            if (static_cast<int>(t.size()) != r)
                throw DomainError("tuple length does not match arity of " + sig_.name(i));
            for (int a : t)
                if (a < 1 || a > size_)
                    throw DomainError("tuple entry out of range in " + sig_.name(i));
        }
        std::sort(rel.begin(), rel.end());
        rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    }
}

Structure Structure::empty(Signature sig, int size) {
    std::vector<TupleSet> rels(static_cast<std::size_t>(sig.count()));
    return Structure(std::move(sig), size, std::move(rels));
}

bool Structure::has_tuple(int i, std::span<const int> tuple) const {
    const auto& rel = relations_[static_cast<std::size_t>(i)];
    return std::binary_search(rel.begin(), rel.end(), tuple,
                              [](const auto& a, const auto& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(),
                                                                      b.begin(), b.end());
                              });
}

std::size_t Structure::total_tuples() const {
    std::size_t n = 0;
    for (const auto& rel : relations_) n += rel.size();
    return n;
}

Structure induced_substructure(const Structure& n, const std::vector<int>& subset) {
    if (subset.empty()) throw DomainError("induced substructure on empty set");
    std::vector<int> a = subset;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.size() != subset.size()) throw DomainError("subset has repeated elements");
    for (int x : a)
        if (x < 1 || x > n.size()) throw DomainError("subset element out of range");

    // new label of old element a[k] is k+1
    std::vector<int> newlabel(static_cast<std::size_t>(n.size()) + 1, 0);
    for (std::size_t k = 0; k < a.size(); ++k)
        newlabel[static_cast<std::size_t>(a[k])] = static_cast<int>(k) + 1;

    std::vector<TupleSet> rels(static_cast<std::size_t>(n.sig().count()));
    for (int i = 0; i < n.sig().count(); ++i) {
        for (const auto& t : n.relation(i)) {
            Tuple mapped;
            mapped.reserve(t.size());
            bool inside = true;
            for (int x : t) {
                if (newlabel[static_cast<std::size_t>(x)] == 0) { inside = false; break; }
                mapped.push_back(newlabel[static_cast<std::size_t>(x)]);
            }
            if (inside) rels[static_cast<std::size_t>(i)].push_back(std::move(mapped));
        }
    }
    return Structure(n.sig(), static_cast<int>(a.size()), std::move(rels));
}

Structure relabel(const Structure& n, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != n.size()) throw DomainError("relabel: wrong permutation length");
    std::vector<bool> hit(perm.size(), false);
    for (int x : perm) {
        if (x < 1 || x > n.size() || hit[static_cast<std::size_t>(x) - 1])
            throw DomainError("relabel: not a permutation of [size]");
        hit[static_cast<std::size_t>(x) - 1] = true;
    }
    std::vector<TupleSet> rels(static_cast<std::size_t>(n.sig().count()));
    for (int i = 0; i < n.sig().count(); ++i)
        for (const auto& t : n.relation(i)) {
            Tuple mapped;
            mapped.reserve(t.size());
            for (int x : t) mapped.push_back(perm[static_cast<std::size_t>(x) - 1]);
            rels[static_cast<std::size_t>(i)].push_back(std::move(mapped));
        }
    return Structure(n.sig(), n.size(), std::move(rels));
}

namespace {

void check_map(const std::vector<int>& f, const Structure& m, const Structure& n, bool injective) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (static_cast<int>(f.size()) != m.size()) throw DomainError("map not total on [size of M]");
    for (int x : f)
        if (x < 1 || x > n.size()) throw DomainError("map value out of range");
    if (injective) {
        std::vector<int> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DomainError("map is not injective");
    }
}

// Enumerate all r-tuples over [m], calling fn(tuple). Returns false if fn
// ever returns false.
bool all_tuples(int m, int r, const std::function<bool(std::span<const int>)>& fn) {
    std::vector<int> t(static_cast<std::size_t>(r), 1);
    if (m == 0) return true;
    while (true) {
        if (!fn(t)) return false;
        int j = r - 1;
        while (j >= 0 && t[static_cast<std::size_t>(j)] == m) {
            t[static_cast<std::size_t>(j)] = 1;
            --j;
        }
        if (j < 0) return true;
        ++t[static_cast<std::size_t>(j)];
    }
}

} // namespace

bool is_homomorphism(const std::vector<int>& f, const Structure& m, const Structure& n) {
    check_map(f, m, n, false);
    for (int i = 0; i < m.sig().count(); ++i)
        for (const auto& t : m.relation(i)) {
            Tuple image;
            image.reserve(t.size());
            for (int x : t) image.push_back(f[static_cast<std::size_t>(x) - 1]);
            if (!n.has_tuple(i, image)) return false;
        }
    return true;
}

bool is_embedding(const std::vector<int>& f, const Structure& m, const Structure& n) {
    check_map(f, m, n, true);
    for (int i = 0; i < m.sig().count(); ++i) {
        const int r = m.sig().arity(i);
        Tuple image(static_cast<std::size_t>(r));
        bool ok = all_tuples(m.size(), r, [&](std::span<const int> t) {
            for (std::size_t k = 0; k < t.size(); ++k)
                image[k] = f[static_cast<std::size_t>(t[k]) - 1];
            return m.has_tuple(i, t) == n.has_tuple(i, image);
        });
        if (!ok) return false;
    }
    return true;
}

namespace {

// Per-vertex profile: for each symbol and tuple position, how many relation
// tuples hold the vertex at that position. Isomorphisms preserve profiles.
std::vector<std::vector<int>> vertex_profiles(const Structure& s) {
    int slots = 0;
    for (int i = 0; i < s.sig().count(); ++i) slots += s.sig().arity(i);
    std::vector<std::vector<int>> prof(static_cast<std::size_t>(s.size()),
                                       std::vector<int>(static_cast<std::size_t>(slots), 0));
    int base = 0;
    for (int i = 0; i < s.sig().count(); ++i) {
        for (const auto& t : s.relation(i))
            for (std::size_t q = 0; q < t.size(); ++q)
                ++prof[static_cast<std::size_t>(t[q]) - 1][static_cast<std::size_t>(base) + q];
        base += s.sig().arity(i);
    }
    return prof;
}

struct BijectionSearch {
    const Structure& m;
    const Structure& n;
    std::vector<int> image;      // image[j] = f(j+1), 0 = unassigned
    std::vector<bool> used;      // targets already taken
    std::vector<std::vector<int>> prof_m, prof_n;
    std::uint64_t nodes = 0;
    std::uint64_t node_budget;
    bool count_all = false;
    std::uint64_t found = 0;

    BijectionSearch(const Structure& m_, const Structure& n_, std::uint64_t budget)
        : m(m_), n(n_),
          image(static_cast<std::size_t>(m_.size()), 0),
          used(static_cast<std::size_t>(n_.size()), false),
          prof_m(vertex_profiles(m_)), prof_n(vertex_profiles(n_)),
          node_budget(budget) {}

    // Check all tuples within [1..depth] that involve vertex `depth`.
    bool consistent(int depth) {
        for (int i = 0; i < m.sig().count(); ++i) {
            const int r = m.sig().arity(i);
            Tuple t(static_cast<std::size_t>(r));
            Tuple img(static_cast<std::size_t>(r));
            bool ok = true;
            std::function<bool(int)> rec = [&](int pos) -> bool {
                if (pos == r) {
                    bool touches = false;
                    for (int x : t)
                        if (x == depth) { touches = true; break; }
                    if (!touches) return true;
                    for (int q = 0; q < r; ++q)
                        img[static_cast<std::size_t>(q)] =
                            image[static_cast<std::size_t>(t[static_cast<std::size_t>(q)]) - 1];
                    return m.has_tuple(i, t) == n.has_tuple(i, img);
                }
                for (int v = 1; v <= depth; ++v) {
                    t[static_cast<std::size_t>(pos)] = v;
                    if (!rec(pos + 1)) return false;
                }
                return true;
            };
            ok = rec(0);
            if (!ok) return false;
        }
        return true;
    }

    // Returns true if an embedding bijection was found (when !count_all).
    bool search(int depth) {
        if (++nodes > node_budget)
            throw ResourceError("bijection search exceeded the enumeration budget");
        if (depth == m.size()) {
            ++found;
            return !count_all;
        }
        const int j = depth + 1;
        for (int v = 1; v <= n.size(); ++v) {
            if (used[static_cast<std::size_t>(v) - 1]) continue;
            if (prof_m[static_cast<std::size_t>(j) - 1] != prof_n[static_cast<std::size_t>(v) - 1])
                continue;
            image[static_cast<std::size_t>(j) - 1] = v;
            used[static_cast<std::size_t>(v) - 1] = true;
            if (consistent(j) && search(depth + 1)) return true;
            image[static_cast<std::size_t>(j) - 1] = 0;
            used[static_cast<std::size_t>(v) - 1] = false;
        }
        return false;
    }
};

constexpr std::uint64_t kSearchNodeBudget = 200'000'000;

} // namespace

bool is_isomorphic(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() != n.size()) return false;
    for (int i = 0; i < m.sig().count(); ++i)
        if (m.relation(i).size() != n.relation(i).size()) return false;
    if (m.size() == 0) return true;
    BijectionSearch s(m, n, kSearchNodeBudget);
    return s.search(0);
}

std::uint64_t automorphism_count(const Structure& m) {
    if (m.size() == 0) return 1;
    BijectionSearch s(m, m, kSearchNodeBudget);
    s.count_all = true;
    s.search(0);
    return s.found;
}

} // namespace relim
