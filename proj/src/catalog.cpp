#include "relim/catalog.hpp"

#include <algorithm>

#include "relim/errors.hpp"
#include "relim/rng.hpp"

namespace relim {

namespace {

// Relation membership bitstring under a relabeling perm (perm[old-1] = new).
std::string relation_bits(const Structure& s, const std::vector<int>& perm) {
    std::string bits;
    for (int i = 0; i < s.sig().count(); ++i) {
        const int r = s.sig().arity(i);
        std::vector<int> t(static_cast<std::size_t>(r), 1);
        std::vector<int> image(static_cast<std::size_t>(r));
        if (s.size() == 0) continue;
        while (true) {
            for (std::size_t q = 0; q < t.size(); ++q)
                image[q] = perm[static_cast<std::size_t>(t[q]) - 1];
            bits += s.has_tuple(i, image) ? '1' : '0';
            int q = r - 1;
            while (q >= 0 && t[static_cast<std::size_t>(q)] == s.size()) {
                t[static_cast<std::size_t>(q)] = 1;
                --q;
            }
            if (q < 0) break;
            ++t[static_cast<std::size_t>(q)];
        }
    }
    return bits;
}

} // namespace

std::string canonical_key(const Structure& s) {
    std::vector<int> perm(static_cast<std::size_t>(s.size()));
    for (int j = 0; j < s.size(); ++j) perm[static_cast<std::size_t>(j)] = j + 1;
    std::string best = relation_bits(s, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::string bits = relation_bits(s, perm);
        if (bits < best) best = std::move(bits);
    }
    return best;
}

std::vector<Structure> isomorphism_types(const Signature& sig, int k) {
    if (k < 0) throw DomainError("pattern size must be >= 0");
    if (k == 0) return {Structure::empty(sig, 0)};
    std::uint64_t slots = 0;
    for (int i = 0; i < sig.count(); ++i) {
        std::uint64_t cells = 1;
        for (int q = 0; q < sig.arity(i); ++q) cells *= static_cast<std::uint64_t>(k);
        slots += cells;
    }
    if (slots > 20) throw ResourceError("labeled structure enumeration exceeds the budget");

    std::vector<Structure> types;
    std::unordered_map<std::string, int> seen;
    for (std::uint64_t bits = 0; bits < (1ULL << slots); ++bits) {
        std::vector<TupleSet> rels(static_cast<std::size_t>(sig.count()));
        std::uint64_t slot = 0;
        for (int i = 0; i < sig.count(); ++i) {
            const int r = sig.arity(i);
            std::vector<int> t(static_cast<std::size_t>(r), 1);
            while (true) {
                if (bits & (1ULL << slot)) rels[static_cast<std::size_t>(i)].push_back(t);
                ++slot;
                int q = r - 1;
                while (q >= 0 && t[static_cast<std::size_t>(q)] == k) {
                    t[static_cast<std::size_t>(q)] = 1;
                    --q;
                }
                if (q < 0) break;
                ++t[static_cast<std::size_t>(q)];
            }
        }
        Structure s(sig, k, std::move(rels));
        std::string key = canonical_key(s);
        if (seen.emplace(std::move(key), static_cast<int>(types.size())).second)
            types.push_back(std::move(s));
    }
    return types;
}

Structure random_structure(const Signature& sig, int m, std::uint64_t seed, double density) {
    if (m < 0) throw DomainError("structure size must be >= 0");
    if (!(density >= 0.0 && density <= 1.0)) throw DomainError("density outside [0,1]");
    std::vector<TupleSet> rels(static_cast<std::size_t>(sig.count()));
    for (int i = 0; i < sig.count(); ++i) {
        if (m == 0) break;
        const std::uint64_t stream = derive(seed, static_cast<std::uint64_t>(i) + 0x517cc1b7ULL);
        const int r = sig.arity(i);
        std::vector<int> t(static_cast<std::size_t>(r), 1);
        std::uint64_t rank = 0;
        while (true) {
            if (unit_double(derive(stream, rank)) < density)
                rels[static_cast<std::size_t>(i)].push_back(t);
            ++rank;
            int q = r - 1;
            while (q >= 0 && t[static_cast<std::size_t>(q)] == m) {
                t[static_cast<std::size_t>(q)] = 1;
                --q;
            }
            if (q < 0) break;
            ++t[static_cast<std::size_t>(q)];
        }
    }
    return Structure(sig, m, std::move(rels));
}

TypeCatalog::TypeCatalog(Signature sig, int k) : sig_(std::move(sig)), k_(k) {
    types_ = isomorphism_types(sig_, k_);
    for (std::size_t i = 0; i < types_.size(); ++i)
        by_key_.emplace(canonical_key(types_[i]), static_cast<int>(i));
}

int TypeCatalog::index_of(const Structure& s) const {
    if (s.size() != k_) throw DomainError("structure size does not match the catalog");
    auto it = by_key_.find(canonical_key(s));
    if (it == by_key_.end()) throw DomainError("structure type missing from the catalog");
    return it->second;
}

ConvergenceTable convergence_table(const StepLimit& f, int pattern_size, int sample_size,
                                   std::uint64_t trials, std::uint64_t seed) {
    if (pattern_size < 1) throw DomainError("pattern size must be >= 1");
    if (sample_size < pattern_size) throw DomainError("sample size below the pattern size");
    if (trials == 0) throw DomainError("trial count must be >= 1");

    TypeCatalog catalog(f.sig(), pattern_size);
    const std::size_t ntypes = catalog.types().size();

    ConvergenceTable table;
    table.pattern_size = pattern_size;
    table.sample_size = sample_size;
    table.trials = trials;
    table.types = catalog.types();
    table.exact.reserve(ntypes);
    for (const auto& t : catalog.types()) table.exact.push_back(induced_density(t, f));

    // integer per-type counts over all trials; order independent
    std::vector<std::uint64_t> counts(ntypes, 0);
    const int k = pattern_size;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(ntypes, 0);
#pragma omp for nowait schedule(dynamic)
        for (std::int64_t trial = 0; trial < static_cast<std::int64_t>(trials); ++trial) {
            const Structure sample =
                sample_structure(f, sample_size, derive(seed, static_cast<std::uint64_t>(trial)));
            std::vector<int> subset(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) subset[static_cast<std::size_t>(j)] = j + 1;
            while (true) {
                ++local[static_cast<std::size_t>(
                    catalog.index_of(induced_substructure(sample, subset)))];
                int j = k - 1;
                while (j >= 0 && subset[static_cast<std::size_t>(j)] == sample_size - (k - 1 - j)) --j;
                if (j < 0) break;
                ++subset[static_cast<std::size_t>(j)];
                for (int q = j + 1; q < k; ++q)
                    subset[static_cast<std::size_t>(q)] = subset[static_cast<std::size_t>(q) - 1] + 1;
            }
        }
#pragma omp critical
        for (std::size_t i = 0; i < ntypes; ++i) counts[i] += local[i];
    }

    const mpz_class denom = binomial(static_cast<unsigned>(sample_size), static_cast<unsigned>(k)) *
                            mpz_class(static_cast<unsigned long>(trials));
    table.empirical.reserve(ntypes);
    for (std::size_t i = 0; i < ntypes; ++i)
        table.empirical.push_back(ratio(mpz_class(static_cast<unsigned long>(counts[i])), denom));
    return table;
}

} // namespace relim
