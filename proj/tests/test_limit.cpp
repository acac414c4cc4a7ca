#include "doctest.h"

#include "relim/catalog.hpp"
#include "relim/errors.hpp"
#include "relim/limit.hpp"
#include "relim/seed.hpp"

#include "helpers.hpp"

using namespace relim;
using namespace testutil;

namespace {

Structure complete_structure(const Signature& sig, int m) {
    std::vector<TupleSet> rels(static_cast<std::size_t>(sig.count()));
    for (int i = 0; i < sig.count(); ++i) {
        const int r = sig.arity(i);
        std::vector<int> t(static_cast<std::size_t>(r), 1);
        if (m == 0) continue;
        while (true) {
            rels[static_cast<std::size_t>(i)].push_back(t);
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

} // namespace

TEST_SUITE("limit") {

TEST_CASE("interval boundaries follow the half-open convention") {
    CHECK(interval_of(0.0, 1) == 1);
    CHECK(interval_of(0.0, 7) == 1);
    CHECK(interval_of(1.0, 4) == 4);
    CHECK(interval_of(0.25, 4) == 2);
    CHECK(interval_of(0.2499999, 4) == 1);
    CHECK(interval_of(0.5, 2) == 2);
    CHECK_THROWS_AS(interval_of(-0.1, 4), DomainError);
    CHECK_THROWS_AS(interval_of(1.1, 4), DomainError);
}

TEST_CASE("seed tuples have one value per indexed subset") {
    CHECK(sample_seed(1, 2, 7).index().count() == 1);
    CHECK(sample_seed(4, 2, 7).index().count() == 10); // 4 singletons + 6 pairs
    const SeedTuple a = sample_seed(5, 3, 99);
    const SeedTuple b = sample_seed(5, 3, 99);
    CHECK(a.values() == b.values());
    const SeedTuple c = sample_seed(5, 3, 100);
    CHECK(a.values() != c.values());
    CHECK_THROWS_AS(sample_seed(0, 2, 7), DomainError);
}

TEST_CASE("complete and empty templates realize to complete and empty structures") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        const Signature sig = random_signature(s);
        const int m = 1 + static_cast<int>(bounded(derive(s, 1), 5));
        const int l = 1 + static_cast<int>(bounded(derive(s, 2), 3));
        const StepLimit all = StepLimit::complete(sig, l);
        const StepLimit none(sig, l);
        CHECK(sample_structure(all, m, derive(s, 3)) == complete_structure(sig, m));
        CHECK(sample_structure(none, m, derive(s, 4)) == Structure::empty(sig, m));
    }
}

TEST_CASE("half-density template gives loop-free symmetric pairs cut at one half") {
    const StepLimit f = half_density_binary();
    const int m = 6;
    const SeedTuple y = sample_seed(m, 2, 2024);
    const Structure n = realize(f, m, y);
    for (int a = 1; a <= m; ++a) {
        CHECK_FALSE(n.has_tuple(0, std::vector<int>{a, a}));
        for (int b = 1; b <= m; ++b) {
            if (a == b) continue;
            const bool expected =
                y.value_for_mask((1ULL << (a - 1)) | (1ULL << (b - 1))) >= 0.5;
            CHECK(n.has_tuple(0, std::vector<int>{a, b}) == expected);
            CHECK(n.has_tuple(0, std::vector<int>{a, b}) ==
                  n.has_tuple(0, std::vector<int>{b, a}));
        }
    }
}

TEST_CASE("realize agrees with the raw-tuple rule on random instances") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        const Signature sig = random_signature(s);
        const int l = 1 + static_cast<int>(bounded(derive(s, 11), 3));
        const StepLimit f = random_step_limit(sig, l, derive(s, 12));
        const int m = 1 + static_cast<int>(bounded(derive(s, 13), 6));
        const SeedTuple y = sample_seed(m, std::max(1, std::min(sig.max_arity(), m)), derive(s, 14));
        CHECK(realize(f, m, y) == realize_oracle(f, m, y));
    }
}

TEST_CASE("realize is exchangeable under universe permutations") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Signature sig = random_signature(s);
        const int l = 1 + static_cast<int>(bounded(derive(s, 21), 3));
        const StepLimit f = random_step_limit(sig, l, derive(s, 22));
        const int m = 1 + static_cast<int>(bounded(derive(s, 23), 6));
        const SeedTuple y = sample_seed(m, std::max(1, std::min(sig.max_arity(), m)), derive(s, 24));
        const auto perm = random_permutation(m, derive(s, 25));
        const Structure left = realize(f, m, permuted_seed(y, perm));
        const Structure right = relabel(realize(f, m, y), inverse_permutation(perm));
        CHECK(left == right);
    }
}

TEST_CASE("embedding measure on small worked examples") {
    const Signature sig = binary_signature();
    SUBCASE("complete template vs complete and incomplete patterns") {
        const StepLimit all = StepLimit::complete(sig, 2);
        CHECK(embedding_measure(complete_structure(sig, 2), all) == Rational(1));
        CHECK(embedding_measure(directed_edge2(), all) == Rational(0));
        CHECK(induced_density(complete_structure(sig, 3), all) == Rational(1));
        CHECK(induced_density(directed_edge2(), all) == Rational(0));
    }
    SUBCASE("half-density symmetric pair") {
        const StepLimit f = half_density_binary();
        const Structure pair(sig, 2, {{{1, 2}, {2, 1}}});
        CHECK(embedding_measure(pair, f) == ratio(1, 2));
        CHECK(induced_density(pair, f) == ratio(1, 2));
    }
}

TEST_CASE("embedding measure matches the midpoint-coloring oracle") {
    for (std::uint64_t s = 0; s < 12; ++s) {
        const Signature sig = random_signature(s);
        const int l = 1 + static_cast<int>(bounded(derive(s, 31), 2));
        const StepLimit f = random_step_limit(sig, l, derive(s, 32));
        const int msize = 1 + static_cast<int>(bounded(derive(s, 33), 2));
        const Structure m = random_structure(sig, msize, derive(s, 34));
        CHECK(embedding_measure(m, f) == embedding_measure_oracle(m, f));
    }
}

TEST_CASE("induced densities of all size-k types sum to one") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        const Signature sig = binary_signature();
        const int l = 1 + static_cast<int>(bounded(derive(s, 41), 3));
        const StepLimit f = random_step_limit(sig, l, derive(s, 42));
        for (int k = 1; k <= 2; ++k) {
            Rational sum(0);
            for (const auto& type : isomorphism_types(sig, k)) sum += induced_density(type, f);
            CHECK(sum == Rational(1));
        }
    }
}

TEST_CASE("convergence tables are exact total-probability splits") {
    const StepLimit f = half_density_binary();
    for (int k = 1; k <= 2; ++k) {
        const auto table = convergence_table(f, k, 4, 40, 17);
        Rational exact_sum(0), empirical_sum(0);
        for (std::size_t i = 0; i < table.types.size(); ++i) {
            exact_sum += table.exact[i];
            empirical_sum += table.empirical[i];
        }
        CHECK(exact_sum == Rational(1));
        CHECK(empirical_sum == Rational(1));
    }
}

TEST_CASE("monte carlo agrees with a direct per-trial replay") {
    const StepLimit f = half_density_binary();
    const Structure pair(binary_signature(), 2, {{{1, 2}, {2, 1}}});
    const std::uint64_t trials = 64;
    const std::uint64_t seed = 5150;
    std::uint64_t hits = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const Structure n = realize(f, 2, sample_seed(2, 2, derive(seed, trial)));
        if (is_embedding({1, 2}, pair, n)) ++hits;
    }
    const double direct = static_cast<double>(hits) / static_cast<double>(trials);
    CHECK(mc_embedding_frequency(pair, f, trials, seed) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("resource guard rejects oversized enumerations") {
    const Signature sig({{"R", 3}});
    const StepLimit f(sig, 3);
    const Structure big = Structure::empty(sig, 12);
    // r([12], 3) has 12 + 66 + 220 = 298 subsets; 3^298 colorings is far
    // beyond the coloring budget
    CHECK_THROWS_AS(embedding_measure(big, f), ResourceError);
}

TEST_CASE("realize validates the seed tuple") {
    const StepLimit f = half_density_binary();
    CHECK_THROWS_AS(realize(f, 3, sample_seed(4, 2, 1)), DomainError);
    CHECK_THROWS_AS(realize(f, 3, sample_seed(3, 1, 1)), DomainError);
}

TEST_CASE("resolution bounds") {
    CHECK_THROWS_AS(StepLimit(binary_signature(), 0), DomainError);
    CHECK_THROWS_AS(StepLimit(binary_signature(), 256), DomainError);
}

} // TEST_SUITE
