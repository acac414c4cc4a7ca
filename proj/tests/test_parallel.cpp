#include "doctest.h"

#include "relim/kernels.hpp"
#include "relim/limit.hpp"

#include "helpers.hpp"

using namespace relim;
using namespace testutil;

// The OpenMP kernels and their serial references must agree exactly. The two
// sides use different enumeration schemes (rank spaces vs nested loops and
// backtracking), so agreement is a real check, not a tautology.

TEST_SUITE("parallel") {

TEST_CASE("counting kernels match their serial references") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        const Signature sig = random_signature(s);
        const int msize = 1 + static_cast<int>(bounded(derive(s, 1), 4));
        const int nsize = 1 + static_cast<int>(bounded(derive(s, 2), 7));
        const Structure m = random_structure(sig, msize, derive(s, 3));
        const Structure n = random_structure(sig, nsize, derive(s, 4));
        CHECK(count_induced_copies(m, n) == serial::count_induced_copies(m, n));
        CHECK(count_homomorphisms(m, n) == serial::count_homomorphisms(m, n));
        CHECK(count_injective_homomorphisms(m, n) == serial::count_injective_homomorphisms(m, n));
        CHECK(count_embeddings(m, n) == serial::count_embeddings(m, n));
    }
}

TEST_CASE("realize matches its serial reference") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Signature sig = random_signature(s);
        const int l = 1 + static_cast<int>(bounded(derive(s, 11), 3));
        const StepLimit f = random_step_limit(sig, l, derive(s, 12));
        const int m = 1 + static_cast<int>(bounded(derive(s, 13), 9));
        const SeedTuple y = sample_seed(m, std::max(1, std::min(sig.max_arity(), m)), derive(s, 14));
        CHECK(realize(f, m, y) == serial::realize(f, m, y));
    }
}

TEST_CASE("embedding measure matches its serial reference") {
    for (std::uint64_t s = 0; s < 15; ++s) {
        const Signature sig = random_signature(s);
        const int l = 1 + static_cast<int>(bounded(derive(s, 21), 3));
        const StepLimit f = random_step_limit(sig, l, derive(s, 22));
        const Structure m = random_structure(sig, 1 + static_cast<int>(bounded(derive(s, 23), 3)),
                                             derive(s, 24));
        CHECK(embedding_measure(m, f) == serial::embedding_measure(m, f));
    }
}

TEST_CASE("monte carlo is independent of the thread schedule") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        const Signature sig = random_signature(s);
        const int l = 1 + static_cast<int>(bounded(derive(s, 31), 3));
        const StepLimit f = random_step_limit(sig, l, derive(s, 32));
        const Structure m = random_structure(sig, 1 + static_cast<int>(bounded(derive(s, 33), 3)),
                                             derive(s, 34));
        CHECK(mc_embedding_frequency(m, f, 2000, derive(s, 35)) ==
              serial::mc_embedding_frequency(m, f, 2000, derive(s, 35)));
    }
}

} // TEST_SUITE
