#include "doctest.h"

#include "relim/errors.hpp"
#include "relim/kernels.hpp"
#include "relim/removal.hpp"

#include "helpers.hpp"

using namespace relim;
using namespace testutil;

namespace {

// Complete bipartite symmetric digraph on [m], parts split at `cut`.
Structure bipartite_symmetric(int m, int cut) {
    TupleSet arcs;
    for (int a = 1; a <= cut; ++a)
        for (int b = cut + 1; b <= m; ++b) {
            arcs.push_back({a, b});
            arcs.push_back({b, a});
        }
    return Structure(binary_signature(), m, {arcs});
}

} // namespace

TEST_SUITE("removal") {

TEST_CASE("distance on identical, toggled and swapped structures") {
    const Structure n = random_structure(binary_signature(), 5, 77);
    CHECK(distance_d(n, n) == Rational(0));

    const Structure toggled = toggle_random_tuples(n, 0, 1);
    CHECK(toggled == n);

    // flip one distinct-entry arc by hand
    auto rels = n.relations();
    const Tuple arc{1, 2};
    auto it = std::lower_bound(rels[0].begin(), rels[0].end(), arc);
    if (it != rels[0].end() && *it == arc)
        rels[0].erase(it);
    else
        rels[0].insert(it, arc);
    const Structure flipped(n.sig(), n.size(), std::move(rels));
    CHECK(distance_d(n, flipped) == ratio(1, 25));
    CHECK(distance_d(flipped, n) == ratio(1, 25));
}

TEST_CASE("loop toggles weigh by the merged-key denominator") {
    const Structure a = Structure::empty(binary_signature(), 5);
    const Structure b(binary_signature(), 5, {{{3, 3}}});
    // the loop lives at the single-class key: denominator 5^1
    CHECK(distance_d(a, b) == ratio(1, 5));
}

TEST_CASE("distance is a metric on random same-universe triples") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Signature sig = random_signature(s);
        const int m = 1 + static_cast<int>(bounded(derive(s, 1), 6));
        const Structure a = random_structure(sig, m, derive(s, 2));
        const Structure b = random_structure(sig, m, derive(s, 3));
        const Structure c = random_structure(sig, m, derive(s, 4));
        CHECK(distance_d(a, a) == Rational(0));
        CHECK(distance_d(a, b) == distance_d(b, a));
        CHECK(distance_d(a, c) <= distance_d(a, b) + distance_d(b, c));
        if (distance_d(a, b) == Rational(0)) CHECK(a == b);
    }
}

TEST_CASE("size or signature mismatches are rejected") {
    const Structure a = directed_edge2();
    CHECK_THROWS_AS(distance_d(a, Structure::empty(binary_signature(), 3)), DomainError);
    CHECK_THROWS_AS(distance_d(a, Structure::empty(Signature({{"S", 2}}), 2)), DomainError);
}

TEST_CASE("induced copy counts") {
    const Structure edge = directed_edge2();
    const Structure cycle = directed_cycle3();
    CHECK(count_induced_copies(cycle, cycle) == 1);
    CHECK(count_induced_copies(edge, cycle) == 3);
    CHECK(count_induced_copies(cycle, edge) == 0);
}

TEST_CASE("family freeness") {
    const Signature sig = binary_signature();
    const Structure cycle = directed_cycle3();
    CHECK(is_family_free(cycle, ForbiddenFamily::of(sig, {}), 3));
    CHECK_FALSE(is_family_free(cycle, ForbiddenFamily::of(sig, {cycle}), 3));
    CHECK(is_family_free(Structure::empty(sig, 4),
                         ForbiddenFamily::of(sig, {directed_edge2()}), 4));
    CHECK_THROWS_AS(ForbiddenFamily::of(sig, {directed_edge2(),
                                              Structure(sig, 2, {{{2, 1}}})}),
                    DomainError);
    CHECK_THROWS_AS(ForbiddenFamily::of(sig, {Structure::empty(sig, 0)}), DomainError);
}

TEST_CASE("repair leaves free structures untouched") {
    const Structure n = bipartite_symmetric(8, 4);
    const auto family = ForbiddenFamily::of(binary_signature(), {symmetric_triangle()});
    const auto [repaired, report] = greedy_removal(n, family, 3, 100);
    CHECK(repaired == n);
    CHECK(report.success);
    CHECK(report.iterations == 0);
    CHECK(report.distance == Rational(0));
}

TEST_CASE("one triangle needs one arc deletion under the tie-break rule") {
    Structure n(binary_signature(), 5,
                {{{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}});
    const auto family = ForbiddenFamily::of(binary_signature(), {symmetric_triangle()});
    const auto [repaired, report] = greedy_removal(n, family, 3, 100);
    CHECK(report.success);
    CHECK(report.iterations == 1);
    // the least arc of the copy goes first
    CHECK_FALSE(repaired.has_tuple(0, std::vector<int>{1, 2}));
    CHECK(repaired.has_tuple(0, std::vector<int>{2, 1}));
    CHECK(report.distance == ratio(1, 25));
    CHECK(is_family_free(repaired, family, 3));
}

TEST_CASE("planted triangles are repaired within twice the plant size") {
    const Structure base = bipartite_symmetric(10, 5);
    const auto family = ForbiddenFamily::of(binary_signature(), {symmetric_triangle()});
    for (std::uint64_t s = 0; s < 20; ++s) {
        // complete a triangle on two same-side vertices and one crossing vertex
        auto rels = base.relations();
        const int a = 1 + static_cast<int>(bounded(derive(s, 1), 4));
        const int b = a + 1;
        rels[0].push_back({a, b});
        rels[0].push_back({b, a});
        const Structure planted(base.sig(), base.size(), std::move(rels));
        CHECK_FALSE(is_family_free(planted, family, 3));
        const auto [repaired, report] = greedy_removal(planted, family, 3, 1000);
        CHECK(report.success);
        CHECK(is_family_free(repaired, family, 3));
        CHECK(distance_d(planted, repaired) <= ratio(4, 100));
    }
}

TEST_CASE("an edgeless pattern forces insertions, least key first") {
    // destroying a copy of the edgeless pair needs an insertion; the merged
    // key (loops) precedes the distinct key, so loops go in first
    const Signature sig = binary_signature();
    const auto family = ForbiddenFamily::of(sig, {Structure::empty(sig, 2)});
    const auto [repaired, report] = greedy_removal(Structure::empty(sig, 3), family, 2, 100);
    CHECK(report.success);
    CHECK(report.iterations == 2);
    CHECK(repaired.relation(0) == TupleSet{{1, 1}, {2, 2}});
    CHECK(is_family_free(repaired, family, 2));
}

TEST_CASE("budget exhaustion is reported, not raised") {
    // two vertex-disjoint triangles, budget for only one repair step
    TupleSet arcs;
    for (int base : {0, 3})
        for (int x = 1; x <= 3; ++x)
            for (int y = 1; y <= 3; ++y)
                if (x != y) arcs.push_back({base + x, base + y});
    const Structure n(binary_signature(), 6, {arcs});
    const auto family = ForbiddenFamily::of(binary_signature(), {symmetric_triangle()});
    const auto [repaired, report] = greedy_removal(n, family, 3, 1);
    CHECK_FALSE(report.success);
    CHECK(report.iterations == 1);
    CHECK(report.distance == ratio(1, 36));
    CHECK_FALSE(is_family_free(repaired, family, 3));
    // with budget for both copies the repair completes
    const auto [fixed, full] = greedy_removal(n, family, 3, 10);
    CHECK(full.success);
    CHECK(full.iterations == 2);
    CHECK(is_family_free(fixed, family, 3));
}

TEST_CASE("report edits are consistent with the distance") {
    const auto family = ForbiddenFamily::of(binary_signature(), {symmetric_triangle()});
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Structure n = random_structure(binary_signature(), 7, derive(s, 7), 0.6);
        const auto [repaired, report] = greedy_removal(n, family, 3, 500);
        Rational from_edits(0);
        for (const auto& [key, count] : report.edits) {
            const auto parts = partitions_of(2);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 7,
                          static_cast<unsigned long>(
                              parts[static_cast<std::size_t>(key.second)].class_count()));
            from_edits += ratio(mpz_class(static_cast<unsigned long>(count)), den);
        }
        CHECK(from_edits == report.distance);
        CHECK(report.distance == distance_d(n, repaired));
        if (report.success) CHECK(is_family_free(repaired, family, 3));
    }
}

TEST_CASE("toggling flips exactly the chosen tuples") {
    const Structure n = Structure::empty(binary_signature(), 6);
    for (int k = 1; k <= 4; ++k) {
        const Structure toggled = toggle_random_tuples(n, k, 99 + static_cast<std::uint64_t>(k));
        CHECK(toggled.total_tuples() == static_cast<std::size_t>(k));
        // toggling the same seed twice undoes itself
        std::size_t flips = 0;
        const DHypFamily a = encode(n);
        const DHypFamily b = encode(toggled);
        for (int pr = 0; pr < a.partition_count_for(0); ++pr) {
            TupleSet diff;
            std::set_symmetric_difference(a.edges(0, pr).begin(), a.edges(0, pr).end(),
                                          b.edges(0, pr).begin(), b.edges(0, pr).end(),
                                          std::back_inserter(diff));
            flips += diff.size();
        }
        CHECK(flips == static_cast<std::size_t>(k));
    }
}

TEST_CASE("experiment rows: empty family always succeeds at distance zero") {
    const auto family = ForbiddenFamily::of(binary_signature(), {});
    const auto rows = removal_experiment(
        family, 0.01,
        [](std::uint64_t trial) {
            return random_structure(binary_signature(), 8, derive(4242, trial));
        },
        6, 3, 100);
    REQUIRE(rows.size() == 6);
    for (const auto& row : rows) {
        CHECK(row.repaired);
        CHECK(row.distance == Rational(0));
        CHECK(row.max_density == Rational(0));
        CHECK(row.iterations == 0);
    }
}

TEST_CASE("experiment csv format") {
    const auto family = ForbiddenFamily::of(binary_signature(), {symmetric_triangle()});
    const Structure base = bipartite_symmetric(8, 4);
    const auto rows = removal_experiment(
        family, 0.05,
        [&](std::uint64_t trial) { return toggle_random_tuples(base, 1, derive(7, trial)); },
        3, 3, 100);
    const std::string csv = experiment_csv(rows);
    CHECK(csv.rfind("trial,size,max_density_num,max_density_den,repaired,d_num,d_den,iterations\n",
                    0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

} // TEST_SUITE
