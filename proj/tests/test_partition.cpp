#include "doctest.h"

#include <set>

#include "relim/errors.hpp"
#include "relim/partition.hpp"

#include "helpers.hpp"

using namespace relim;

TEST_SUITE("partition") {

TEST_CASE("enumeration sizes follow the Bell numbers") {
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(2).size() == 2);
    CHECK(partitions_of(3).size() == 5);
    CHECK(partitions_of(4).size() == 15);
    CHECK(partitions_of(5).size() == 52);
}

TEST_CASE("enumeration matches the recursive oracle as a set") {
    for (int t = 1; t <= 5; ++t) {
        const auto got = partitions_of(t);
        const auto expected = testutil::partitions_oracle(t);
        REQUIRE(got.size() == expected.size());
        std::set<std::vector<std::vector<int>>> canon;
        for (const auto& p : got) canon.insert(p.classes());
        for (auto classes : expected) {
            for (auto& cls : classes) std::sort(cls.begin(), cls.end());
            std::sort(classes.begin(), classes.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
            CHECK(canon.count(classes) == 1);
        }
    }
}

TEST_CASE("ternary partitions come out in the documented order") {
    const auto parts = partitions_of(3);
    REQUIRE(parts.size() == 5);
    CHECK(parts[0].classes() == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(parts[1].classes() == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(parts[2].classes() == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK(parts[3].classes() == std::vector<std::vector<int>>{{1}, {2, 3}});
    CHECK(parts[4].classes() == std::vector<std::vector<int>>{{1}, {2}, {3}});
}

TEST_CASE("partitions_of rejects t = 0") {
    CHECK_THROWS_AS(partitions_of(0), DomainError);
}

TEST_CASE("kernel partition of a tuple") {
    const std::vector<int> constant{7, 7, 7};
    CHECK(induced_partition(constant).classes() == std::vector<std::vector<int>>{{1, 2, 3}});
    const std::vector<int> first_pair{4, 4, 9};
    CHECK(induced_partition(first_pair).classes() == std::vector<std::vector<int>>{{1, 2}, {3}});
    const std::vector<int> outer_pair{4, 9, 4};
    CHECK(induced_partition(outer_pair).classes() == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK_THROWS_AS(induced_partition(std::vector<int>{}), DomainError);
}

TEST_CASE("dedup keeps first occurrences") {
    CHECK(dedup(std::vector<int>{7, 7, 7}) == std::vector<int>{7});
    CHECK(dedup(std::vector<int>{4, 9, 4}) == std::vector<int>{4, 9});
    CHECK(dedup(std::vector<int>{1, 2, 3}) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(dedup(std::vector<int>{}), DomainError);
}

TEST_CASE("dedup length and distinctness match the kernel partition") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        std::vector<int> tuple;
        const int t = 1 + static_cast<int>(bounded(derive(s, 1), 5));
        for (int j = 0; j < t; ++j)
            tuple.push_back(1 + static_cast<int>(bounded(derive(s, 10 + static_cast<std::uint64_t>(j)), 4)));
        const auto p = induced_partition(tuple);
        const auto d = dedup(tuple);
        CHECK(static_cast<int>(d.size()) == p.class_count());
        std::set<int> distinct(tuple.begin(), tuple.end());
        CHECK(d.size() == distinct.size());
        CHECK(expand(p, d) == tuple);
    }
}

TEST_CASE("partition text form round-trips") {
    for (const auto& p : partitions_of(4)) {
        CHECK(parse_partition(p.to_string()) == p);
        CHECK(partition_rank(p) >= 0);
    }
    CHECK(parse_partition("1,2|3").classes() == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK_THROWS_AS(parse_partition("1,2|2"), DomainError);
    CHECK_THROWS_AS(parse_partition("1|3"), DomainError);
}

} // TEST_SUITE
