#include <catch2/catch_amalgamated.hpp>

#include "symchar/partition.hpp"

using namespace symchar;

TEST_CASE("partition construction and accessors") {
    Partition empty;
    CHECK(empty.n() == 0);
    CHECK(empty.length() == 0);
    CHECK(empty.largest_part() == 0);
    CHECK(empty.label() == "");

    Partition la(std::vector<int>{3, 1});
    CHECK(la.n() == 4);
    CHECK(la.length() == 2);
    CHECK(la.largest_part() == 3);
    CHECK(la.label() == "3,1");

    CHECK_THROWS_AS(Partition(std::vector<int>{1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{-1}), std::invalid_argument);
}

TEST_CASE("enumeration in reverse-lexicographic order") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});

    std::vector<Partition> p4 = enumerate_partitions(4);
    std::vector<Partition> expected;
    expected.emplace_back(std::vector<int>{4});
    expected.emplace_back(std::vector<int>{3, 1});
    expected.emplace_back(std::vector<int>{2, 2});
    expected.emplace_back(std::vector<int>{2, 1, 1});
    expected.emplace_back(std::vector<int>{1, 1, 1, 1});
    CHECK(p4 == expected);

    CHECK(enumerate_partitions(10).size() == 42);

    // strictly lex-decreasing, first (N), last (1^N), count = p(N)
    for (int n = 1; n <= 40; ++n) {
        long count = 0;
        std::vector<int> prev;
        bool ordered = true;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            if (count > 0 && !(parts < prev)) ordered = false;
            prev = parts;
            ++count;
        });
        CHECK(ordered);
        CHECK(BigInt(count) == partition_count(n));
        CHECK(prev == std::vector<int>(static_cast<std::size_t>(n), 1));
    }
}

TEST_CASE("pentagonal recurrence values") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(1) == 1);
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(10) == 42);
    CHECK(partition_count(100) == 190569292);
    CHECK_THROWS_AS(partition_count(-1), std::invalid_argument);
}

TEST_CASE("bounded part counts") {
    CHECK(bounded_count(4, 2) == 3);  // (2,2),(2,1,1),(1,1,1,1)
    CHECK(bounded_count(5, 1) == 1);
    CHECK(bounded_count(0, 7) == 1);
    for (int n = 0; n <= 50; ++n) CHECK(bounded_count(n, n) == partition_count(n));
}

TEST_CASE("largest-part decomposition sums to p(n)") {
    for (int n = 1; n <= 60; ++n) {
        std::vector<BigInt> d = largest_part_counts(n);
        BigInt total = 0;
        for (int t = 1; t <= n; ++t) {
            CHECK(d[static_cast<std::size_t>(t)] == bounded_count(n - t, t));
            total += d[static_cast<std::size_t>(t)];
        }
        CHECK(total == partition_count(n));
    }
}

TEST_CASE("conjugation") {
    CHECK(conjugate(Partition(std::vector<int>{4})) == Partition(std::vector<int>{1, 1, 1, 1}));
    CHECK(conjugate(Partition(std::vector<int>{2, 2})) == Partition(std::vector<int>{2, 2}));
    CHECK(conjugate(Partition(std::vector<int>{3, 1})) == Partition(std::vector<int>{2, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});

    for (int n = 0; n <= 30; ++n)
        for_each_partition(n, [&](const std::vector<int>& parts) {
            Partition la(parts);
            CHECK(conjugate(conjugate(la)) == la);
        });
}
