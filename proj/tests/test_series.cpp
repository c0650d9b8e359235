#include <catch2/catch_amalgamated.hpp>

#include "symchar/hooks.hpp"
#include "symchar/rng.hpp"
#include "symchar/series.hpp"

using namespace symchar;

namespace {

IntSeries random_series(CounterRng& rng, int degree) {
    IntSeries s(degree);
    for (int i = 0; i <= degree; ++i)
        s[i] = static_cast<long>(rng.next_u64() % 21) - 10;
    return s;
}

}  // namespace

TEST_CASE("ring primitives") {
    // (1 - z) * (1 + z + z^2 + ...) = 1
    IntSeries geo = inv_one_minus(1, 50);
    IntSeries one_minus_z(50);
    one_minus_z[0] = 1;
    one_minus_z[1] = -1;
    CHECK(one_minus_z * geo == IntSeries::one(50));

    // (1 - z^2)^3 = 1 - 3z^2 + 3z^4 - z^6
    IntSeries f(10);
    f[0] = 1;
    f[2] = -1;
    IntSeries cube = f.pow(3);
    IntSeries expected(10);
    expected[0] = 1;
    expected[2] = -3;
    expected[4] = 3;
    expected[6] = -1;
    CHECK(cube == expected);

    CHECK_THROWS_AS(IntSeries(3) * IntSeries(4), guard_error);
}

TEST_CASE("multiplication is commutative and associative") {
    CounterRng rng({2024, 0});
    for (int rep = 0; rep < 20; ++rep) {
        int d = 8 + static_cast<int>(rng.next_u64() % 57);  // up to 64
        IntSeries a = random_series(rng, d);
        IntSeries b = random_series(rng, d);
        IntSeries c = random_series(rng, d);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("euler series carries p(N)") {
    IntSeries f = euler_series(200);
    CHECK(f[0] == 1);
    CHECK(f[4] == 5);
    CHECK(f[100] == 190569292);
    // independent route: product DP vs pentagonal recurrence
    for (int n = 0; n <= 200; ++n) CHECK(f[n] == partition_count(n));

    // and the pentagonal-sparse Euler product is its inverse
    CHECK(f * euler_product(200) == IntSeries::one(200));
}

TEST_CASE("t-core series") {
    IntSeries c3 = tcore_series(3, 24);
    CHECK(c3[4] == 2);

    IntSeries c2 = tcore_series(2, 100);
    for (int n = 0; n <= 100; ++n) {
        bool triangular = false;
        for (int k = 0; k * (k + 1) / 2 <= n; ++k)
            if (k * (k + 1) / 2 == n) triangular = true;
        CHECK(c2[n] == (triangular ? 1 : 0));
    }

    // every factor (1 - z^{tn})^t truncates away for t > degree
    CHECK(tcore_series(25, 20) == euler_series(20));

    // c_1 is the delta at 0: a partition with no hook at all is empty
    IntSeries c1 = tcore_series(1, 30);
    CHECK(c1[0] == 1);
    for (int n = 1; n <= 30; ++n) CHECK(c1[n] == 0);
}

TEST_CASE("single-coefficient core counts match the dense series") {
    for (int t = 1; t <= 10; ++t) {
        IntSeries dense = tcore_series(t, 60);
        for (int n = 0; n <= 60; ++n) CHECK(core_count_series(t, n) == dense[n]);
    }
    IntSeries dense7 = tcore_series(7, 300);
    CHECK(core_count_series(7, 300) == dense7[300]);
    IntSeries dense41 = tcore_series(41, 300);
    CHECK(core_count_series(41, 300) == dense41[300]);
}

TEST_CASE("han table marginals and brute force") {
    BivariateTable t3 = han_table(3, 24);
    CHECK(t3.at(4, 0) == 2);  // = c_3(4)

    // w = 1 marginal: sum over k is p(N); w = 0 column: t-cores
    for (int t : {2, 3, 5}) {
        BivariateTable table = han_table(t, 24);
        IntSeries cores = tcore_series(t, 24);
        for (int n = 0; n <= 24; ++n) {
            CHECK(table.row_sum(n) == partition_count(n));
            CHECK(table.at(n, 0) == cores[n]);
        }
    }

    // full equality with the H_t histogram over all partitions
    for (int t : {2, 3, 4, 5, 7}) {
        BivariateTable table = han_table(t, 14);
        for (int n = 0; n <= 14; ++n) {
            std::vector<BigInt> brute(static_cast<std::size_t>(n / t) + 1);
            for_each_partition(n, [&](const std::vector<int>& parts) {
                ++brute[static_cast<std::size_t>(hooks_div(Partition(parts), t))];
            });
            for (std::size_t k = 0; k < brute.size(); ++k)
                CHECK(table.at(n, static_cast<int>(k)) == brute[k]);
        }
    }
}

TEST_CASE("restricted-parts series") {
    IntSeries a2 = nondiv_series(2, 20);
    CHECK(a2[4] == 2);  // (3,1), (1,1,1,1)
    for (int n = 0; n <= 20; ++n) CHECK(nondiv_series(21, 20)[n] == partition_count(n));
    CHECK_THROWS_AS(nondiv_series(1, 5), std::invalid_argument);
}

TEST_CASE("parts split by divisibility: #{mu : P_t = l} = p(l) a_t(N - t l)") {
    for (int n = 1; n <= 14; ++n) {
        for (int t = 2; t <= n; ++t) {
            std::vector<BigInt> counts(static_cast<std::size_t>(n / t) + 1);
            for_each_partition(n, [&](const std::vector<int>& parts) {
                ++counts[static_cast<std::size_t>(parts_div_sum(Partition(parts), t))];
            });
            IntSeries at = nondiv_series(t, n);
            for (std::size_t l = 0; l < counts.size(); ++l)
                CHECK(counts[l] ==
                      partition_count(static_cast<int>(l)) * at[n - t * static_cast<int>(l)]);
        }
    }
}
