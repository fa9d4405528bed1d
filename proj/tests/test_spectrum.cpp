#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "sepalg/spectrum.hpp"

using namespace sepalg;
using namespace sepalg::spectrum;

TEST_CASE("phi on cyclic labels", "[spectrum]") {
    CHECK(phi(2, PrimeLabel::cyclic(6)) == PrimeLabel::cyclic(3));
    CHECK(phi(2, PrimeLabel::cyclic(5)) == PrimeLabel::cyclic(5));
    for (std::uint64_t m : {1, 2, 3, 7, 12})
        CHECK(phi(1, PrimeLabel::cyclic(m)) == PrimeLabel::cyclic(m));
    CHECK(phi(6, PrimeLabel::cyclic(4)) == PrimeLabel::cyclic(2));  // lcm(4,6)/6 = 2
    CHECK_THROWS_AS(phi(0, PrimeLabel::cyclic(1)), Error);
}

TEST_CASE("phi preserves the circle label and the chromatic tag", "[spectrum]") {
    CHECK(phi(5, PrimeLabel::circle("p=2")) == PrimeLabel::circle("p=2"));
    CHECK(phi(2, PrimeLabel::cyclic(6, "p=3")) == PrimeLabel::cyclic(3, "p=3"));
    CHECK(PrimeLabel::cyclic(3, "a") != PrimeLabel::cyclic(3, "b"));
}

TEST_CASE("fibers of the degree-n map", "[spectrum]") {
    CHECK(fiber(2, 3) == std::vector<std::uint64_t>{3, 6});
    CHECK(fiber(2, 4) == std::vector<std::uint64_t>{8});
    for (std::uint64_t k : {1, 2, 9, 30}) CHECK(fiber(1, k) == std::vector<std::uint64_t>{k});
    CHECK(fiber(3, 1) == std::vector<std::uint64_t>{1, 3});
    // the fiber over N = 1 for n = 2 is {1, 2}
    CHECK(fiber(2, 1) == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("fiber_table", "[spectrum]") {
    auto rows = fiber_table(2, 4);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].cardinality() == 2);
    CHECK(rows[1].cardinality() == 1);
    CHECK(rows[2].cardinality() == 2);
    CHECK(rows[3].cardinality() == 1);
    for (const auto& row : rows)
        for (auto m : row.members)
            CHECK(phi(2, PrimeLabel::cyclic(m)) == PrimeLabel::cyclic(row.N));
}

TEST_CASE("round trip: fiber and phi agree by brute force", "[spectrum]") {
    for (std::uint64_t n = 1; n <= 12; ++n)
        for (std::uint64_t N = 1; N <= 60; ++N) {
            auto f = fiber(n, N);
            // every member maps to N
            for (auto m : f) CHECK(phi(n, PrimeLabel::cyclic(m)) == PrimeLabel::cyclic(N));
            // and nothing else does: scan all m <= n*N
            std::vector<std::uint64_t> scan;
            for (std::uint64_t m = 1; m <= n * N; ++m)
                if (phi(n, PrimeLabel::cyclic(m)) == PrimeLabel::cyclic(N)) scan.push_back(m);
            CHECK(f == scan);
        }
}

TEST_CASE("degree-2 fiber cardinality follows the parity of N", "[spectrum]") {
    for (std::uint64_t N = 1; N <= 1000; ++N) {
        auto size = fiber(2, N).size();
        CHECK(size == (N % 2 == 0 ? 1 : 2));
    }
}

TEST_CASE("phi composition is computed and reported, not asserted", "[spectrum]") {
    // agreement of phi_{n2} . phi_{n1} with phi_{n1*n2} is an observation,
    // not a checked invariant; record the mismatch counts
    std::uint64_t total = 0;
    for (std::uint64_t n1 = 1; n1 <= 6; ++n1)
        for (std::uint64_t n2 = 1; n2 <= 6; ++n2)
            total += composition_mismatches(n1, n2, 48);
    UNSCOPED_INFO("composition mismatches over n1,n2 <= 6, m <= 48: " << total);
    SUCCEED();
}
