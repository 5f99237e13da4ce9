#include <catch2/catch_amalgamated.hpp>

#include "mmc/partitions.hpp"

using mmc::Int;
using mmc::Partition;
namespace mp = mmc::partitions;

TEST_CASE("parse and print round-trip") {
    CHECK(Partition::parse("4,2,1").str() == "4,2,1");
    CHECK(Partition::parse("").str() == "");
    CHECK(Partition::parse("6").parts() == std::vector<int>{6});
    CHECK(Partition{4, 2, 1} == Partition::parse("4,2,1"));
}

TEST_CASE("invalid partition strings are rejected") {
    CHECK_THROWS_AS(Partition::parse("2,3"), mmc::parse_error);
    CHECK_THROWS_AS(Partition::parse("4,,2"), mmc::parse_error);
    CHECK_THROWS_AS(Partition::parse("4,2,"), mmc::parse_error);
    CHECK_THROWS_AS(Partition::parse("a"), mmc::parse_error);
    CHECK_THROWS_AS(Partition::parse("0"), mmc::parse_error);
    CHECK_THROWS_AS(Partition::parse("-3"), mmc::parse_error);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), mmc::parse_error);
}

TEST_CASE("weight length and conjugate") {
    const Partition lam{4, 2, 1};
    CHECK(lam.weight() == 7);
    CHECK(lam.length() == 3);
    CHECK(lam.conjugate() == Partition{3, 2, 1, 1});
    CHECK(lam.conjugate().conjugate() == lam);
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition{}.conjugate() == Partition{});
}

TEST_CASE("enumeration is reverse-lexicographic and complete") {
    const auto all4 = mp::enumerate_partitions(4);
    REQUIRE(all4.size() == 5);
    CHECK(all4.front() == Partition{4});
    CHECK(all4.back() == Partition{1, 1, 1, 1});
    CHECK(mp::enumerate_partitions(10).size() == 42);
    CHECK(mp::enumerate_partitions(0).size() == 1);
}

TEST_CASE("centralizer orders") {
    CHECK(mp::z_of(Partition{2, 2}) == 8);
    CHECK(mp::z_of(Partition{1, 1, 1}) == 6);
    CHECK(mp::z_of(Partition{3}) == 3);
    CHECK(mp::z_of(Partition{}) == 1);
    Int total = 0;
    for (const auto& lam : mp::enumerate_partitions(8))
        total += mmc::factorial(8) / mp::z_of(lam);
    CHECK(total == mmc::factorial(8));
}

TEST_CASE("cells hooks and dimensions") {
    const auto stats = mp::cell_stats(Partition{2, 1});
    REQUIRE(stats.cells.size() == 3);
    CHECK(mp::hook_product(Partition{2, 1}) == 3);
    CHECK(mp::sn_dimension(Partition{2, 1}) == 2);
    CHECK(mp::sn_dimension(Partition{3, 2}) == 5);
    CHECK(mp::sn_dimension(Partition{}) == 1);
    Int sq = 0;
    for (const auto& lam : mp::enumerate_partitions(7)) {
        const Int d = mp::sn_dimension(lam);
        sq += d * d;
    }
    CHECK(sq == mmc::factorial(7));
}
