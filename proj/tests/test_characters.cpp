#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "mmc/characters.hpp"
#include "mmc/partitions.hpp"

using mmc::Int;
using mmc::Partition;
using mmc::Rat;
namespace mc = mmc::characters;
namespace mp = mmc::partitions;

TEST_CASE("trivial and sign representations") {
    for (const auto& mu : mp::enumerate_partitions(5)) {
        CHECK(mc::character(Partition{5}, mu) == 1);
    }
    for (const auto& mu : mp::enumerate_partitions(4)) {
        const int sign = (4 - mu.length()) % 2 == 0 ? 1 : -1;
        CHECK(mc::character(Partition{1, 1, 1, 1}, mu) == sign);
    }
}

TEST_CASE("small character values") {
    CHECK(mc::character(Partition{3, 1}, Partition{2, 2}) == -1);
    CHECK(mc::character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(mc::character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(mc::character(Partition{2, 2}, Partition{2, 2}) == 2);
    CHECK(mc::character(Partition{}, Partition{}) == 1);
}

TEST_CASE("identity column gives hook length dimensions") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        const Partition id{std::vector<int>(ones)};
        for (const auto& lam : mp::enumerate_partitions(n))
            CHECK(mc::character(lam, id) == mp::sn_dimension(lam));
    }
}

TEST_CASE("column orthogonality") {
    const int n = 6;
    const auto all = mp::enumerate_partitions(n);
    for (const auto& mu : all) {
        for (const auto& nu : all) {
            Int dot = 0;
            for (const auto& lam : all) dot += mc::character(lam, mu) * mc::character(lam, nu);
            CHECK(dot == (mu == nu ? mp::z_of(mu) : Int(0)));
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(mc::character(Partition{3}, Partition{2}), mmc::parse_error);
    CHECK_THROWS_AS(mc::character(Partition{13, 13}, Partition{13, 13}), mmc::capacity_error);
}

TEST_CASE("basis conversions are mutually inverse") {
    const Partition mu{2, 1};
    const auto in_schur = mc::power_to_schur(mu);
    // p_mu = sum_lam chi^lam_mu s_lam; feed back through schur_to_power.
    std::map<Partition, Rat> back;
    for (const auto& [lam, c] : in_schur) {
        for (const auto& [eta, r] : mc::schur_to_power(lam)) back[eta] += Rat(c) * r;
    }
    for (const auto& [eta, r] : back) {
        if (eta == mu)
            CHECK(r == 1);
        else
            CHECK(r == 0);
    }
}
