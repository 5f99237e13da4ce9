#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "mmc/polyalg.hpp"

using mmc::Int;
using mmc::Rat;
namespace pa = mmc::polyalg;
using pa::Graded;
using pa::NPoly;
using pa::TruncSeries;

TEST_CASE("polynomial arithmetic and printing") {
    const NPoly n = NPoly::variable();
    NPoly p = n * n * Rat(2) + n;
    CHECK(p.degree() == 2);
    CHECK(p.str() == "2*N^2 + N");
    p -= n;
    CHECK(p.str() == "2*N^2");
    CHECK((p - p).is_zero());
    CHECK((p - p).str() == "0");
    CHECK(NPoly{}.degree() == -1);
    CHECK(NPoly(Rat(1)).str() == "1");
    CHECK((-NPoly(Rat(1))).str() == "-1");

    NPoly q = NPoly::monomial(2, Rat(Int(-1), Int(8)));
    q += NPoly(Rat(-1));
    CHECK(q.str() == "-1/8*N^2 - 1");
    CHECK(NPoly::monomial(1, Rat(1)).str() == "N");
    CHECK(NPoly::monomial(1, Rat(-1)).str() == "-N");
    CHECK_THROWS_AS(NPoly::monomial(-1, Rat(1)), mmc::parse_error);
}

TEST_CASE("evaluation") {
    NPoly p = NPoly::monomial(3, Rat(2)) + NPoly::monomial(1, Rat(1));
    CHECK(p.eval(Rat(3)) == Rat(57));
    CHECK(p.eval(Rat(0)) == Rat(0));
    CHECK(p.eval(Rat(Int(1), Int(2))) == Rat(Int(3), Int(4)));
    CHECK(NPoly{}.eval(Rat(5)) == Rat(0));
}

TEST_CASE("polynomial json round-trip") {
    NPoly p = NPoly::monomial(4, Rat(Int(1), Int(3))) + NPoly::monomial(0, Rat(-2));
    CHECK(NPoly::from_json(p.to_json()) == p);
    CHECK(NPoly::from_json(NPoly{}.to_json()) == NPoly{});
    CHECK_THROWS_AS(NPoly::from_json(nlohmann::json::array()), mmc::parse_error);
}

TEST_CASE("graded values") {
    const Graded a{NPoly::monomial(2, Rat(1)), 1};
    const Graded b{NPoly::monomial(1, Rat(3)), 1};
    CHECK((a + b).poly.str() == "N^2 + 3*N");
    CHECK((a * b).gs_exp == 2);
    const Graded zero1{{}, 0}, zero2{{}, 5};
    CHECK(zero1 == zero2);
    CHECK((zero1 + a) == a);
    const Graded c{NPoly::monomial(1, Rat(1)), 2};
    CHECK_THROWS_AS(a + c, mmc::internal_error);
    CHECK(a.str() == "N^2·g_s^1");
    CHECK((a + Rat(1) * b).str() == "(N^2 + 3*N)·g_s^1");
}

TEST_CASE("rising products") {
    CHECK(pa::rising_product(0, 1).str() == "N^2 + N");
    CHECK(pa::rising_product(-1, 0).str() == "N^2 - N");
    CHECK(pa::rising_product(1, 0) == NPoly(Rat(1)));
    CHECK(pa::rising_product(-3, 0).eval(Rat(4)) == Rat(24));
    CHECK_THROWS_AS(pa::rising_product(2, 0), mmc::parse_error);
}

TEST_CASE("truncated series bookkeeping") {
    TruncSeries s(2, 6);
    s.add_term({2, 2}, Graded{NPoly(Rat(1)), 0});
    s.add_term({3, 4}, Graded{NPoly(Rat(1)), 0});  // beyond cap, dropped
    CHECK(s.terms().size() == 1);
    s.add_term({2, 2}, Graded{NPoly(Rat(-1)), 0});
    CHECK(s.terms().empty());
    CHECK_THROWS_AS(s.add_term({1}, Graded{NPoly(Rat(1)), 0}), mmc::parse_error);
    CHECK_THROWS_AS(TruncSeries(0, 3), mmc::parse_error);

    TruncSeries signed_lane(2, 6);
    signed_lane.add_term({3, -1}, Graded{NPoly(Rat(1)), 0});
    CHECK_FALSE(signed_lane.finalized());
    CHECK_THROWS_AS(signed_lane.finalize(), mmc::internal_error);
    signed_lane.add_term({3, -1}, Graded{NPoly(Rat(-1)), 0});
    CHECK(signed_lane.finalized());
}

TEST_CASE("series multiplication respects caps") {
    TruncSeries a(1, 4);
    a.add_term({1}, Graded{NPoly(Rat(1)), 0});
    a.add_term({3}, Graded{NPoly(Rat(2)), 0});
    TruncSeries b(1, 4);
    b.add_term({1}, Graded{NPoly(Rat(1)), 0});
    const TruncSeries prod = pa::series_mul(a, b);
    REQUIRE(prod.terms().count({2}) == 1);
    CHECK(prod.terms().at({2}).poly == NPoly(Rat(1)));
    REQUIRE(prod.terms().count({4}) == 1);
    CHECK(prod.terms().at({4}).poly == NPoly(Rat(2)));
    TruncSeries c(2, 4);
    CHECK_THROWS_AS(pa::series_add(a, c), mmc::parse_error);
}

TEST_CASE("series json round-trip") {
    TruncSeries s(3, 9);
    s.add_term({2, 3, 2}, Graded{NPoly::monomial(2, Rat(5)), 1});
    s.add_term({3, 2, 2}, Graded{NPoly::monomial(1, Rat(Int(1), Int(2))), 0});
    const auto doc = s.to_json();
    CHECK(TruncSeries::from_json(doc, 3, 9) == s);
}

TEST_CASE("directional geometric expansion") {
    // 1/(x0 - x1) expanded where x0 dominates: x0^{-1-k} x1^{k}.
    const TruncSeries g = pa::geometric_expand(0, 1, 1, 4);
    REQUIRE(g.terms().count({1, 0}) == 1);
    REQUIRE(g.terms().count({2, -1}) == 1);
    CHECK(g.terms().at({1, 0}).poly == NPoly(Rat(1)));
    CHECK(g.terms().at({2, -1}).poly == NPoly(Rat(1)));
    CHECK_FALSE(g.finalized());
    // 1/(x0 - x1)^2: binomial weights.
    const TruncSeries g2 = pa::geometric_expand(0, 1, 2, 5);
    CHECK(g2.terms().at({3, -1}).poly == NPoly(Rat(2)));
    CHECK_THROWS_AS(pa::geometric_expand(0, 0, 1, 4), mmc::parse_error);
    CHECK_THROWS_AS(pa::geometric_expand(0, 1, 0, 4), mmc::parse_error);
}
