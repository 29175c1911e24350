#include "doctest.h"
#include "dpzoo/groupdesc.hpp"
#include "support.hpp"

using namespace dpzoo;

TEST_SUITE("groupdesc") {

TEST_CASE("parsing") {
    auto g = parse_group("Gm^2");
    CHECK(g.kind == GroupExpr::Kind::Gm);
    CHECK(g.n == 2);
    CHECK(rank(g) == 2);
    CHECK(is_reductive(g));

    auto e6 = parse_group("Ga x|(3) Gm");
    CHECK(e6.kind == GroupExpr::Kind::Semidirect);
    CHECK(e6.twist == 3);
    CHECK(parse_group("Ga x|(-3) Gm") == e6);
    CHECK(parse_group("Ga x|(1) Gm") == parse_group("B2"));
    CHECK(parse_group("Ga x|(0) Gm") == parse_group("Ga x Gm"));
    CHECK(parse_group("(Ga x Gm)") == parse_group("Ga x Gm"));

    CHECK_THROWS_AS(parse_group("Gx"), GroupParseError);
    CHECK_THROWS_AS(parse_group("Ga x|( Gm"), GroupParseError);
    CHECK_THROWS_AS(parse_group(""), GroupParseError);
    CHECK_THROWS_AS(parse_group("GL"), GroupParseError);
}

TEST_CASE("invariants of the listed groups") {
    struct Row {
        const char* text;
        int dim, rk;
        bool reductive, solvable, unipotent;
        int unip;
    };
    const Row rows[] = {
        {"Gm", 1, 1, true, true, false, 0},
        {"Ga", 1, 0, false, true, true, 1},
        {"Gm^2", 2, 2, true, true, false, 0},
        {"B2", 2, 1, false, true, false, 1},
        {"B3", 5, 2, false, true, false, 3},
        {"U3 x| Gm", 4, 1, false, true, false, 3},
        {"Ga^2 x| Gm", 3, 1, false, true, false, 2},
        {"B2 x Gm", 3, 2, false, true, false, 1},
        {"B2 x B2", 4, 2, false, true, false, 2},
        {"PGL3", 8, 2, true, false, false, 3},
        {"PGL2 x PGL2", 6, 2, true, false, false, 2},
        {"Ga^2 x| GL2", 6, 2, false, false, false, 3},
        {"Ga^3 x| GL2/mu2", 7, 2, false, false, false, 4},
    };
    for (const auto& r : rows) {
        CAPTURE(r.text);
        auto g = parse_group(r.text);
        CHECK(dimension(g) == r.dim);
        CHECK(rank(g) == r.rk);
        CHECK(is_reductive(g) == r.reductive);
        CHECK(is_solvable(g) == r.solvable);
        CHECK(is_unipotent(g) == r.unipotent);
        CHECK(max_unipotent_dimension(g) == r.unip);
        CHECK(parse_group(render(g)) == g);
        CHECK(render(g) == r.text);
    }
}

TEST_CASE("every catalog group round-trips") {
    for (const auto& e : testing::catalog().entries) {
        CAPTURE(e.id);
        CHECK(parse_group(render(e.aut0)) == e.aut0);
        CHECK(dimension(e.aut0) >= 1);
    }
}

}  // TEST_SUITE
