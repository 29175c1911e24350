#include <algorithm>
#include <functional>

#include "doctest.h"
#include "dpzoo/rootsys.hpp"
#include "support.hpp"

using namespace dpzoo;

namespace {

// Independent search on blow-up lattices. For x = a h + sum c_i e_i one has
// x.x = a^2 - sum c_i^2 and K.x = -3a - sum c_i; recurse on e = -c_i.
std::vector<DivisorClass> solve_blowup(int n, Int self, Int k_dot) {
    std::vector<DivisorClass> out;
    DivisorClass x(static_cast<std::size_t>(n + 1), 0);
    std::function<void(int, Int, Int)> rec = [&](int i, Int squares, Int sum) {
        if (i > n) {
            if (squares == 0 && sum == 0) out.push_back(x);
            return;
        }
        for (Int e = -4; e <= 4; ++e) {
            if (e * e > squares) continue;
            x[static_cast<std::size_t>(i)] = -e;
            rec(i + 1, squares - e * e, sum - e);
        }
        x[static_cast<std::size_t>(i)] = 0;
    };
    for (Int a = -8; a <= 8; ++a) {
        x[0] = a;
        Int squares = a * a - self;
        if (squares < 0) continue;
        rec(1, squares, k_dot + 3 * a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("rootsys") {

TEST_CASE("root counts") {
    const int roots[] = {0, 0, 2, 8, 20, 40, 72, 126, 240};
    const int minus_one[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
    for (int n = 0; n <= 8; ++n) {
        auto lat = PicLattice::blowup_of_p2(n);
        CAPTURE(n);
        CHECK(enumerate_roots(lat).roots.size() == static_cast<std::size_t>(roots[n]));
        CHECK(enumerate_minus_one_classes(lat).size() == static_cast<std::size_t>(minus_one[n]));
    }
    // +-(f1 - f2) are roots of the lattice but neither is effective
    CHECK(enumerate_roots(PicLattice::hirzebruch(0)).roots.size() == 2);
    CHECK(enumerate_roots(PicLattice::hirzebruch(2)).roots.size() == 2);
    CHECK(enumerate_minus_one_classes(PicLattice::hirzebruch(2)).empty());
}

TEST_CASE("small cases by hand") {
    auto d7 = PicLattice::blowup_of_p2(2);
    CHECK(enumerate_roots(d7).roots == std::vector<DivisorClass>{{0, -1, 1}, {0, 1, -1}});
    CHECK(enumerate_roots(PicLattice::blowup_of_p2(1)).roots.empty());
    CHECK(enumerate_minus_one_classes(PicLattice::blowup_of_p2(1)) == std::vector<DivisorClass>{{0, 1}});
    auto l7 = enumerate_minus_one_classes(d7);
    std::vector<DivisorClass> expected{{0, 1, 0}, {0, 0, 1}, {1, -1, -1}};
    std::sort(expected.begin(), expected.end());
    CHECK(l7 == expected);
}

TEST_CASE("box search, reflection closure and an independent solver agree") {
    for (int n = 1; n <= 8; ++n) {
        auto lat = PicLattice::blowup_of_p2(n);
        CAPTURE(n);
        auto roots = enumerate_roots(lat).roots;
        auto lines = enumerate_minus_one_classes(lat);
        CHECK(roots == roots_by_reflection(lat));
        CHECK(lines == minus_one_classes_by_reflection(lat));
        CHECK(roots == solve_blowup(n, -2, 0));
        CHECK(lines == solve_blowup(n, -1, -1));
    }
}

TEST_CASE("root and (-1)-class sets are closed under every reflection") {
    for (int n : {3, 5, 6}) {
        auto lat = PicLattice::blowup_of_p2(n);
        auto roots = enumerate_roots(lat).roots;
        auto lines = enumerate_minus_one_classes(lat);
        for (const auto& r : roots) {
            for (const auto& x : roots) CHECK(std::binary_search(roots.begin(), roots.end(), reflect(lat, r, x)));
            for (const auto& x : lines) CHECK(std::binary_search(lines.begin(), lines.end(), reflect(lat, r, x)));
        }
    }
}

TEST_CASE("reflections") {
    auto lat = PicLattice::blowup_of_p2(3);
    DivisorClass r{0, 1, -1, 0};
    DivisorClass fixed{1, 0, 0, 0};
    CHECK(reflect(lat, r, fixed) == fixed);
    DivisorClass e1{0, 1, 0, 0};
    CHECK(reflect(lat, r, e1) == DivisorClass{0, 0, 1, 0});
    CHECK(reflect(lat, r, reflect(lat, r, e1)) == e1);
    CHECK_THROWS_AS(reflect(lat, e1, fixed), std::invalid_argument);
}

TEST_CASE("standard simple roots span root systems of the right type") {
    const char* types[] = {"smooth", "smooth", "A1", "A2+A1", "A4", "D5", "E6", "E7", "E8"};
    for (int n = 0; n <= 8; ++n) {
        auto lat = PicLattice::blowup_of_p2(n);
        auto simple = standard_simple_roots(lat);
        CHECK(ade_type(lat, simple) == AdeType::parse(types[n]));
        if (!simple.empty()) CHECK(reflection_orbit(lat, simple, simple) == enumerate_roots(lat).roots);
    }
}

TEST_CASE("Dynkin recognition") {
    auto lat = PicLattice::blowup_of_p2(6);
    CHECK(ade_type(lat, {{0, 1, -1, 0, 0, 0, 0}}).str() == "A1");
    // D5: chain e1-e2, e2-e3, e3-e4, e4-e5 with h-e1-e2-e3 on e3-e4
    std::vector<DivisorClass> d5{{0, 1, -1, 0, 0, 0, 0},
                                 {0, 0, 1, -1, 0, 0, 0},
                                 {0, 0, 0, 1, -1, 0, 0},
                                 {0, 0, 0, 0, 1, -1, 0},
                                 {1, -1, -1, -1, 0, 0, 0}};
    CHECK(ade_type(lat, d5).str() == "D5");
    CHECK(ade_type(lat, {}).smooth());

    // a triangle of roots
    std::vector<DivisorClass> cycle{{0, 1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0, 0}, {0, -1, 0, 1, 0, 0, 0}};
    try {
        ade_type(lat, cycle);
        FAIL("cycle accepted");
    } catch (const AdeError& e) {
        CHECK(e.kind != AdeError::Kind::Duplicate);
    }
    // pairing 2 between two roots
    std::vector<DivisorClass> doubled{{0, 1, -1, 0, 0, 0, 0}, {0, -1, 1, 0, 0, 0, 0}};
    CHECK_THROWS_AS(ade_type(lat, doubled), AdeError);
    CHECK_THROWS_AS(ade_type(lat, {{0, 1, 0, 0, 0, 0, 0}}), AdeError);
}

TEST_CASE("type strings") {
    for (const char* s : {"E8", "E7+A1", "2D4", "D4+3A1", "2A3+A1", "A2+2A1", "smooth"})
        CHECK(AdeType::parse(s).str() == s);
    CHECK(AdeType::parse("A1+E7") == AdeType::parse("E7+A1"));
    CHECK(AdeType::parse("A1+A1") == AdeType::parse("2A1"));
    CHECK(AdeType::parse("D5+A3").rank() == 8);
    CHECK_THROWS(AdeType::parse("F4"));
    CHECK_THROWS(AdeType::parse("D3"));
    CHECK_THROWS(AdeType::parse("E9"));
}

TEST_CASE("catalog configurations have the listed types") {
    CHECK(ade_type(testing::entry("d2-2A3-A1").config.lattice, testing::entry("d2-2A3-A1").config.simple_roots).str() ==
          "2A3+A1");
    for (const auto& e : testing::catalog().entries) {
        CAPTURE(e.id);
        auto t = ade_type(e.config.lattice, e.config.simple_roots);
        CHECK(t == e.type);
        CHECK(t.rank() == static_cast<int>(e.config.simple_roots.size()));
        // the components partition the simple roots
        std::size_t total = 0;
        for (const auto& c : root_components(e.config.lattice, e.config.simple_roots)) total += c.size();
        CHECK(total == e.config.simple_roots.size());
    }
}

}  // TEST_SUITE
