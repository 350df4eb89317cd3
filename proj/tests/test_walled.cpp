#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wbr/combinat.hpp"
#include "wbr/walled.hpp"

using namespace wbr;

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(WalledDiagram(1, 1, {{0, 1}, {2, 2}}), ShapeMismatch);
    // vertical edge across the wall
    CHECK_THROWS_AS(WalledDiagram(1, 1, {{0, 3}, {1, 2}}), ShapeMismatch);
    // horizontal edge not crossing the wall
    CHECK_THROWS_AS(WalledDiagram(2, 2, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}), ShapeMismatch);
    WalledDiagram id = WalledDiagram::identity(2, 1);
    CHECK(id.horizontal_edges() == 0);
}

TEST_CASE("text format round trip") {
    CHECK(WalledDiagram::identity(1, 1).to_string() == "wbd 1,1 : 1-1',2-2'");
    CHECK(generator_e(1, 1, 1, 2).to_string() == "wbd 1,1 : 1-2,1'-2'");
    for (const auto& d : enumerate_diagrams(2, 2))
        CHECK(WalledDiagram::parse(d.to_string()) == d);
    CHECK_THROWS_AS(WalledDiagram::parse("wbd 1,1 : 1-1"), ParseError);
    CHECK_THROWS_AS(WalledDiagram::parse("nope"), ParseError);
}

TEST_CASE("multiplication") {
    WalledDiagram e = generator_e(1, 1, 1, 2);
    auto [loops, z] = multiply_diagrams(e, e);
    CHECK(loops == 1);
    CHECK(z == e);
    WalledDiagram s1 = generator_s(2, 1, 1);
    auto [l2, z2] = multiply_diagrams(s1, s1);
    CHECK(l2 == 0);
    CHECK(z2 == WalledDiagram::identity(2, 1));
    for (const auto& d : enumerate_diagrams(2, 1)) {
        auto [l3, z3] = multiply_diagrams(WalledDiagram::identity(2, 1), d);
        CHECK(l3 == 0);
        CHECK(z3 == d);
    }
}

TEST_CASE("horizontal edge count grows under multiplication") {
    for (int r = 1; r <= 2; ++r)
        for (int t = 1; t <= 2; ++t) {
            auto all = enumerate_diagrams(r, t);
            for (const auto& a : all)
                for (const auto& b : all) {
                    auto [l, z] = multiply_diagrams(a, b);
                    CHECK(z.horizontal_edges() >=
                          std::max(a.horizontal_edges(), b.horizontal_edges()));
                }
        }
}

TEST_CASE("generators") {
    CHECK_THROWS_AS(generator_s(2, 1, 2), IndexAcrossWall);
    CHECK_THROWS_AS(generator_s(2, 1, 4), IndexOutOfRange);
    CHECK_THROWS_AS(generator_e(2, 1, 3, 3), IndexOutOfRange);
    WalledDiagram s1 = generator_s(2, 1, 1);
    CHECK(s1.partner(0) == 4);  // top 1 -> bottom 2
    CHECK(s1.partner(1) == 3);  // top 2 -> bottom 1
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_diagrams(1, 1).size() == 2);
    CHECK(enumerate_diagrams(2, 1).size() == 6);
    CHECK(enumerate_diagrams(2, 2, DiagramFilter::ExactlyL, 1).size() == 16);
    for (int r = 1; r <= 3; ++r)
        for (int t = 1; t <= 3; ++t) {
            size_t sum = 0;
            for (int l = 0; l <= std::min(r, t); ++l) {
                size_t cnt = enumerate_diagrams(r, t, DiagramFilter::ExactlyL, l).size();
                long long expect = binomial(r, l) * binomial(t, l) * factorial(l);
                expect = expect * expect * factorial(r - l) * factorial(t - l) /
                         (factorial(l) * binomial(r, l) * binomial(t, l));
                // closed form: (C(r,l) C(t,l) l!)^2 (r-l)! (t-l)!
                long long cf = binomial(r, l) * binomial(t, l) * factorial(l);
                CHECK(cnt == static_cast<size_t>(cf * cf * factorial(r - l) * factorial(t - l)));
                sum += cnt;
            }
            CHECK(sum == static_cast<size_t>(factorial(r + t)));
            CHECK(enumerate_diagrams(r, t).size() == sum);
        }
}

TEST_CASE("basis order puts ideals at the suffix") {
    auto all = enumerate_diagrams(2, 2);
    for (size_t i = 0; i + 1 < all.size(); ++i)
        CHECK(all[i].horizontal_edges() <= all[i + 1].horizontal_edges());
}

TEST_CASE("flip is an involution") {
    CHECK(WalledDiagram::identity(2, 2).flip() == WalledDiagram::identity(2, 2));
    CHECK(generator_s(2, 1, 1).flip() == generator_s(2, 1, 1));
    for (const auto& d : enumerate_diagrams(2, 2)) CHECK(d.flip().flip() == d);
}

TEST_CASE("idempotent diagrams") {
    auto e0 = idempotent_data(2, 2, 0, false);
    CHECK(e0.diagram == WalledDiagram::identity(2, 2));
    CHECK(e0.delta_exponent == 0);
    auto e1 = idempotent_data(1, 1, 1, false);
    CHECK(e1.diagram == generator_e(1, 1, 1, 2));
    CHECK(e1.delta_exponent == -1);
    // golden file: Fig. 3 encoding for (r,t,l) = (2,2,1)
    auto z1 = idempotent_data(2, 2, 1, true);
    CHECK(z1.delta_exponent == 0);
    CHECK(z1.diagram.to_string() == "wbd 2,2 : 1-1',2-3,4-3',2'-4'");
    CHECK_THROWS_AS(idempotent_data(1, 1, 1, true), NotCellularlyStratified);
    CHECK_THROWS_AS(idempotent_data(2, 2, 2, true), NotCellularlyStratified);
    // mirrored variant when l+1 > t but fits on the left
    auto z2 = idempotent_data(3, 1, 1, true);
    auto [loops, sq] = multiply_diagrams(z2.diagram, z2.diagram);
    CHECK(loops == 0);
    CHECK(sq == z2.diagram);
    CHECK_THROWS_AS(idempotent_data(2, 2, 3, false), LayerOutOfRange);
}

TEST_CASE("delta-zero idempotents square to themselves without loops") {
    for (auto [r, t] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        int s = std::min(r, t);
        for (int l = 1; l <= s; ++l) {
            if (l >= t && l >= r) continue;
            auto e = idempotent_data(r, t, l, true);
            auto [loops, sq] = multiply_diagrams(e.diagram, e.diagram);
            CHECK(loops == 0);
            CHECK(sq == e.diagram);
        }
    }
}

TEST_CASE("partial diagrams") {
    CHECK(partial_diagrams(2, 2, 0).size() == 1);
    CHECK(partial_diagrams(2, 2, 1).size() == 4);
    CHECK(partial_diagrams(3, 3, 2).size() == 18);
    CHECK(partial_diagrams_constrained(3, 3, 2, 1).size() == 4);
    for (int r = 1; r <= 3; ++r)
        for (int t = 1; t <= 3; ++t)
            for (int l = 0; l <= std::min(r, t); ++l)
                CHECK(partial_diagrams(r, t, l).size() ==
                      static_cast<size_t>(binomial(r, l) * binomial(t, l) * factorial(l)));
}

TEST_CASE("partial diagram two-row identification") {
    Permutation w = Permutation::parse("[2,1,5,4,3]", 5);
    PartialDiagram v = PartialDiagram::from_permutation(6, 6, w);
    CHECK(v.is_middle_configuration());
    CHECK(v.as_permutation() == w);
    // Fig. 4 arcs: 2-8, 3-7, 4-11, 5-10, 6-9
    std::vector<std::pair<int, int>> arcs{{2, 8}, {3, 7}, {4, 11}, {5, 10}, {6, 9}};
    CHECK(v.arcs() == arcs);
}

TEST_CASE("action on partial diagrams") {
    // v * identity = v
    for (const auto& v : partial_diagrams(2, 2, 1)) {
        auto res = act_on_partial(v, WalledDiagram::identity(2, 2));
        REQUIRE(res.has_value());
        CHECK(res->first == 0);
        CHECK(res->second == v);
    }
    // empty v times e_{1,2} in (1,1): edge count rises -> zero
    PartialDiagram empty(1, 1, {});
    CHECK(!act_on_partial(empty, generator_e(1, 1, 1, 2)).has_value());
    // v with the arc {1,2} times e_{1,2}: one loop, v back
    PartialDiagram varc(1, 1, {{1, 2}});
    auto res = act_on_partial(varc, generator_e(1, 1, 1, 2));
    REQUIRE(res.has_value());
    CHECK(res->first == 1);
    CHECK(res->second == varc);
}

TEST_CASE("brute force stabilizer matches the sigma-tau law") {
    for (int l = 1; l <= 3; ++l) {
        int r = l, t = l;
        for (const auto& w : enumerate_symmetric_group(l)) {
            PartialDiagram v = PartialDiagram::from_permutation(r, t, w);
            size_t hits = 0;
            for (const auto& g : enumerate_product_group(l, l)) {
                // embedded action of (σ,τ) on the designated vertices
                WalledDiagram diag = [&] {
                    int n = r + t;
                    std::vector<std::pair<int, int>> e;
                    for (int pos = 1; pos <= l; ++pos) e.push_back({pos - 1, n + g.left(pos) - 1});
                    for (int pos = 1; pos <= l; ++pos)
                        e.push_back({r + pos - 1, n + r + g.right(pos) - 1});
                    return WalledDiagram(r, t, e);
                }();
                auto res = act_on_partial(v, diag);
                if (res && res->first == 0 && res->second == v) {
                    ++hits;
                    CHECK(v.as_permutation().inverse().compose(g.left).compose(v.as_permutation()) ==
                          g.right);
                }
            }
            CHECK(hits == static_cast<size_t>(factorial(l)));
        }
    }
}
