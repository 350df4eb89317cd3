#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "wbr/permutation.hpp"

using namespace wbr;

TEST_CASE("fixed composition convention") {
    // (σ·τ)(i) = τ(σ(i)): (1 2)·(2 3) maps 1→3, 3→2, 2→1.
    Permutation s12 = Permutation::parse("(1 2)", 3);
    Permutation s23 = Permutation::parse("(2 3)", 3);
    Permutation c = s12.compose(s23);
    CHECK(c.images() == std::vector<int>{3, 1, 2});
    CHECK(c.sign() == 1);
    CHECK(s12.compose(s12.inverse()).is_identity());
}

TEST_CASE("parse and print") {
    Permutation p = Permutation::parse("(1 3 4)(2 5)", 5);
    CHECK(p(1) == 3);
    CHECK(p(3) == 4);
    CHECK(p(4) == 1);
    CHECK(p(2) == 5);
    CHECK(p(5) == 2);
    CHECK(Permutation::parse(p.to_string(), 5) == p);
    CHECK(Permutation::parse("[3,5,4,1,2]", 5).images() == std::vector<int>{3, 5, 4, 1, 2});
    CHECK_THROWS_AS(Permutation::parse("[1,1]", 2), DegreeMismatch);
    CHECK_THROWS_AS(Permutation::parse("x", 2), ParseError);
}

TEST_CASE("adjacent words reconstruct the permutation") {
    for (const auto& p : enumerate_symmetric_group(5)) {
        Permutation acc = Permutation::identity(5);
        for (int i : p.adjacent_word()) acc = acc.compose(Permutation::transposition(5, i, i + 1));
        CHECK(acc == p);
    }
}

TEST_CASE("group enumeration") {
    CHECK(enumerate_symmetric_group(3).size() == 6);
    CHECK(enumerate_product_group(2, 1).size() == 2);
    CHECK(enumerate_product_group(2, 2).size() == 4);
    CHECK_THROWS_AS(enumerate_symmetric_group(9), DegreeTooLarge);
    // lexicographic order of image lists
    auto g = enumerate_symmetric_group(3);
    CHECK(g.front().images() == std::vector<int>{1, 2, 3});
    CHECK(g.back().images() == std::vector<int>{3, 2, 1});
}

TEST_CASE("young subgroups and cosets") {
    auto gens = young_subgroup_generators(3, {2, 1});
    CHECK(generated_subgroup(3, gens).size() == 2);
    CHECK(cosets(3, gens, CosetSide::Right).size() == 3);
    CHECK(cosets(4, young_subgroup_generators(4, {2, 2}), CosetSide::Right).size() == 6);
    // trivial subgroup in S_2 x S_2
    ProductPermutation id{Permutation::identity(2), Permutation::identity(2)};
    CHECK(product_cosets(2, 2, {id}).size() == 4);
    // representatives cover the group and lie in distinct cosets
    auto reps = cosets(4, young_subgroup_generators(4, {2, 2}), CosetSide::Right);
    auto sub = generated_subgroup(4, young_subgroup_generators(4, {2, 2}));
    std::set<Permutation> all;
    for (const auto& r : reps)
        for (const auto& h : sub) all.insert(h.compose(r));
    CHECK(all.size() == 24);
}

TEST_CASE("double cosets degenerate cases") {
    auto g22 = enumerate_product_group(2, 2);
    ProductPermutation id{Permutation::identity(2), Permutation::identity(2)};
    auto one = double_cosets(2, 2, g22, {id});
    REQUIRE(one.size() == 1);
    CHECK(one[0].gamma.parts == std::vector<int>{2});
    CHECK(one[0].delta.parts == std::vector<int>{2});
    auto all = double_cosets(2, 2, {id}, {id});
    CHECK(all.size() == 4);
    // sizes of double cosets account for |G|
    size_t total = 0;
    for (const auto& d : all) total += d.size;
    CHECK(total == 4);
}

TEST_CASE("stabilizer of a partial diagram as permutation pairs") {
    // l = 2, identity matching: the diagonal {(σ,σ)}
    auto pairs = stabilizer_pairs(Permutation::identity(2));
    CHECK(pairs.size() == 2);
    for (const auto& pr : pairs) CHECK(pr.left == pr.right);
    // paper example: l = 5, v = [2,1,5,4,3], σ = (1 3 4) gives τ = (2 5 4)
    Permutation v = Permutation::parse("[2,1,5,4,3]", 5);
    Permutation sigma = Permutation::parse("(1 3 4)", 5);
    Permutation expected_tau = Permutation::parse("(2 5 4)", 5);
    Permutation tau = v.inverse().compose(sigma).compose(v);
    CHECK(tau == expected_tau);
    bool found = false;
    for (const auto& pr : stabilizer_pairs(v))
        if (pr.left == sigma) {
            found = true;
            CHECK(pr.right == expected_tau);
        }
    CHECK(found);
}
