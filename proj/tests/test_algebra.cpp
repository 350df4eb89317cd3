#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wbr/algebra.hpp"
#include "wbr/modules.hpp"

using namespace wbr;

namespace {
Scalar q(long long n) { return Scalar::of(FieldSpec::rationals(), n); }
}  // namespace

TEST_CASE("walled Brauer algebra basics") {
    auto B = WalledBrauerAlgebra::create(1, 1, q(3));
    CHECK(B->dim() == 2);
    AlgebraElement e = B->element_of(generator_e(1, 1, 1, 2));
    AlgebraElement sq = e * e;
    CHECK(sq == e.scaled(q(3)));
    CHECK((B->one() * e) == e);
    CHECK((e * B->one()) == e);
    auto B21 = WalledBrauerAlgebra::create(2, 1, q(5));
    CHECK(B21->dim() == 6);
}

TEST_CASE("bilinearity on random basis elements") {
    auto B = WalledBrauerAlgebra::create(2, 1, q(2));
    uint64_t s = 42;
    auto pick = [&]() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return B->basis_element((s >> 33) % B->dim());
    };
    for (int i = 0; i < 50; ++i) {
        AlgebraElement x = pick(), y = pick(), z = pick();
        CHECK((x + y) * z == x * z + y * z);
        CHECK(z * (x + y) == z * x + z * y);
    }
}

TEST_CASE("associativity") {
    // full check on all basis triples for small dims
    for (auto delta : {q(0), q(2)}) {
        auto B = WalledBrauerAlgebra::create(2, 1, delta);
        for (size_t i = 0; i < B->dim(); ++i)
            for (size_t j = 0; j < B->dim(); ++j)
                for (size_t k = 0; k < B->dim(); ++k) {
                    auto a = B->basis_element(i), b = B->basis_element(j), c = B->basis_element(k);
                    CHECK((a * b) * c == a * (b * c));
                }
    }
    // seeded sample on B_{2,2}
    auto B = WalledBrauerAlgebra::create(2, 2, q(5));
    uint64_t s = 7;
    for (int n = 0; n < 500; ++n) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        size_t i = (s >> 33) % B->dim();
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        size_t j = (s >> 33) % B->dim();
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        size_t k = (s >> 33) % B->dim();
        auto a = B->basis_element(i), b = B->basis_element(j), c = B->basis_element(k);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("involution is an anti-automorphism") {
    for (auto delta : {q(0), q(2)}) {
        for (auto [r, t] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
            if (r == 1 && t == 1 && delta.is_zero()) continue;
            auto B = WalledBrauerAlgebra::create(r, t, delta);
            for (size_t i = 0; i < B->dim(); ++i) {
                auto x = B->basis_element(i);
                CHECK(x.involution().involution() == x);
                for (size_t j = 0; j < B->dim(); ++j) {
                    auto y = B->basis_element(j);
                    CHECK((x * y).involution() == y.involution() * x.involution());
                }
            }
        }
    }
}

TEST_CASE("layer idempotents") {
    // delta != 0: e_l = delta^{-l} times the nested-arc diagram
    auto B = WalledBrauerAlgebra::create(2, 2, q(2));
    for (int l = 0; l <= 2; ++l) {
        auto e = B->idempotent(l);
        CHECK(e * e == e);
    }
    // delta = 0 via Fig. 3
    auto B0 = WalledBrauerAlgebra::create(2, 2, q(0));
    auto e1 = B0->idempotent(1);
    CHECK(e1 * e1 == e1);
    CHECK_THROWS_AS(B0->idempotent(2), NotCellularlyStratified);
    auto B10 = WalledBrauerAlgebra::create(1, 1, q(0));
    CHECK_THROWS_AS(B10->idempotent(1), NotCellularlyStratified);
}

TEST_CASE("idempotent absorption across layers") {
    // Arc-indexed idempotents absorb downward: e_l e_m = e_l = e_m e_l, l > m.
    for (auto delta : {q(2), q(5)}) {
        for (auto [r, t] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
            auto B = WalledBrauerAlgebra::create(r, t, delta);
            int s = std::min(r, t);
            for (int l = 0; l <= s; ++l)
                for (int m = 0; m < l; ++m) {
                    auto el = B->idempotent(l), em = B->idempotent(m);
                    CHECK(el * em == el);
                    CHECK(em * el == el);
                }
        }
    }
    auto B0 = WalledBrauerAlgebra::create(3, 3, q(0));
    for (int l = 1; l <= 2; ++l)
        for (int m = 0; m < l; ++m) {
            auto el = B0->idempotent(l), em = B0->idempotent(m);
            CHECK(el * em == el);
            CHECK(em * el == el);
        }
}

TEST_CASE("ideal suffix structure and stability") {
    auto B = WalledBrauerAlgebra::create(2, 2, q(2));
    for (int l = 0; l <= 2; ++l) {
        size_t start = B->ideal_start(l);
        for (size_t i = start; i < B->dim(); ++i)
            CHECK(B->diagram(i).horizontal_edges() >= l);
        if (start > 0) CHECK(B->diagram(start - 1).horizontal_edges() < l);
        // J_l * generator stays in span(J_l), both sides
        for (size_t i = start; i < B->dim(); ++i)
            for (size_t g = 0; g < B->generator_names().size(); ++g) {
                for (auto x : {B->basis_element(i) * B->generator(g),
                               B->generator(g) * B->basis_element(i)}) {
                    for (const auto& [k, c] : x.terms()) CHECK(k >= start);
                }
            }
    }
}

TEST_CASE("group algebra of the product group") {
    auto A = ProductGroupAlgebra::create(2, 1, FieldSpec::prime_field(5));
    CHECK(A->dim() == 2);
    auto s = A->generator(0);
    CHECK(s * s == A->one());
    auto A32 = ProductGroupAlgebra::create(3, 2, FieldSpec::rationals());
    CHECK(A32->dim() == 12);
    // braid relation on the left factor
    auto s1 = A32->generator(0), s2 = A32->generator(1), r1 = A32->generator(2);
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);
    CHECK(s1 * r1 == r1 * s1);
    // involution = inverse
    for (size_t i = 0; i < A32->dim(); ++i) {
        auto x = A32->basis_element(i);
        CHECK(x * x.involution() == A32->one());
    }
}

TEST_CASE("regular representation") {
    auto A = ProductGroupAlgebra::create(2, 0, FieldSpec::rationals());
    ModuleRep reg = regular_representation(A);
    CHECK(reg.dim == 2);
    // the swap generator acts as the swap matrix
    CHECK(reg.actions[0] == Matrix::from_rows(FieldSpec::rationals(), {{0, 1}, {1, 0}}));
    auto B = WalledBrauerAlgebra::create(1, 1, q(2));
    CHECK(regular_representation(B).dim == 2);
    auto B21 = WalledBrauerAlgebra::create(2, 1, q(2));
    CHECK(regular_representation(B21).dim == 6);
}

TEST_CASE("generators generate the full algebra") {
    for (auto delta : {q(0), q(5)}) {
        for (auto [r, t] : {std::pair{2, 2}, {2, 1}, {3, 2}}) {
            auto B = WalledBrauerAlgebra::create(r, t, delta);
            ModuleRep reg = regular_representation(B);
            Matrix seed(B->field(), 1, reg.dim);
            seed.set_int(0, 0, 0);
            Matrix one(B->field(), 1, reg.dim);
            // spin the identity element under right multiplication
            size_t one_idx = 0;
            for (size_t i = 0; i < B->dim(); ++i)
                if (B->basis_element(i) == B->one()) one_idx = i;
            one.set_int(0, one_idx, 1);
            CHECK(spin(reg, one).rows() == reg.dim);
        }
    }
}
