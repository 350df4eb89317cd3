#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wbr/modules.hpp"

using namespace wbr;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);
}  // namespace

TEST_CASE("permutation modules of the symmetric group") {
    ModuleRep triv = perm_module_sym({3}, Q);
    CHECK(triv.dim == 1);
    for (const auto& a : triv.actions) CHECK(a == Matrix::identity(Q, 1));
    ModuleRep m11 = perm_module_sym({1, 1}, Q);
    CHECK(m11.dim == 2);
    CHECK(m11.actions[0] == Matrix::from_rows(Q, {{0, 1}, {1, 0}}));
    CHECK(perm_module_sym({2, 1}, Q).dim == 3);
    // generator relations hold: s^2 = 1, braid, commuting
    ModuleRep m = perm_module_sym({2, 1, 1}, Q);
    Matrix i = Matrix::identity(Q, m.dim);
    for (const auto& a : m.actions) CHECK(a * a == i);
    CHECK(m.actions[0] * m.actions[1] * m.actions[0] ==
          m.actions[1] * m.actions[0] * m.actions[1]);
    CHECK(m.actions[0] * m.actions[2] == m.actions[2] * m.actions[0]);
}

TEST_CASE("polytabloids") {
    // single-row shape: e_t is the unique tabloid
    Tableau t3 = Tableau::initial(Partition({3}));
    CHECK(polytabloid(t3, Q) == Matrix::from_rows(Q, {{1}}));
    // column shape (1,1): {12} - {21}
    Tableau t11 = Tableau::initial(Partition({1, 1}));
    Matrix v = polytabloid(t11, Q);
    CHECK(v.cols() == 2);
    CHECK(v.get(0, 0) == Scalar::of(Q, 1));
    CHECK(v.get(0, 1) == Scalar::of(Q, -1));
    // (2,1): exactly two nonzero entries with signs +,-
    Tableau t21 = Tableau::initial(Partition({2, 1}));
    Matrix w = polytabloid(t21, Q);
    int plus = 0, minus = 0, zero = 0;
    for (size_t j = 0; j < w.cols(); ++j) {
        Scalar c = w.get(0, j);
        if (c.is_zero()) ++zero;
        else if (c == Scalar::of(Q, 1)) ++plus;
        else if (c == Scalar::of(Q, -1)) ++minus;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
    CHECK(zero == 1);
}

TEST_CASE("Specht modules and dimension independence of the field") {
    CHECK(specht_module(Partition({3}), Q).rep.dim == 1);
    CHECK(specht_module(Partition({2, 1}), Q).rep.dim == 2);
    CHECK(specht_module(Partition({2, 2}), F5).rep.dim == 2);
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            size_t dq = specht_module(lam, Q).rep.dim;
            size_t d5 = specht_module(lam, F5).rep.dim;
            size_t d2 = specht_module(lam, FieldSpec::prime_field(2)).rep.dim;
            CHECK(dq == static_cast<size_t>(standard_tableaux_count(lam)));
            CHECK(dq == d5);
            CHECK(dq == d2);
        }
}

TEST_CASE("dual Specht modules") {
    CHECK(dual_specht(Partition({3}), Q).dim == 1);
    // S_(a) is the trivial-dual: sign twist of the column Specht
    ModuleRep d = dual_specht(Partition({2}), Q);
    CHECK(d.dim == 1);
    CHECK(d.actions[0] == Matrix::identity(Q, 1));
    CHECK(dual_specht(Partition({3, 1}), Q).dim == 3);
}

TEST_CASE("product permutation modules") {
    CHECK(perm_module_prod({2}, {3}, Q).dim == 1);
    CHECK(perm_module_prod({1, 1}, {1}, Q).dim == 2);
    CHECK(perm_module_prod({2, 1}, {1, 1}, Q).dim == 6);
    // bilinear form invariance: tabloid basis is orthonormal and actions are
    // permutation matrices, so A A^T = I
    ModuleRep m = perm_module_prod({2, 1}, {1, 1}, F5);
    for (const auto& a : m.actions) CHECK(a * a.transpose() == Matrix::identity(F5, m.dim));
}

TEST_CASE("product Specht modules") {
    CHECK(specht_prod(Partition({2}), Partition({3}), Q).rep.dim == 1);
    CHECK(specht_prod(Partition({2, 1}), Partition({2}), Q).rep.dim == 2);
    // generator polytabloid is the kron of the factor polytabloids
    Matrix el = polytabloid(Tableau::initial(Partition({2, 1})), Q);
    Matrix er = polytabloid(Tableau::initial(Partition({2})), Q);
    SubmoduleWitness s = specht_prod(Partition({2, 1}), Partition({2}), Q);
    auto coords = el.kron(er).solve_rowspan(s.basis);
    CHECK(coords.has_value());
    CHECK(dual_specht_prod(Partition({2, 1}), Partition({1, 1}), Q).dim == 2);
}

TEST_CASE("simple heads") {
    CHECK(simple_head_prod(Partition({3}), Partition({2}), F5).dim == 1);
    CHECK(simple_head_prod(Partition({2, 1}), Partition({1}), F5).dim == 2);
    CHECK_THROWS_AS(simple_head_prod(Partition({1, 1}), Partition({1}),
                                     FieldSpec::prime_field(2)),
                    BadCharacteristic);
    CHECK_THROWS_AS(simple_head_prod(Partition({1, 1, 1, 1, 1}), Partition({1}), F5),
                    NotPRegular);
}

TEST_CASE("submodule, quotient, spin") {
    ModuleRep m = perm_module_sym({1, 1}, Q);
    SubmoduleWitness s = specht_module(Partition({1, 1}), Q);
    CHECK(s.rep.dim == 1);
    // quotient by the Specht line is the trivial module
    ModuleRep qmod = quotient(m, s.basis);
    CHECK(qmod.dim == 1);
    CHECK(qmod.actions[0] == Matrix::identity(Q, 1));
    // submodule generated by zero is zero
    Matrix z(Q, 1, m.dim);
    CHECK(submodule_generated(m, z).rep.dim == 0);
    // non-invariant subspace rejected
    Matrix bad(Q, 1, 3);
    bad.set_int(0, 0, 1);
    CHECK_THROWS_AS(quotient(perm_module_sym({2, 1}, Q), bad), NotInvariant);
}

TEST_CASE("action of arbitrary product permutations") {
    ModuleRep m = perm_module_prod({2, 1}, {2}, Q);
    // k_t action spans a single line (James)
    Matrix k = alternating_column_sum_action(m, Partition({2, 1}), Partition({2}));
    CHECK(k.rank() == 1);
    // action matrices multiply per the composition convention
    ProductPermutation g1{Permutation::parse("(1 2)", 3), Permutation::identity(2)};
    ProductPermutation g2{Permutation::parse("(2 3)", 3), Permutation::identity(2)};
    Matrix a1 = action_of_product_permutation(m, 3, 2, g1);
    Matrix a2 = action_of_product_permutation(m, 3, 2, g2);
    CHECK(a1 * a2 == action_of_product_permutation(m, 3, 2, g1.compose(g2)));
}
