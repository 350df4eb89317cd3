#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wbr/kernels.hpp"
#include "wbr/matrix.hpp"

using namespace wbr;

namespace {
uint64_t state = 987654321;
long long rnd_int(long long lo, long long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long long>((state >> 33) % static_cast<uint64_t>(hi - lo + 1));
}
Matrix random_matrix(FieldSpec f, size_t r, size_t c) {
    Matrix m(f, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.set_int(i, j, rnd_int(-9, 9));
    return m;
}
}  // namespace

TEST_CASE("openmp kernels match the serial reference") {
    for (uint32_t p : {5u, 65521u}) {
        kernels::FpRing ring{p};
        for (size_t n : {1ul, 7ul, 64ul, 129ul}) {
            std::vector<uint32_t> a(n * n), b(n * n);
            for (auto& x : a) x = static_cast<uint32_t>(rnd_int(0, p - 1));
            for (auto& x : b) x = static_cast<uint32_t>(rnd_int(0, p - 1));
            std::vector<uint32_t> c1(n * n), c2(n * n);
            kernels::matmul_serial(ring, a.data(), b.data(), c1.data(), n, n, n);
            kernels::matmul(ring, a.data(), b.data(), c2.data(), n, n, n);
            CHECK(c1 == c2);
            auto a1 = a, a2 = a;
            auto p1 = kernels::rref_serial(ring, a1, n, n);
            auto p2 = kernels::rref(ring, a2, n, n);
            CHECK(p1 == p2);
            CHECK(a1 == a2);
        }
    }
}

TEST_CASE("rational kernels match serial") {
    kernels::RatRing ring;
    size_t n = 24;
    std::vector<mpq_class> a(n * n), b(n * n);
    for (auto& x : a) x = mpq_class(static_cast<long>(rnd_int(-5, 5)), static_cast<long>(rnd_int(1, 7)));
    for (auto& x : b) x = mpq_class(static_cast<long>(rnd_int(-5, 5)), static_cast<long>(rnd_int(1, 7)));
    for (auto& x : a) x.canonicalize();
    for (auto& x : b) x.canonicalize();
    std::vector<mpq_class> c1(n * n), c2(n * n);
    kernels::matmul_serial(ring, a.data(), b.data(), c1.data(), n, n, n);
    kernels::matmul(ring, a.data(), b.data(), c2.data(), n, n, n);
    CHECK(c1 == c2);
}

TEST_CASE("rref, rank, kernel, inverse over both fields") {
    for (uint32_t p : {0u, 5u}) {
        FieldSpec f = p ? FieldSpec::prime_field(p) : FieldSpec::rationals();
        Matrix a = random_matrix(f, 9, 13);
        Matrix k = a.kernel();
        CHECK(k.rows() + a.rank() == 13);
        for (size_t i = 0; i < k.rows(); ++i) {
            Matrix prod = a * k.row(i).transpose();
            CHECK(prod.is_zero());
        }
        Matrix nr = a.null_rows();
        CHECK((nr.rows() == 0 || (nr * a).is_zero()));
        // invertible square matrix round trip
        Matrix s = random_matrix(f, 8, 8);
        while (!s.invertible()) s = random_matrix(f, 8, 8);
        CHECK((s * s.inverse()) == Matrix::identity(f, 8));
        // solve C * U = V
        Matrix u = random_matrix(f, 5, 11);
        Matrix c = random_matrix(f, 4, 5);
        Matrix v = c * u;
        auto sol = v.solve_rowspan(u);
        REQUIRE(sol.has_value());
        CHECK((*sol * u) == v);
    }
}

TEST_CASE("solve_rowspan detects vectors outside the span") {
    FieldSpec f = FieldSpec::prime_field(7);
    Matrix u = Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}});
    Matrix v = Matrix::from_rows(f, {{0, 0, 1}});
    CHECK(!v.solve_rowspan(u).has_value());
}

TEST_CASE("matrix algebra identities") {
    FieldSpec f = FieldSpec::rationals();
    Matrix a = random_matrix(f, 6, 6), b = random_matrix(f, 6, 6), c = random_matrix(f, 6, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.transpose().transpose() == a);
    CHECK((a.kron(b)).rows() == 36);
    CHECK(a.pow(3) == a * a * a);
}
