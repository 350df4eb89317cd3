#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wbr/scalar.hpp"

using namespace wbr;

TEST_CASE("rational arithmetic is exact") {
    FieldSpec q = FieldSpec::rationals();
    Scalar a = Scalar::of_frac(q, 1, 2), b = Scalar::of_frac(q, 1, 3);
    CHECK(scalar_arith(a, b, ScalarOp::Add) == Scalar::of_frac(q, 5, 6));
    CHECK((a * b) == Scalar::of_frac(q, 1, 6));
    CHECK((a - a).is_zero());
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK(scalar_arith(Scalar::of(f5, 2), Scalar::of(f5, 3), ScalarOp::Mul) == Scalar::of(f5, 1));
    FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK(Scalar::of(f7, 2).inverse() == Scalar::of(f7, 4));
    CHECK_THROWS_AS(Scalar::of(f5, 0).inverse(), DivisionByZero);
    CHECK_THROWS_AS((void)scalar_arith(Scalar::of(f5, 1), Scalar::of(f7, 1), ScalarOp::Add),
                    FieldMismatch);
}

TEST_CASE("field spec validation") {
    CHECK_THROWS_AS(FieldSpec::prime_field(4), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FieldSpec::prime_field(2).require_char_not_2_3(), BadCharacteristic);
    CHECK_THROWS_AS(FieldSpec::prime_field(3).require_char_not_2_3(), BadCharacteristic);
    FieldSpec::prime_field(5).require_char_not_2_3();
    FieldSpec::rationals().require_char_not_2_3();
}

TEST_CASE("parse_field_and_delta") {
    auto [f, d] = parse_field_and_delta("Q;0");
    CHECK(f.is_rationals());
    CHECK(d.is_zero());
    auto [f5, d5] = parse_field_and_delta("F5;2");
    CHECK(f5.characteristic == 5);
    CHECK(d5 == Scalar::of(f5, 2));
    CHECK_THROWS_AS(parse_field_and_delta("F4;1"), NonPrimeCharacteristic);
    CHECK_THROWS_AS(parse_field_and_delta("F2;1/2"), DeltaNotInField);
    CHECK_THROWS_AS(parse_field_and_delta("Q0"), ParseError);
    auto [fq, dq] = parse_field_and_delta("Q;-3/7");
    CHECK(dq == Scalar::of_frac(fq, -3, 7));
}

TEST_CASE("field axioms on random samples") {
    for (uint32_t p : {0u, 5u, 7u, 13u}) {
        FieldSpec f = p ? FieldSpec::prime_field(p) : FieldSpec::rationals();
        uint64_t s = 12345;
        auto rnd = [&]() {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            long long v = static_cast<long long>((s >> 33) % 19) - 9;
            return Scalar::of(f, v);
        };
        for (int i = 0; i < 200; ++i) {
            Scalar a = rnd(), b = rnd(), c = rnd();
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("scalar text round trip") {
    FieldSpec q = FieldSpec::rationals();
    for (long long n = -6; n <= 6; ++n)
        for (long long d = 1; d <= 5; ++d) {
            Scalar s = Scalar::of_frac(q, n, d);
            CHECK(Scalar::parse(q, s.to_string()) == s);
        }
    FieldSpec f7 = FieldSpec::prime_field(7);
    for (long long n = 0; n < 7; ++n) {
        Scalar s = Scalar::of(f7, n);
        CHECK(Scalar::parse(f7, s.to_string()) == s);
    }
}
