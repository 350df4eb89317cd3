#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "wbr/errors.hpp"

namespace wbr {

// Ambient field of a computation: Q (characteristic 0) or F_p, p a 16-bit prime.
struct FieldSpec {
    uint32_t characteristic = 0;  // 0 for Q, prime p otherwise

    FieldSpec() = default;
    explicit FieldSpec(uint32_t p);

    bool is_rationals() const { return characteristic == 0; }
    bool operator==(const FieldSpec& o) const = default;

    // Constructions proved under "char K != 2,3" query this and refuse.
    void require_char_not_2_3() const;

    std::string to_string() const;
    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime_field(uint32_t p) { return FieldSpec(p); }
};

bool is_prime_u32(uint32_t n);

// Exact field element in canonical form: reduced fraction over Q,
// residue in [0,p) over F_p. Equality is equality of canonical forms.
class Scalar {
public:
    Scalar() : field_() {}  // 0 in Q
    static Scalar zero(FieldSpec f);
    static Scalar one(FieldSpec f);
    static Scalar of(FieldSpec f, long long n);
    static Scalar of_frac(FieldSpec f, long long num, long long den);
    static Scalar of_mpq(FieldSpec f, const mpq_class& q);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Residue in [0,p); only valid over F_p.
    uint32_t residue() const;
    // Only valid over Q.
    const mpq_class& rational() const;

    // Text format: integers and a/b with b > 0, gcd(|a|,b) = 1.
    std::string to_string() const;
    static Scalar parse(FieldSpec f, const std::string& text);

private:
    FieldSpec field_;
    uint32_t res_ = 0;  // F_p payload
    mpq_class rat_ = 0; // Q payload
};

enum class ScalarOp { Add, Sub, Mul, Div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

// Grammar: ("Q" | "F"<prime>) ";" <delta-literal>, delta-literal = int or a/b.
std::pair<FieldSpec, Scalar> parse_field_and_delta(const std::string& text);

}  // namespace wbr
