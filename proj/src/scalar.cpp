#include "wbr/scalar.hpp"

#include <cstdlib>

namespace wbr {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(uint32_t p) : characteristic(p) {
    if (p != 0) {
        if (!is_prime_u32(p))
            throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
        if (p > 65535)
            throw NonPrimeCharacteristic("prime " + std::to_string(p) + " exceeds the 16-bit limit");
    }
}

void FieldSpec::require_char_not_2_3() const {
    if (characteristic == 2 || characteristic == 3)
        throw BadCharacteristic("construction requires char K not in {2,3}, got " +
                                std::to_string(characteristic));
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "F" + std::to_string(characteristic);
}

namespace {

uint32_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
    if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

}  // namespace

Scalar Scalar::zero(FieldSpec f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(FieldSpec f) { return of(f, 1); }

Scalar Scalar::of(FieldSpec f, long long n) {
    Scalar s;
    s.field_ = f;
    if (f.is_rationals()) {
        s.rat_ = mpq_class(static_cast<long>(n));
    } else {
        long long m = n % static_cast<long long>(f.characteristic);
        if (m < 0) m += f.characteristic;
        s.res_ = static_cast<uint32_t>(m);
    }
    return s;
}

Scalar Scalar::of_frac(FieldSpec f, long long num, long long den) {
    if (den == 0) throw DivisionByZero("denominator 0");
    return of(f, num) / of(f, den);
}

Scalar Scalar::of_mpq(FieldSpec f, const mpq_class& q) {
    Scalar s;
    s.field_ = f;
    if (f.is_rationals()) {
        s.rat_ = q;
        s.rat_.canonicalize();
    } else {
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class p(f.characteristic);
        mpz_class dm = den % p;
        if (dm == 0)
            throw DeltaNotInField(q.get_str() + " has no image in F_" +
                                  std::to_string(f.characteristic));
        mpz_class nm = num % p;
        uint32_t n32 = static_cast<uint32_t>(mpz_class((nm + p) % p).get_ui());
        uint32_t d32 = static_cast<uint32_t>(mpz_class((dm + p) % p).get_ui());
        s.res_ = static_cast<uint32_t>(static_cast<uint64_t>(n32) *
                                       mod_inv(d32, f.characteristic) % f.characteristic);
    }
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1 % field_.characteristic;
}

namespace {
void check_fields(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field()))
        throw FieldMismatch("operands live in " + a.field().to_string() + " and " +
                            b.field().to_string());
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    check_fields(*this, o);
    Scalar s = *this;
    if (field_.is_rationals()) s.rat_ = rat_ + o.rat_;
    else s.res_ = (res_ + o.res_) % field_.characteristic;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_fields(*this, o);
    Scalar s = *this;
    if (field_.is_rationals()) s.rat_ = rat_ - o.rat_;
    else s.res_ = (res_ + field_.characteristic - o.res_) % field_.characteristic;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_fields(*this, o);
    Scalar s = *this;
    if (field_.is_rationals()) s.rat_ = rat_ * o.rat_;
    else s.res_ = static_cast<uint32_t>(static_cast<uint64_t>(res_) * o.res_ %
                                        field_.characteristic);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_fields(*this, o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rationals()) s.rat_ = -rat_;
    else s.res_ = res_ == 0 ? 0 : field_.characteristic - res_;
    return s;
}

Scalar Scalar::inverse() const {
    Scalar s = *this;
    if (field_.is_rationals()) {
        if (rat_ == 0) throw DivisionByZero("inverse of 0 in Q");
        s.rat_ = 1 / rat_;
    } else {
        s.res_ = mod_inv(res_, field_.characteristic);
    }
    return s;
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = Scalar::one(field_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

uint32_t Scalar::residue() const {
    if (field_.is_rationals()) throw FieldMismatch("residue() called on a rational");
    return res_;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rationals()) throw FieldMismatch("rational() called on an F_p element");
    return rat_;
}

std::string Scalar::to_string() const {
    if (field_.is_rationals()) return rat_.get_str();
    return std::to_string(res_);
}

Scalar Scalar::parse(FieldSpec f, const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar literal");
    size_t slash = text.find('/');
    auto parse_int = [](const std::string& s) -> long long {
        if (s.empty()) throw ParseError("empty integer literal");
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad integer literal '" + s + "'");
        }
        if (pos != s.size()) throw ParseError("trailing junk in integer literal '" + s + "'");
        return v;
    };
    if (slash == std::string::npos) return of(f, parse_int(text));
    long long num = parse_int(text.substr(0, slash));
    long long den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw ParseError("denominator must be positive in '" + text + "'");
    if (f.is_rationals()) {
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return of_mpq(f, q);
    }
    if (den % f.characteristic == 0)
        throw DeltaNotInField("'" + text + "' has no image in " + f.to_string());
    return of_frac(f, num, den);
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::Add: return a + b;
        case ScalarOp::Sub: return a - b;
        case ScalarOp::Mul: return a * b;
        case ScalarOp::Div: return a / b;
    }
    throw InternalError("unknown scalar op");
}

std::pair<FieldSpec, Scalar> parse_field_and_delta(const std::string& text) {
    size_t semi = text.find(';');
    if (semi == std::string::npos)
        throw ParseError("expected '<field>;<delta>' in '" + text + "'");
    std::string fs = text.substr(0, semi);
    std::string ds = text.substr(semi + 1);
    FieldSpec field;
    if (fs == "Q") {
        field = FieldSpec::rationals();
    } else if (!fs.empty() && fs[0] == 'F') {
        size_t pos = 0;
        unsigned long p = 0;
        try {
            p = std::stoul(fs.substr(1), &pos);
        } catch (const std::exception&) {
            throw ParseError("bad field spec '" + fs + "'");
        }
        if (pos != fs.size() - 1) throw ParseError("bad field spec '" + fs + "'");
        field = FieldSpec::prime_field(static_cast<uint32_t>(p));
    } else {
        throw ParseError("bad field spec '" + fs + "'");
    }
    return {field, Scalar::parse(field, ds)};
}

}  // namespace wbr
