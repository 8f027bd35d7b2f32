#include "novikov/field.hpp"

namespace novikov {

std::optional<unsigned long> composite_witness(unsigned long n) {
    if (n < 2) return 1;  // neither prime nor composite; 1 is the best witness we can name
    if (n % 2 == 0) return n == 2 ? std::nullopt : std::optional<unsigned long>(2);
    for (unsigned long d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return d;
    }
    return std::nullopt;
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Field Field::prime(unsigned long p) {
    if (p < 2) throw ParseError("prime-field modulus must be >= 2, got " + std::to_string(p));
    if (auto d = composite_witness(p)) {
        throw ParseError("modulus " + std::to_string(p) + " is not prime (divisor " +
                         std::to_string(*d) + ")");
    }
    return Field(FieldKind::PrimeField, p);
}

void Field::check_member(const Scalar& a) const {
    if (a.modulus() != (kind_ == FieldKind::Rationals ? 0ul : p_)) {
        throw DomainError("scalar from a different field (modulus " +
                          std::to_string(a.modulus()) + ") passed to " + describe());
    }
}

Scalar Field::make(mpq_class v) const {
    v.canonicalize();
    if (kind_ == FieldKind::PrimeField) {
        // reduce numerator mod p; denominator must already be 1 here
        mpz_class r = v.get_num() % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return Scalar(mpq_class(r), p_);
    }
    return Scalar(std::move(v), 0);
}

Scalar Field::zero() const { return make(0); }
Scalar Field::one() const { return make(1); }
Scalar Field::from_int(long n) const { return make(mpq_class(n)); }
Scalar Field::from_mpz(const mpz_class& n) const { return make(mpq_class(n)); }

Scalar Field::from_rational(const mpq_class& q) const {
    if (kind_ == FieldKind::Rationals) return make(q);
    mpq_class r = q;
    r.canonicalize();
    mpz_class den = r.get_den() % static_cast<long>(p_);
    if (den == 0) {
        throw DomainError("rational " + r.get_str() + " has no image in F_" + std::to_string(p_));
    }
    Scalar num = from_mpz(r.get_num());
    Scalar d = from_mpz(r.get_den());
    return div(num, d);
}

Scalar Field::parse(const std::string& text) const {
    if (text.empty()) throw ParseError("empty scalar literal");
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw ParseError("bad scalar literal '" + text + "'");
    if (kind_ == FieldKind::PrimeField) {
        if (text.find('/') != std::string::npos) {
            throw ParseError("fraction literal '" + text + "' not allowed over F_" +
                             std::to_string(p_) + "; use a residue");
        }
        return make(v);
    }
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    return make(v);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    check_member(a);
    check_member(b);
    return make(a.value() + b.value());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    check_member(a);
    check_member(b);
    return make(a.value() - b.value());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    check_member(a);
    check_member(b);
    return make(a.value() * b.value());
}

Scalar Field::neg(const Scalar& a) const {
    check_member(a);
    return make(-a.value());
}

Scalar Field::inverse(const Scalar& a) const {
    check_member(a);
    if (a.is_zero()) throw DomainError("division by zero in " + describe());
    if (kind_ == FieldKind::Rationals) return make(1 / a.value());
    mpz_class inv;
    mpz_class p(static_cast<long>(p_));
    mpz_invert(inv.get_mpz_t(), a.value().get_num().get_mpz_t(), p.get_mpz_t());
    return make(mpq_class(inv));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inverse(b)); }

std::string Field::describe() const {
    return kind_ == FieldKind::Rationals ? "Q" : "F_" + std::to_string(p_);
}

}  // namespace novikov
