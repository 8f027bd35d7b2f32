#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace novikov {

// Base class for all engine errors. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad file, bad expression, bad parameters.
struct ParseError : Error {
    using Error::Error;
};

// Violated precondition (mixed parents, non-subalgebra, division by zero...).
struct DomainError : Error {
    using Error::Error;
};

// A check was asked to run under a hypothesis it requires but the instance
// violates (currently: characteristic 2 on a char != 2 identity).
struct HypothesisViolation : Error {
    using Error::Error;
};

enum class FieldKind { Rationals, PrimeField };

class Field;

// An exact scalar: a reduced fraction over Q, or a residue in [0,p).
// The modulus tag makes mixed-field operands detectable.
class Scalar {
  public:
    Scalar() : p_(0) {}

    const mpq_class& value() const { return v_; }
    unsigned long modulus() const { return p_; }

    bool is_zero() const { return sgn(v_) == 0; }

    bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {
        if (p_ != o.p_) return p_ < o.p_;
        return v_ < o.v_;
    }

    std::string str() const { return v_.get_str(); }

  private:
    friend class Field;
    Scalar(mpq_class v, unsigned long p) : v_(std::move(v)), p_(p) {}

    mpq_class v_;
    unsigned long p_;  // 0 for rationals
};

// Q or F_p. All scalar arithmetic goes through the owning field so the
// canonical form (reduced fraction, residue in [0,p)) is maintained.
class Field {
  public:
    static Field rationals();
    static Field prime(unsigned long p);  // rejects composite p, names a divisor

    FieldKind kind() const { return kind_; }
    unsigned long characteristic() const { return kind_ == FieldKind::Rationals ? 0 : p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long n) const;
    Scalar from_mpz(const mpz_class& n) const;
    // Accepts a decimal integer, or "a/b" over the rationals.
    Scalar parse(const std::string& text) const;
    // Converts an exact rational into this field (denominator must be a unit).
    Scalar from_rational(const mpq_class& q) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inverse(const Scalar& a) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const;

  private:
    Field(FieldKind kind, unsigned long p) : kind_(kind), p_(p) {}

    void check_member(const Scalar& a) const;
    Scalar make(mpq_class v) const;

    FieldKind kind_;
    unsigned long p_;  // valid only for PrimeField
};

// Smallest nontrivial divisor if n is composite, nullopt if n is prime.
std::optional<unsigned long> composite_witness(unsigned long n);

}  // namespace novikov
