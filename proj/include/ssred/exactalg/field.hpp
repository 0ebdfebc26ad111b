#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

#include "ssred/error.hpp"

namespace ssred {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// The ground field: F_p for a prime p < 2^31, or the rationals.
class FieldSpec {
public:
    enum class Kind { Prime, Rational };

    /// Throws InvalidArgument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rational() { return FieldSpec(Kind::Rational, 0); }

    Kind kind() const noexcept { return kind_; }
    bool isPrime() const noexcept { return kind_ == Kind::Prime; }
    bool isRational() const noexcept { return kind_ == Kind::Rational; }
    /// Characteristic; 0 for the rationals.
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string describe() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool isPrimeNumber(std::uint64_t n);

/// An exact field element. Prime-field values are kept reduced in [0, p);
/// rationals are kept in lowest terms with positive denominator (GMP canonical form).
class Scalar {
public:
    Scalar(const FieldSpec& field, std::int64_t value);
    Scalar(const FieldSpec& field, const Rational& value);

    static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
    static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
    /// Parses "a" or "a/b" (a, b decimal integers). Prime fields reduce modulo p and
    /// reject denominators divisible by p.
    static Scalar parse(const FieldSpec& field, std::string_view text);

    const FieldSpec& field() const noexcept { return field_; }
    bool isZero() const;
    bool isOne() const;

    /// Prime field residue; precondition: field().isPrime().
    std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
    /// Rational value; precondition: field().isRational().
    const Rational& rational() const { return std::get<Rational>(value_); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Throws NotInvertible on zero.
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical text: "r" for F_p, "a" or "a/b" for rationals.
    std::string toString() const;

    /// Uniform element of F_p, or an integer drawn from [-bound, bound] over Q.
    static Scalar random(const FieldSpec& field, std::mt19937_64& rng, std::int64_t bound = 3);

private:
    void checkField(const Scalar& rhs) const;

    FieldSpec field_;
    std::variant<std::uint32_t, Rational> value_;
};

}  // namespace ssred
