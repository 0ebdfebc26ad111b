#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ssred/exactalg/matrix.hpp"

namespace ssred {

/// Univariate polynomial over a FieldSpec; coefficients stored low degree first,
/// without trailing zeros (the zero polynomial has no coefficients).
class Poly {
public:
    explicit Poly(const FieldSpec& field) : field_(field) {}
    Poly(const FieldSpec& field, std::vector<Scalar> coeffs);
    /// Integer coefficients, low degree first.
    Poly(const FieldSpec& field, std::initializer_list<std::int64_t> coeffs);

    static Poly constant(const Scalar& c);
    static Poly x(const FieldSpec& field);

    const FieldSpec& field() const noexcept { return field_; }
    bool isZero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    Scalar coeff(std::size_t i) const;
    Scalar leading() const;
    bool isMonic() const;
    Poly monic() const;
    Poly derivative() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& s, Poly p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    std::string toString() const;

private:
    void trim();

    FieldSpec field_;
    std::vector<Scalar> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);
/// Bezout: returns (g, s, t) with s a + t b = g, g monic.
struct Bezout {
    Poly g, s, t;
};
Bezout extendedGcd(const Poly& a, const Poly& b);
Poly powMod(const Poly& base, const Integer& exponent, const Poly& modulus);

/// det(x I - m) via reduction to Hessenberg form.
Poly charPoly(const Matrix& m);
/// f(m) by Horner's rule.
Matrix evaluate(const Poly& f, const Matrix& m);

/// Distinct monic irreducible factors of f over its field, sorted by degree then
/// coefficients. Over F_p: square-free part, distinct-degree and Cantor-Zassenhaus
/// splitting (randomized, seeded). Over Q: Zassenhaus (factor modulo a good prime,
/// Hensel lift, recombine by trial division).
std::vector<Poly> irreducibleFactors(const Poly& f, std::uint64_t seed = 0);
bool isIrreducible(const Poly& f);

}  // namespace ssred
