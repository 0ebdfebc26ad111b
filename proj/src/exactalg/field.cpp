#include "ssred/exactalg/field.hpp"

#include <charconv>

namespace ssred {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::GeneratorCountMismatch: return "GeneratorCountMismatch";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::LimitDoesNotExist: return "LimitDoesNotExist";
        case ErrorCode::NotInUnipotentRadical: return "NotInUnipotentRadical";
        case ErrorCode::NotBlockDiagonal: return "NotBlockDiagonal";
        case ErrorCode::NotNormal: return "NotNormal";
        case ErrorCode::AlgebraNotStable: return "AlgebraNotStable";
        case ErrorCode::PreconditionNotDestabilizable: return "PreconditionNotDestabilizable";
        case ErrorCode::Undecided: return "Undecided";
        case ErrorCode::CertificateSearchExhausted: return "CertificateSearchExhausted";
        case ErrorCode::SearchSpaceExceeded: return "SearchSpaceExceeded";
        case ErrorCode::ResourceBoundExceeded: return "ResourceBoundExceeded";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool isPrimeNumber(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) fail(ErrorCode::InvalidArgument, "prime must be below 2^31");
    if (!isPrimeNumber(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::describe() const {
    return isPrime() ? "F_" + std::to_string(p_) : std::string("Q");
}

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const Integer& v, std::uint32_t p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint32_t>();
}

std::uint32_t powMod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

Integer parseInteger(std::string_view text) {
    if (text.empty()) fail(ErrorCode::ParseError, "empty integer");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) fail(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') fail(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits);
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, std::int64_t value) : field_(field) {
    if (field.isPrime()) {
        value_ = reduce(value, field.characteristic());
    } else {
        value_ = Rational(value);
    }
}

Scalar::Scalar(const FieldSpec& field, const Rational& value) : field_(field) {
    if (field.isPrime()) {
        std::uint32_t p = field.characteristic();
        std::uint32_t den = reduce(Integer(boost::multiprecision::denominator(value)), p);
        if (den == 0) fail(ErrorCode::NotInvertible, "denominator divisible by characteristic");
        std::uint64_t num = reduce(Integer(boost::multiprecision::numerator(value)), p);
        value_ = static_cast<std::uint32_t>(num * powMod(den, p - 2, p) % p);
    } else {
        value_ = value;
    }
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
    auto slash = text.find('/');
    Integer num = parseInteger(text.substr(0, slash));
    Integer den = 1;
    if (slash != std::string_view::npos) {
        den = parseInteger(text.substr(slash + 1));
        if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Scalar(field, Rational(num, den));
}

bool Scalar::isZero() const {
    if (field_.isPrime()) return std::get<std::uint32_t>(value_) == 0;
    return std::get<Rational>(value_) == 0;
}

bool Scalar::isOne() const {
    if (field_.isPrime()) return std::get<std::uint32_t>(value_) == 1;
    return std::get<Rational>(value_) == 1;
}

void Scalar::checkField(const Scalar& rhs) const {
    if (!(field_ == rhs.field_)) {
        fail(ErrorCode::FieldMismatch, field_.describe() + " vs " + rhs.field_.describe());
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.isPrime()) {
        auto v = std::get<std::uint32_t>(value_);
        r.value_ = v == 0 ? 0u : field_.characteristic() - v;
    } else {
        r.value_ = Rational(-std::get<Rational>(value_));
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    checkField(rhs);
    if (field_.isPrime()) {
        std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(rhs.value_);
        value_ = static_cast<std::uint32_t>(s % field_.characteristic());
    } else {
        std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    checkField(rhs);
    if (field_.isPrime()) {
        std::uint64_t p = field_.characteristic();
        std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + p - std::get<std::uint32_t>(rhs.value_);
        value_ = static_cast<std::uint32_t>(s % p);
    } else {
        std::get<Rational>(value_) -= std::get<Rational>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    checkField(rhs);
    if (field_.isPrime()) {
        std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(rhs.value_);
        value_ = static_cast<std::uint32_t>(s % field_.characteristic());
    } else {
        std::get<Rational>(value_) *= std::get<Rational>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
    if (isZero()) fail(ErrorCode::NotInvertible, "division by zero");
    Scalar r = *this;
    if (field_.isPrime()) {
        std::uint32_t p = field_.characteristic();
        r.value_ = powMod(std::get<std::uint32_t>(value_), p - 2, p);
    } else {
        r.value_ = Rational(1 / std::get<Rational>(value_));
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::toString() const {
    if (field_.isPrime()) return std::to_string(std::get<std::uint32_t>(value_));
    const Rational& q = std::get<Rational>(value_);
    Integer num = boost::multiprecision::numerator(q);
    Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Scalar Scalar::random(const FieldSpec& field, std::mt19937_64& rng, std::int64_t bound) {
    if (field.isPrime()) {
        std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
        return Scalar(field, static_cast<std::int64_t>(dist(rng)));
    }
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    return Scalar(field, dist(rng));
}

}  // namespace ssred
