#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace supvar {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// F_p for an odd prime p < 2^31, or Q when characteristic() == 0.
class Field {
public:
    Field() = default;
    static Field prime(std::uint32_t p);
    static Field rationals() { return Field(); }

    std::uint32_t characteristic() const { return p_; }
    bool is_prime() const { return p_ != 0; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

class Scalar {
public:
    Scalar() = default;
    Scalar(const Field& f, std::int64_t v);
    Scalar(const Field& f, const Rational& q);

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }
    // "a/b" or "a"; over F_p the denominator is inverted
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    // canonical representative: residue in [0,p) or the reduced fraction
    std::uint32_t residue() const { return v_; }
    const Rational& rational() const { return q_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;
    Scalar pow(std::uint64_t e) const;

    bool operator==(const Scalar& o) const;
    std::strong_ordering operator<=>(const Scalar& o) const;

    std::string str() const;

private:
    void check(const Scalar& o) const;

    Field f_;
    std::uint32_t v_ = 0;
    Rational q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// binom(n, k) as a field element
Scalar binomial(const Field& f, std::uint64_t n, std::uint64_t k);

}  // namespace supvar
