#include "supvar/scalar.hpp"

#include <ostream>
#include <sstream>

namespace supvar {

bool is_prime_number(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (p < 3 || p >= (1u << 31) || !is_prime_number(p))
        throw FieldError("characteristic must be an odd prime below 2^31, got " + std::to_string(p));
    return Field(p);
}

std::string Field::name() const
{
    return p_ ? "F_" + std::to_string(p_) : std::string("Q");
}

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p)
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p)
{
    std::uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

Scalar::Scalar(const Field& f, std::int64_t v) : f_(f)
{
    if (f.is_prime())
        v_ = reduce(v, f.characteristic());
    else
        q_ = v;
}

Scalar::Scalar(const Field& f, const Rational& q) : f_(f)
{
    if (!f.is_prime()) {
        q_ = q;
        return;
    }
    BigInt p = f.characteristic();
    BigInt num = boost::multiprecision::numerator(q) % p;
    BigInt den = boost::multiprecision::denominator(q) % p;
    if (num < 0)
        num += p;
    if (den == 0)
        throw FieldError("denominator divisible by the characteristic");
    auto n = static_cast<std::uint32_t>(num);
    auto d = static_cast<std::uint32_t>(den);
    v_ = mulmod(n, powmod(d, f.characteristic() - 2, f.characteristic()), f.characteristic());
}

Scalar Scalar::parse(const Field& f, const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Scalar(f, Rational(BigInt(text)));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0)
            throw FieldError("zero denominator in \"" + text + "\"");
        return Scalar(f, Rational(num, den));
    } catch (const FieldError&) {
        throw;
    } catch (const std::exception&) {
        throw FieldError("malformed scalar \"" + text + "\"");
    }
}

bool Scalar::is_zero() const
{
    return f_.is_prime() ? v_ == 0 : q_ == 0;
}

bool Scalar::is_one() const
{
    return f_.is_prime() ? v_ == 1 : q_ == 1;
}

void Scalar::check(const Scalar& o) const
{
    if (!(f_ == o.f_))
        throw FieldError("field mismatch: " + f_.name() + " vs " + o.f_.name());
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check(o);
    Scalar r;
    r.f_ = f_;
    if (f_.is_prime()) {
        std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
        r.v_ = static_cast<std::uint32_t>(s % f_.characteristic());
    } else {
        r.q_ = q_ + o.q_;
    }
    return r;
}

Scalar Scalar::operator-() const
{
    Scalar r;
    r.f_ = f_;
    if (f_.is_prime())
        r.v_ = v_ ? f_.characteristic() - v_ : 0;
    else
        r.q_ = -q_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check(o);
    Scalar r;
    r.f_ = f_;
    if (f_.is_prime())
        r.v_ = mulmod(v_, o.v_, f_.characteristic());
    else
        r.q_ = q_ * o.q_;
    return r;
}

Scalar Scalar::inv() const
{
    if (is_zero())
        throw FieldError("division by zero");
    Scalar r;
    r.f_ = f_;
    if (f_.is_prime())
        r.v_ = powmod(v_, f_.characteristic() - 2, f_.characteristic());
    else
        r.q_ = 1 / q_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    check(o);
    return *this * o.inv();
}

Scalar Scalar::pow(std::uint64_t e) const
{
    Scalar r = one(f_), b = *this;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const
{
    return f_ == o.f_ && (f_.is_prime() ? v_ == o.v_ : q_ == o.q_);
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const
{
    if (f_.characteristic() != o.f_.characteristic())
        return f_.characteristic() <=> o.f_.characteristic();
    if (f_.is_prime())
        return v_ <=> o.v_;
    if (q_ < o.q_)
        return std::strong_ordering::less;
    if (o.q_ < q_)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Scalar::str() const
{
    if (f_.is_prime())
        return std::to_string(v_);
    std::ostringstream os;
    os << boost::multiprecision::numerator(q_);
    if (boost::multiprecision::denominator(q_) != 1)
        os << '/' << boost::multiprecision::denominator(q_);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.str();
}

Scalar binomial(const Field& f, std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return Scalar::zero(f);
    if (f.is_prime()) {
        // Lucas
        std::uint64_t p = f.characteristic();
        Scalar r = Scalar::one(f);
        while (n || k) {
            std::uint64_t ni = n % p, ki = k % p;
            if (ki > ni)
                return Scalar::zero(f);
            Scalar num = Scalar::one(f), den = Scalar::one(f);
            for (std::uint64_t i = 0; i < ki; ++i) {
                num *= Scalar(f, static_cast<std::int64_t>(ni - i));
                den *= Scalar(f, static_cast<std::int64_t>(i + 1));
            }
            r *= num / den;
            n /= p;
            k /= p;
        }
        return r;
    }
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return Scalar(f, Rational(r));
}

}  // namespace supvar
