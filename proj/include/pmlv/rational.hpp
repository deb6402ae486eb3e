#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pmlv {

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    // Accepts "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& get_mpq() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// q^e for any integer e (q must be nonzero when e < 0).
Rational pow(const Rational& q, long e);

// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

BigInt factorial(unsigned long m);

// Generalised binomial coefficient n(n-1)...(n-k+1)/k!, valid for negative n.
Rational binomial(long n, unsigned long k);

// Bernoulli numbers B_0..B_capacity from sum_{j=0}^{n} C(n+1, j) B_j = 0,
// which fixes B_1 = -1/2.
class BernoulliTable {
public:
    static constexpr std::size_t default_capacity = 200;

    explicit BernoulliTable(std::size_t capacity = default_capacity);

    std::size_t capacity() const { return values_.size() - 1; }
    // Throws CapacityError past capacity().
    const Rational& operator[](std::size_t m) const;

    // Shared table of default capacity, built on first use.
    static const BernoulliTable& shared();

private:
    std::vector<Rational> values_;
};

inline const Rational& bernoulli(std::size_t m) { return BernoulliTable::shared()[m]; }

} // namespace pmlv
