#include "pmlv/rational.hpp"

#include <ostream>

#include "pmlv/errors.hpp"

namespace pmlv {

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational number: '" + s + "'");
    }
}

std::string Rational::str() const
{
    return value_.get_str();
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.str();
}

Rational pow(const Rational& q, long e)
{
    if (e < 0) {
        return Rational(1) / pow(q, -e);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

Rational pow2(long e)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

BigInt factorial(unsigned long m)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

Rational binomial(long n, unsigned long k)
{
    BigInt num = 1;
    for (unsigned long i = 0; i < k; ++i) {
        num *= BigInt(n) - BigInt(i);
    }
    return Rational(num, factorial(k));
}

BernoulliTable::BernoulliTable(std::size_t capacity)
{
    values_.reserve(capacity + 1);
    values_.emplace_back(1);
    // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j
    for (std::size_t n = 1; n <= capacity; ++n) {
        if (n > 1 && n % 2 == 1) {
            values_.emplace_back(0);
            continue;
        }
        Rational acc;
        BigInt c = 1; // C(n+1, j), updated incrementally
        for (std::size_t j = 0; j < n; ++j) {
            if (!values_[j].is_zero()) {
                acc += Rational(c) * values_[j];
            }
            c = c * static_cast<unsigned long>(n + 1 - j) / static_cast<unsigned long>(j + 1);
        }
        values_.push_back(-acc / Rational(static_cast<long>(n + 1)));
    }
}

const Rational& BernoulliTable::operator[](std::size_t m) const
{
    if (m >= values_.size()) {
        throw CapacityError("Bernoulli index " + std::to_string(m) + " exceeds table capacity "
                            + std::to_string(capacity()));
    }
    return values_[m];
}

const BernoulliTable& BernoulliTable::shared()
{
    static const BernoulliTable table;
    return table;
}

} // namespace pmlv
