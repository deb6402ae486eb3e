#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "pmlv/errors.hpp"
#include "pmlv/rational.hpp"
#include "pmlv/real.hpp"
#include "pmlv/symbolic.hpp"

namespace pmlv {

inline bool ring_is_zero(const Rational& q) { return q.is_zero(); }
inline bool ring_is_one(const Rational& q) { return q.is_one(); }
inline bool ring_is_zero(const CyclotomicNumber& z) { return z.is_zero(); }
inline bool ring_is_one(const CyclotomicNumber& z) { return z.is_one(); }
inline bool ring_is_zero(const Complex& z) { return z.is_zero(); }
inline bool ring_is_one(const Complex& z) { return z.imag().is_zero() && z.real() == Real(1L); }
template <class C>
bool ring_is_zero(const BasicSymbolic<C>& v) { return v.is_zero(); }
template <class C>
bool ring_is_one(const BasicSymbolic<C>& v) { return v == BasicSymbolic<C>(1L); }

// c_0 + c_1 x + ... + c_T x^T over a commutative ring R that is constructible
// from Rational. Binary operations require equal truncation orders; use
// truncated() to re-truncate explicitly.
template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(checked(order) + 1, R(Rational(0))) {}
    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw DomainError("a truncated series needs at least one coefficient");
        }
    }

    static TruncatedSeries one(int order)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = R(Rational(1));
        return s;
    }
    // c * x
    static TruncatedSeries monomial(int order, int degree, const R& c)
    {
        TruncatedSeries s(order);
        if (degree <= order) {
            s.coeffs_[static_cast<std::size_t>(degree)] = c;
        }
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    R& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

    TruncatedSeries truncated(int order) const
    {
        if (order > this->order()) {
            throw DomainError("cannot extend a series from order " + std::to_string(this->order())
                              + " to " + std::to_string(order));
        }
        return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs)
    {
        same_order(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += rhs.coeffs_[i];
        }
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& rhs)
    {
        same_order(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= rhs.coeffs_[i];
        }
        return *this;
    }
    TruncatedSeries& operator*=(const R& c)
    {
        for (auto& a : coeffs_) {
            a *= c;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return series_mul(a, b);
    }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    void same_order(const TruncatedSeries& rhs) const
    {
        if (rhs.order() != order()) {
            throw DomainError("series order mismatch: " + std::to_string(order()) + " vs "
                              + std::to_string(rhs.order()));
        }
    }

private:
    static std::size_t checked(int order)
    {
        if (order < 0) {
            throw DomainError("series order must be nonnegative");
        }
        return static_cast<std::size_t>(order);
    }

    std::vector<R> coeffs_;
};

// Cauchy product truncated at the common order.
template <class R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    a.same_order(b);
    const int t = a.order();
    TruncatedSeries<R> out(t);
    for (int i = 0; i <= t; ++i) {
        if (ring_is_zero(a[i])) {
            continue;
        }
        for (int j = 0; i + j <= t; ++j) {
            if (!ring_is_zero(b[j])) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

// exp(a) for a with zero constant term, via b' = a' b:
// b_m = (1/m) sum_{j=1}^{m} j a_j b_{m-j}.
template <class R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& a)
{
    if (!ring_is_zero(a[0])) {
        throw DomainError("series_exp needs a zero constant term");
    }
    const int t = a.order();
    TruncatedSeries<R> b = TruncatedSeries<R>::one(t);
    for (int m = 1; m <= t; ++m) {
        R acc(Rational(0));
        for (int j = 1; j <= m; ++j) {
            if (!ring_is_zero(a[j]) && !ring_is_zero(b[m - j])) {
                acc += (a[j] * b[m - j]) * R(Rational(j));
            }
        }
        b[m] = acc * R(Rational(1, m));
    }
    return b;
}

// log(a) for a with constant term 1:
// l_m = a_m - (1/m) sum_{j=1}^{m-1} j l_j a_{m-j}.
template <class R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& a)
{
    if (!ring_is_one(a[0])) {
        throw DomainError("series_log needs constant term 1");
    }
    const int t = a.order();
    TruncatedSeries<R> l(t);
    for (int m = 1; m <= t; ++m) {
        R acc(Rational(0));
        for (int j = 1; j < m; ++j) {
            if (!ring_is_zero(l[j]) && !ring_is_zero(a[m - j])) {
                acc += (l[j] * a[m - j]) * R(Rational(j));
            }
        }
        l[m] = a[m] - acc * R(Rational(1, m));
    }
    return l;
}

// Values of psi(a) and zeta(m, a) in a coefficient ring. The symbolic rings
// only know a = 1 and a = 1/2:
//   psi(1) = -gamma, psi(1/2) = -gamma - 2 log 2,
//   zeta(m, 1) = zeta(m), zeta(m, 1/2) = (2^m - 1) zeta(m).
// Complex evaluates at the working precision for any rational a > 0.
template <class R>
struct SpecialValues;

template <>
struct SpecialValues<SymbolicValue> {
    static SymbolicValue digamma(const Rational& a);
    static SymbolicValue hurwitz_zeta(int m, const Rational& a);
};

template <>
struct SpecialValues<CyclotomicSymbolic> {
    static CyclotomicSymbolic digamma(const Rational& a);
    static CyclotomicSymbolic hurwitz_zeta(int m, const Rational& a);
};

template <>
struct SpecialValues<Complex> {
    static Complex digamma(const Rational& a);
    static Complex hurwitz_zeta(int m, const Rational& a);
};

// log Gamma(a - c x) - log Gamma(a) up to x^T:
//   -psi(a) c x + sum_{m=2}^{T} zeta(m, a) c^m x^m / m.
template <class R>
TruncatedSeries<R> log_gamma_at(const Rational& a, const R& c, int order)
{
    if (a.sign() <= 0) {
        throw DomainError("log_gamma_at needs a > 0");
    }
    TruncatedSeries<R> s(order);
    if (ring_is_zero(c) || order < 1) {
        return s;
    }
    s[1] = -(SpecialValues<R>::digamma(a) * c);
    R power = c;
    for (int m = 2; m <= order; ++m) {
        power = power * c;
        s[m] = SpecialValues<R>::hurwitz_zeta(m, a) * power * R(Rational(1, m));
    }
    return s;
}

// log Gamma(1 - c x) = gamma c x + sum_{m>=2} zeta(m) c^m x^m / m.
template <class R>
TruncatedSeries<R> log_gamma_one_minus(const R& c, int order)
{
    return log_gamma_at<R>(Rational(1), c, order);
}

nlohmann::json to_json(const TruncatedSeries<SymbolicValue>& s);
nlohmann::json to_json(const TruncatedSeries<Rational>& s);
nlohmann::json to_json(const TruncatedSeries<Complex>& s, int digits);
nlohmann::json to_json(const Complex& z, int digits);

} // namespace pmlv
