#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "pmlv/cyclotomic.hpp"
#include "pmlv/errors.hpp"
#include "pmlv/rational.hpp"
#include "pmlv/real.hpp"

namespace pmlv {

enum class GeneratorKind { EulerGamma, Log2, PiSquared, Zeta };

// One transcendental generator: gamma, log 2, pi^2, or zeta(m) with m >= 2.
class Generator {
public:
    static Generator euler_gamma() { return Generator(GeneratorKind::EulerGamma, 0); }
    static Generator log2() { return Generator(GeneratorKind::Log2, 0); }
    static Generator pi_squared() { return Generator(GeneratorKind::PiSquared, 0); }
    // Throws DomainError for m < 2.
    static Generator zeta(int m);

    GeneratorKind kind() const { return kind_; }
    int index() const { return index_; }
    std::string str() const;

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;

private:
    Generator(GeneratorKind kind, int index) : kind_(kind), index_(index) {}

    GeneratorKind kind_;
    int index_;
};

// Product of generator powers, sorted by generator, powers >= 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Generator g, int power = 1);

    const std::vector<std::pair<Generator, int>>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    int degree_of(GeneratorKind kind) const;
    std::string str() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<Generator, int>> factors_;
};

inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const CyclotomicNumber& c) { return c.is_zero(); }

// Polynomial in the generators with coefficients in Coeff (Rational or
// CyclotomicNumber). Zero coefficients are never stored, so equality is
// structural.
template <class Coeff>
class BasicSymbolic {
public:
    using Terms = std::map<Monomial, Coeff>;

    BasicSymbolic() = default;
    BasicSymbolic(const Coeff& c) { add_term(Monomial(), c); }
    BasicSymbolic(long c) : BasicSymbolic(Coeff(Rational(c))) {}
    BasicSymbolic(const Monomial& m, const Coeff& c) { add_term(m, c); }

    static BasicSymbolic of(Generator g, int power = 1)
    {
        return BasicSymbolic(Monomial(g, power), Coeff(Rational(1)));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Coeff constant_term() const
    {
        auto it = terms_.find(Monomial());
        return it == terms_.end() ? Coeff() : it->second;
    }
    Coeff coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff() : it->second;
    }
    bool mentions(GeneratorKind kind) const
    {
        for (const auto& [m, c] : terms_) {
            if (m.degree_of(kind) > 0) {
                return true;
            }
        }
        return false;
    }

    void add_term(const Monomial& m, const Coeff& c)
    {
        if (coeff_is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    BasicSymbolic& operator+=(const BasicSymbolic& rhs)
    {
        for (const auto& [m, c] : rhs.terms_) {
            add_term(m, c);
        }
        return *this;
    }
    BasicSymbolic& operator-=(const BasicSymbolic& rhs)
    {
        for (const auto& [m, c] : rhs.terms_) {
            add_term(m, -c);
        }
        return *this;
    }
    BasicSymbolic& operator*=(const BasicSymbolic& rhs)
    {
        BasicSymbolic out;
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : rhs.terms_) {
                out.add_term(ma * mb, ca * cb);
            }
        }
        return *this = std::move(out);
    }
    BasicSymbolic& operator*=(const Rational& q)
    {
        if (q.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) {
            c *= q;
        }
        return *this;
    }
    BasicSymbolic operator-() const
    {
        BasicSymbolic out = *this;
        for (auto& [m, c] : out.terms_) {
            c = -c;
        }
        return out;
    }

    friend BasicSymbolic operator+(BasicSymbolic a, const BasicSymbolic& b) { return a += b; }
    friend BasicSymbolic operator-(BasicSymbolic a, const BasicSymbolic& b) { return a -= b; }
    friend BasicSymbolic operator*(BasicSymbolic a, const BasicSymbolic& b) { return a *= b; }
    friend BasicSymbolic operator*(BasicSymbolic a, const Rational& q) { return a *= q; }
    friend BasicSymbolic operator*(const Rational& q, BasicSymbolic a) { return a *= q; }
    friend bool operator==(const BasicSymbolic&, const BasicSymbolic&) = default;

private:
    Terms terms_;
};

using SymbolicValue = BasicSymbolic<Rational>;
using CyclotomicSymbolic = BasicSymbolic<CyclotomicNumber>;

inline bool coeff_is_zero(const SymbolicValue& v) { return v.is_zero(); }

namespace sym {

inline SymbolicValue euler_gamma() { return SymbolicValue::of(Generator::euler_gamma()); }
inline SymbolicValue log2() { return SymbolicValue::of(Generator::log2()); }
inline SymbolicValue pi_squared() { return SymbolicValue::of(Generator::pi_squared()); }
inline SymbolicValue zeta(int m) { return SymbolicValue::of(Generator::zeta(m)); }

} // namespace sym

template <class Coeff>
BasicSymbolic<Coeff> pow(const BasicSymbolic<Coeff>& v, int e)
{
    if (e < 0) {
        throw DomainError("negative powers are not representable");
    }
    BasicSymbolic<Coeff> out(1L);
    for (int i = 0; i < e; ++i) {
        out *= v;
    }
    return out;
}

// Human-readable form such as "-1/4*zeta(2) + 1/2*log2^2"; "0" for zero.
std::string render(const SymbolicValue& v);
std::ostream& operator<<(std::ostream& os, const SymbolicValue& v);

// Replace every zeta(2m) by (-1)^{m-1} 2^{2m-1} B_{2m} / (2m)! (pi^2)^m.
SymbolicValue normalize_even_zetas(const SymbolicValue& v);

// Numeric value with error below 10^{-digits+5}; digits must be in [10, 100].
Real numeric_eval(const SymbolicValue& v, int digits);

// Returns v, or throws ConsistencyError when some monomial contains gamma.
const SymbolicValue& assert_gamma_free(const SymbolicValue& v);

// Rational projection of a cyclotomic-coefficient value; throws
// ConsistencyError when any coefficient is irrational.
SymbolicValue rational_part(const CyclotomicSymbolic& v);
CyclotomicSymbolic to_cyclotomic(const SymbolicValue& v);

// {"terms": [{"coefficient": "p/q", "monomial": [{"gen": "zeta", "m": 3,
// "power": 2}, ...]}, ...], "rendered": "..."}
nlohmann::json to_json(const SymbolicValue& v);
SymbolicValue symbolic_from_json(const nlohmann::json& j);

} // namespace pmlv
