#include "pmlv/symbolic.hpp"

#include <algorithm>
#include <ostream>

#include "pmlv/constants.hpp"

namespace pmlv {

Generator Generator::zeta(int m)
{
    if (m < 2) {
        throw DomainError("zeta(" + std::to_string(m) + ") is not a valid generator");
    }
    return Generator(GeneratorKind::Zeta, m);
}

std::string Generator::str() const
{
    switch (kind_) {
    case GeneratorKind::EulerGamma:
        return "gamma";
    case GeneratorKind::Log2:
        return "log2";
    case GeneratorKind::PiSquared:
        return "pi^2";
    case GeneratorKind::Zeta:
        return "zeta(" + std::to_string(index_) + ")";
    }
    return "?";
}

Monomial::Monomial(Generator g, int power)
{
    if (power < 0) {
        throw DomainError("monomial powers must be nonnegative");
    }
    if (power > 0) {
        factors_.emplace_back(g, power);
    }
}

int Monomial::degree_of(GeneratorKind kind) const
{
    int d = 0;
    for (const auto& [g, p] : factors_) {
        if (g.kind() == kind) {
            d += p;
        }
    }
    return d;
}

std::string Monomial::str() const
{
    std::string out;
    for (const auto& [g, p] : factors_) {
        if (!out.empty()) {
            out += '*';
        }
        if (g.kind() == GeneratorKind::PiSquared) {
            out += "pi^" + std::to_string(2 * p);
            continue;
        }
        out += g.str();
        if (p > 1) {
            out += '^' + std::to_string(p);
        }
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial out;
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
            out.factors_.push_back(*ia++);
        } else if (ia == a.factors_.end() || ib->first < ia->first) {
            out.factors_.push_back(*ib++);
        } else {
            out.factors_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

std::string render(const SymbolicValue& v)
{
    if (v.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : v.terms()) {
        std::string term;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (m.empty()) {
            term = mag.str();
        } else if (mag.is_one()) {
            term = m.str();
        } else {
            term = mag.str() + "*" + m.str();
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SymbolicValue& v)
{
    return os << render(v);
}

SymbolicValue normalize_even_zetas(const SymbolicValue& v)
{
    SymbolicValue out;
    for (const auto& [m, c] : v.terms()) {
        SymbolicValue term(Monomial(), c);
        for (const auto& [g, p] : m.factors()) {
            if (g.kind() == GeneratorKind::Zeta && g.index() % 2 == 0) {
                const long half = g.index() / 2;
                // zeta(2m) = (-1)^{m-1} 2^{2m-1} B_{2m} / (2m)! * pi^{2m}
                Rational euler = pow2(2 * half - 1) * bernoulli(static_cast<std::size_t>(g.index()))
                               / Rational(factorial(static_cast<unsigned long>(g.index())));
                if (half % 2 == 0) {
                    euler = -euler;
                }
                term *= pow(euler, p);
                term *= SymbolicValue::of(Generator::pi_squared(), static_cast<int>(half * p));
            } else {
                term *= SymbolicValue::of(g, p);
            }
        }
        out += term;
    }
    return out;
}

namespace {

Real generator_value(const Generator& g, mpfr_prec_t bits)
{
    switch (g.kind()) {
    case GeneratorKind::EulerGamma:
        return constants::euler_gamma(bits);
    case GeneratorKind::Log2:
        return constants::log2(bits);
    case GeneratorKind::PiSquared:
        return constants::pi_squared(bits);
    case GeneratorKind::Zeta:
        return constants::zeta(g.index(), bits);
    }
    throw ConsistencyError("unknown generator");
}

} // namespace

Real numeric_eval(const SymbolicValue& v, int digits)
{
    if (digits < 10 || digits > 100) {
        throw RangeError("numeric_eval precision must be in [10, 100], got " + std::to_string(digits));
    }
    const mpfr_prec_t bits = bits_for_digits(digits);
    Real total(Bits{bits});
    for (const auto& [m, c] : v.terms()) {
        Real term(Bits{bits});
        mpfr_set_q(term.get(), c.get_mpq().get_mpq_t(), MPFR_RNDN);
        for (const auto& [g, p] : m.factors()) {
            term *= pow(generator_value(g, bits), static_cast<long>(p));
        }
        total += term;
    }
    return total;
}

const SymbolicValue& assert_gamma_free(const SymbolicValue& v)
{
    if (v.mentions(GeneratorKind::EulerGamma)) {
        throw ConsistencyError("Euler's gamma failed to cancel in " + render(v));
    }
    return v;
}

SymbolicValue rational_part(const CyclotomicSymbolic& v)
{
    SymbolicValue out;
    for (const auto& [m, c] : v.terms()) {
        out.add_term(m, c.to_rational());
    }
    return out;
}

CyclotomicSymbolic to_cyclotomic(const SymbolicValue& v)
{
    CyclotomicSymbolic out;
    for (const auto& [m, c] : v.terms()) {
        out.add_term(m, CyclotomicNumber(c));
    }
    return out;
}

namespace {

const char* gen_name(GeneratorKind kind)
{
    switch (kind) {
    case GeneratorKind::EulerGamma:
        return "gamma";
    case GeneratorKind::Log2:
        return "log2";
    case GeneratorKind::PiSquared:
        return "pi2";
    case GeneratorKind::Zeta:
        return "zeta";
    }
    return "?";
}

Generator gen_from_json(const nlohmann::json& j)
{
    const std::string name = j.at("gen").get<std::string>();
    if (name == "gamma") {
        return Generator::euler_gamma();
    }
    if (name == "log2") {
        return Generator::log2();
    }
    if (name == "pi2") {
        return Generator::pi_squared();
    }
    if (name == "zeta") {
        return Generator::zeta(j.at("m").get<int>());
    }
    throw DomainError("unknown generator '" + name + "'");
}

} // namespace

nlohmann::json to_json(const SymbolicValue& v)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : v.terms()) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [g, p] : m.factors()) {
            nlohmann::json f = {{"gen", gen_name(g.kind())}};
            if (g.kind() == GeneratorKind::Zeta) {
                f["m"] = g.index();
            }
            f["power"] = p;
            mono.push_back(std::move(f));
        }
        terms.push_back({{"coefficient", c.str()}, {"monomial", std::move(mono)}});
    }
    return {{"terms", std::move(terms)}, {"rendered", render(v)}};
}

SymbolicValue symbolic_from_json(const nlohmann::json& j)
{
    SymbolicValue out;
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& f : t.at("monomial")) {
            m = m * Monomial(gen_from_json(f), f.at("power").get<int>());
        }
        out.add_term(m, Rational::parse(t.at("coefficient").get<std::string>()));
    }
    return out;
}

} // namespace pmlv
