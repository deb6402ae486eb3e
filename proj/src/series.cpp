#include "pmlv/series.hpp"

#include "pmlv/constants.hpp"

namespace pmlv {

namespace {

bool is_half(const Rational& a)
{
    return a == Rational(1, 2);
}

[[noreturn]] void unsupported_point(const Rational& a)
{
    throw DomainError("exact log-gamma expansion is only available at a = 1 and a = 1/2, not "
                      + a.str());
}

} // namespace

SymbolicValue SpecialValues<SymbolicValue>::digamma(const Rational& a)
{
    if (a.is_one()) {
        return -sym::euler_gamma();
    }
    if (is_half(a)) {
        return -sym::euler_gamma() - Rational(2) * sym::log2();
    }
    unsupported_point(a);
}

SymbolicValue SpecialValues<SymbolicValue>::hurwitz_zeta(int m, const Rational& a)
{
    if (a.is_one()) {
        return sym::zeta(m);
    }
    if (is_half(a)) {
        return (pow2(m) - Rational(1)) * sym::zeta(m);
    }
    unsupported_point(a);
}

CyclotomicSymbolic SpecialValues<CyclotomicSymbolic>::digamma(const Rational& a)
{
    return to_cyclotomic(SpecialValues<SymbolicValue>::digamma(a));
}

CyclotomicSymbolic SpecialValues<CyclotomicSymbolic>::hurwitz_zeta(int m, const Rational& a)
{
    return to_cyclotomic(SpecialValues<SymbolicValue>::hurwitz_zeta(m, a));
}

Complex SpecialValues<Complex>::digamma(const Rational& a)
{
    return Complex(constants::digamma(Real(a)));
}

Complex SpecialValues<Complex>::hurwitz_zeta(int m, const Rational& a)
{
    if (a.is_one()) {
        return Complex(constants::zeta(m, working_bits()));
    }
    return Complex(constants::hurwitz_zeta(m, Real(a)));
}

nlohmann::json to_json(const TruncatedSeries<SymbolicValue>& s)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : s.coeffs()) {
        out.push_back(to_json(c));
    }
    return out;
}

nlohmann::json to_json(const TruncatedSeries<Rational>& s)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : s.coeffs()) {
        out.push_back(c.str());
    }
    return out;
}

nlohmann::json to_json(const Complex& z, int digits)
{
    return {{"re", z.real().str(digits)}, {"im", z.imag().str(digits)}};
}

nlohmann::json to_json(const TruncatedSeries<Complex>& s, int digits)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : s.coeffs()) {
        out.push_back(to_json(c, digits));
    }
    return out;
}

} // namespace pmlv
