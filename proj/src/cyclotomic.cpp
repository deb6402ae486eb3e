#include "pmlv/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pmlv/errors.hpp"

namespace pmlv {

namespace {

std::mutex phi_mutex;
std::map<long, std::vector<BigInt>> phi_cache;

std::vector<BigInt> compute_cyclotomic(long order)
{
    // start from x^M - 1, divide out Phi_d for proper divisors d
    std::vector<BigInt> poly(static_cast<std::size_t>(order) + 1, BigInt(0));
    poly.front() = -1;
    poly.back() = 1;
    for (long d = 1; d < order; ++d) {
        if (order % d != 0) {
            continue;
        }
        const std::vector<BigInt>& div = cyclotomic_polynomial(d);
        const long dd = static_cast<long>(div.size()) - 1;
        const long top = static_cast<long>(poly.size()) - 1;
        std::vector<BigInt> quot(static_cast<std::size_t>(top - dd) + 1, BigInt(0));
        for (long i = top; i >= dd; --i) {
            const BigInt c = poly[static_cast<std::size_t>(i)];
            quot[static_cast<std::size_t>(i - dd)] = c;
            for (long j = 0; j <= dd; ++j) {
                poly[static_cast<std::size_t>(i - dd + j)] -= c * div[static_cast<std::size_t>(j)];
            }
        }
        for (long j = 0; j < dd; ++j) {
            if (poly[static_cast<std::size_t>(j)] != 0) {
                throw ConsistencyError("cyclotomic division left a remainder");
            }
        }
        poly = std::move(quot);
    }
    return poly;
}

// Reduce a polynomial in w modulo the monic Phi_order, leaving phi(order) coefficients.
std::vector<Rational> reduce_mod_phi(long order, std::vector<Rational> poly)
{
    const auto& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i].is_zero()) {
            continue;
        }
        const Rational c = poly[i];
        for (std::size_t j = 0; j <= deg; ++j) {
            poly[i - deg + j] -= c * Rational(phi[j]);
        }
    }
    poly.resize(deg);
    return poly;
}

long mod_pos(long e, long m)
{
    e %= m;
    return e < 0 ? e + m : e;
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long order)
{
    if (order < 1) {
        throw DomainError("cyclotomic order must be positive");
    }
    {
        std::lock_guard lock(phi_mutex);
        if (auto it = phi_cache.find(order); it != phi_cache.end()) {
            return it->second;
        }
    }
    auto poly = compute_cyclotomic(order);
    std::lock_guard lock(phi_mutex);
    return phi_cache.try_emplace(order, std::move(poly)).first->second;
}

long euler_phi(long order)
{
    return static_cast<long>(cyclotomic_polynomial(order).size()) - 1;
}

CyclotomicNumber::CyclotomicNumber(long order, std::vector<Rational> poly) : order_(order)
{
    if (order < 1) {
        throw DomainError("cyclotomic order must be positive");
    }
    coeffs_ = reduce_mod_phi(order, std::move(poly));
    normalize();
}

void CyclotomicNumber::normalize()
{
    if (order_ == 1) {
        return;
    }
    const bool rational = std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                                      [](const Rational& c) { return c.is_zero(); });
    if (rational) {
        coeffs_.resize(1);
        order_ = 1;
    }
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long order, long e)
{
    if (order < 1) {
        throw DomainError("root of unity order must be positive");
    }
    std::vector<Rational> poly(static_cast<std::size_t>(mod_pos(e, order)) + 1);
    poly.back() = 1;
    return CyclotomicNumber(order, std::move(poly));
}

const Rational& CyclotomicNumber::to_rational() const
{
    if (order_ != 1) {
        throw ConsistencyError("cyclotomic value " + str() + " is not rational");
    }
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lifted(long target) const
{
    if (target == order_) {
        return *this;
    }
    if (target % order_ != 0) {
        throw DomainError("cannot lift Q(w_" + std::to_string(order_) + ") into Q(w_"
                          + std::to_string(target) + ")");
    }
    const std::size_t step = static_cast<std::size_t>(target / order_);
    std::vector<Rational> poly((coeffs_.size() - 1) * step + 1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        poly[j * step] = coeffs_[j];
    }
    CyclotomicNumber out;
    out.order_ = target;
    // no demotion: the lifted value keeps the target order
    out.coeffs_ = reduce_mod_phi(target, std::move(poly));
    return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs)
{
    const long l = std::lcm(order_, rhs.order_);
    CyclotomicNumber a = lifted(l);
    const CyclotomicNumber b = rhs.lifted(l);
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) {
        a.coeffs_[j] += b.coeffs_[j];
    }
    a.normalize();
    return *this = std::move(a);
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs)
{
    return *this += -rhs;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs)
{
    if (rhs.is_rational()) {
        return *this *= rhs.coeffs_[0];
    }
    if (is_rational()) {
        CyclotomicNumber r = rhs;
        r *= coeffs_[0];
        return *this = std::move(r);
    }
    const long l = std::lcm(order_, rhs.order_);
    const CyclotomicNumber a = lifted(l);
    const CyclotomicNumber b = rhs.lifted(l);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return *this = CyclotomicNumber(l, std::move(prod));
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& rhs)
{
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    if (rhs.is_zero()) {
        coeffs_.assign(1, Rational());
        order_ = 1;
    }
    return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.order_ == b.order_) {
        return a.coeffs_ == b.coeffs_;
    }
    const long l = std::lcm(a.order_, b.order_);
    return a.lifted(l).coeffs_ == b.lifted(l).coeffs_;
}

std::string CyclotomicNumber::str() const
{
    if (order_ == 1) {
        return coeffs_[0].str();
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << coeffs_[j] << ')';
        if (j > 0) {
            os << "*w" << order_ << (j > 1 ? "^" + std::to_string(j) : "");
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z)
{
    return os << z.str();
}

Complex complex_eval(const CyclotomicNumber& z, int digits)
{
    if (digits < 10) {
        throw DomainError("complex_eval needs at least 10 digits");
    }
    WorkingPrecision scope(digits);
    Complex acc(Real(0L));
    for (std::size_t j = 0; j < z.coeffs().size(); ++j) {
        if (z.coeffs()[j].is_zero()) {
            continue;
        }
        Complex term = Complex::unit_root(z.order(), static_cast<long>(j));
        term *= Real(z.coeffs()[j]);
        acc += term;
    }
    return acc;
}

Rational power_sum_roots(long n, long m)
{
    if (n < 1) {
        throw DomainError("power_sum_roots needs n >= 1");
    }
    return m % n == 0 ? Rational(n) : Rational(0);
}

Rational monomial_at_roots(const Partition& lambda, int n, const PartitionGuards& guards)
{
    if (n < 1) {
        throw DomainError("monomial_at_roots needs n >= 1");
    }
    if (lambda.length() > static_cast<std::size_t>(n)) {
        return Rational(0);
    }
    if (static_cast<std::size_t>(n) > guards.max_permutation_length) {
        throw CapacityError("monomial_at_roots with " + std::to_string(n)
                            + " slots exceeds the permutation guard");
    }
    // slot j holds the exponent of w_n^j; tally the total exponent mod n
    std::vector<int> slots(lambda.parts().rbegin(), lambda.parts().rend());
    slots.insert(slots.begin(), static_cast<std::size_t>(n) - lambda.length(), 0);
    std::vector<long> residue_count(static_cast<std::size_t>(n), 0);
    do {
        long e = 0;
        for (int j = 0; j < n; ++j) {
            e += static_cast<long>(j) * slots[static_cast<std::size_t>(j)];
        }
        ++residue_count[static_cast<std::size_t>(e % n)];
    } while (std::next_permutation(slots.begin(), slots.end()));

    CyclotomicNumber total;
    for (int r = 0; r < n; ++r) {
        if (residue_count[static_cast<std::size_t>(r)] != 0) {
            total += CyclotomicNumber::root_of_unity(n, r) * Rational(residue_count[static_cast<std::size_t>(r)]);
        }
    }
    const Rational& value = total.to_rational();
    if (!value.is_integer()) {
        throw ConsistencyError("monomial_at_roots produced a non-integer " + value.str());
    }
    return value;
}

} // namespace pmlv
