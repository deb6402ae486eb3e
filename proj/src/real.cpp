#include "pmlv/real.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <utility>

#include "pmlv/errors.hpp"

namespace pmlv {

namespace {

thread_local mpfr_prec_t tls_working_bits = 0;

mpfr_prec_t joint(const Real& a, const Real& b)
{
    return std::max(a.precision(), b.precision());
}

} // namespace

mpfr_prec_t bits_for_digits(int digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

mpfr_prec_t working_bits()
{
    return tls_working_bits ? tls_working_bits : bits_for_digits(30);
}

WorkingPrecision::WorkingPrecision(int digits) : saved_(tls_working_bits)
{
    tls_working_bits = bits_for_digits(digits);
}

WorkingPrecision::~WorkingPrecision()
{
    tls_working_bits = saved_;
}

Real::Real(Bits bits)
{
    mpfr_init2(v_, bits.value);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value) : Real(Bits{working_bits()})
{
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value) : Real(Bits{working_bits()})
{
    mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& q) : Real(Bits{working_bits()})
{
    mpfr_set_q(v_, q.get_mpq().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other)
{
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(Bits{other.precision()})
{
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(v_);
}

Real Real::parse(const std::string& decimal, mpfr_prec_t bits)
{
    Real r(Bits{bits});
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        throw DomainError("not a decimal number: '" + decimal + "'");
    }
    return r;
}

std::string Real::str(int digits) const
{
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real& Real::operator+=(const Real& rhs)
{
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs)
{
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs)
{
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs)
{
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(long rhs)
{
    mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(long rhs)
{
    mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const
{
    Real r(Bits{precision()});
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b)
{
    Real r(Bits{joint(a, b)});
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r(Bits{joint(a, b)});
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r(Bits{joint(a, b)});
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    Real r(Bits{joint(a, b)});
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b)
{
    if (mpfr_unordered_p(a.v_, b.v_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const Real& x)
{
    return os << x.str(static_cast<int>(x.precision() / 3.33));
}

#define PMLV_UNARY(name, fn)                 \
    Real name(const Real& x)                 \
    {                                        \
        Real r(Bits{x.precision()});               \
        fn(r.get(), x.get(), MPFR_RNDN);     \
        return r;                            \
    }

PMLV_UNARY(abs, mpfr_abs)
PMLV_UNARY(sqrt, mpfr_sqrt)
PMLV_UNARY(exp, mpfr_exp)
PMLV_UNARY(log, mpfr_log)
PMLV_UNARY(sin, mpfr_sin)
PMLV_UNARY(cos, mpfr_cos)
PMLV_UNARY(gamma_function, mpfr_gamma)

#undef PMLV_UNARY

Real pow(const Real& x, long e)
{
    Real r(Bits{x.precision()});
    mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y)
{
    Real r(Bits{joint(x, y)});
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b)
{
    return a < b ? b : a;
}

Real mpfr_pi(mpfr_prec_t bits)
{
    Real r(Bits{bits});
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real mpfr_euler_gamma(mpfr_prec_t bits)
{
    Real r(Bits{bits});
    mpfr_const_euler(r.get(), MPFR_RNDN);
    return r;
}

Real mpfr_log2(mpfr_prec_t bits)
{
    Real r(Bits{bits});
    mpfr_const_log2(r.get(), MPFR_RNDN);
    return r;
}

Real mpfr_zeta(unsigned long s, mpfr_prec_t bits)
{
    Real r(Bits{bits});
    mpfr_zeta_ui(r.get(), s, MPFR_RNDN);
    return r;
}

Complex Complex::unit_root(long order, long e)
{
    if (order < 1) {
        throw DomainError("root of unity order must be positive");
    }
    e %= order;
    if (e < 0) {
        e += order;
    }
    // exact values on the axes
    if (e == 0) {
        return Complex(Real(1L));
    }
    if (2 * e == order) {
        return Complex(Real(-1L));
    }
    if (4 * e == order) {
        return Complex(Real(0L), Real(1L));
    }
    if (4 * e == 3 * order) {
        return Complex(Real(0L), Real(-1L));
    }
    Real angle = mpfr_pi(working_bits());
    angle *= 2 * e;
    angle /= order;
    return Complex(cos(angle), sin(angle));
}

Complex& Complex::operator+=(const Complex& rhs)
{
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs)
{
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs)
{
    Real re = re_ * rhs.re_ - im_ * rhs.im_;
    Real im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex& Complex::operator*=(const Real& rhs)
{
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

Complex& Complex::operator/=(const Complex& rhs)
{
    const Real den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    Real re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
    Real im = (im_ * rhs.re_ - re_ * rhs.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string Complex::str(int digits) const
{
    return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).str(digits) + "i";
}

Real abs(const Complex& z)
{
    Real r(Bits{std::max(z.real().precision(), z.imag().precision())});
    mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
    return r;
}

Complex exp(const Complex& z)
{
    const Real m = exp(z.real());
    return Complex(m * cos(z.imag()), m * sin(z.imag()));
}

} // namespace pmlv
