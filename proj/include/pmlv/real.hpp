#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <mpfr.h>

#include "pmlv/rational.hpp"

namespace pmlv {

// Binary precision needed for a given number of decimal digits, with guard bits.
mpfr_prec_t bits_for_digits(int digits);

// Thread-local default precision used by default-constructed Real values.
mpfr_prec_t working_bits();

// Sets the thread's working precision for the lifetime of the scope.
class WorkingPrecision {
public:
    explicit WorkingPrecision(int digits);
    ~WorkingPrecision();
    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

private:
    mpfr_prec_t saved_;
};

// Tag selecting a binary precision, distinct from integer values.
struct Bits {
    mpfr_prec_t value;
};

// Arbitrary-precision real number owning an mpfr_t. Binary operators produce
// a result at the larger of the operand precisions; compound assignment keeps
// the precision of the left operand.
class Real {
public:
    Real() : Real(Bits{working_bits()}) {}
    explicit Real(Bits bits);
    Real(long value);
    Real(int value) : Real(static_cast<long>(value)) {}
    Real(double value);
    Real(const Rational& q);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real parse(const std::string& decimal, mpfr_prec_t bits);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Scientific notation with the given number of significant digits.
    std::string str(int digits) const;

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real& operator*=(long rhs);
    Real& operator/=(long rhs);
    Real operator-() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

private:
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real pow(const Real& x, long e);
Real pow(const Real& x, const Real& y);
Real gamma_function(const Real& x);
Real max(const Real& a, const Real& b);

// Library constants at the given precision.
Real mpfr_pi(mpfr_prec_t bits);
Real mpfr_euler_gamma(mpfr_prec_t bits);
Real mpfr_log2(mpfr_prec_t bits);
Real mpfr_zeta(unsigned long s, mpfr_prec_t bits);

class Complex {
public:
    Complex() = default;
    Complex(Real re) : re_(std::move(re)), im_(Bits{re_.precision()}) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(long value) : Complex(Real(value)) {}
    Complex(int value) : Complex(Real(static_cast<long>(value))) {}
    Complex(const Rational& q) : Complex(Real(q)) {}

    // exp(2 pi i e / order) at the working precision.
    static Complex unit_root(long order, long e);

    const Real& real() const { return re_; }
    const Real& imag() const { return im_; }

    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);
    Complex& operator*=(const Real& rhs);
    Complex& operator/=(const Complex& rhs);
    Complex operator-() const { return {-re_, -im_}; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

    friend bool operator==(const Complex& a, const Complex& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    std::string str(int digits) const;

private:
    Real re_;
    Real im_;
};

Real abs(const Complex& z);
Complex exp(const Complex& z);

} // namespace pmlv
