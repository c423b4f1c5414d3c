// q-number arithmetic over a two-level scalar tower: exact rationals for
// integer-argument computations, complex doubles otherwise.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace uqrep {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

/// Argument z of a q-number [z].  Tracks "exactly an integer" separately from
/// a generic complex value so zeros of [z] can be detected structurally.
class QExponent {
public:
    QExponent() : exact_(true), int_part_(0), offset_(0.0, 0.0) {}
    QExponent(long long n) : exact_(true), int_part_(n), offset_(0.0, 0.0) {}
    QExponent(int n) : QExponent(static_cast<long long>(n)) {}
    QExponent(Complex z) : exact_(false), int_part_(0), offset_(z) {}
    QExponent(double x) : QExponent(Complex(x, 0.0)) {}

    bool exact_integer() const { return exact_; }

    long long integer_value() const {
        if (!exact_) throw std::logic_error("QExponent: not an exact integer");
        return int_part_;
    }

    Complex value() const { return Complex(static_cast<double>(int_part_), 0.0) + offset_; }

    QExponent operator+(const QExponent& o) const {
        QExponent r;
        r.exact_ = exact_ && o.exact_;
        r.int_part_ = int_part_ + o.int_part_;
        r.offset_ = offset_ + o.offset_;
        return r;
    }
    QExponent operator-(const QExponent& o) const { return *this + (-o); }
    QExponent operator-() const {
        QExponent r;
        r.exact_ = exact_;
        r.int_part_ = -int_part_;
        r.offset_ = -offset_;
        return r;
    }
    QExponent operator+(long long n) const { return *this + QExponent(n); }
    QExponent operator-(long long n) const { return *this + QExponent(-n); }

private:
    bool exact_;
    long long int_part_;
    Complex offset_;
};

/// The deformation parameter q > 0, q != 1, optionally carried as an exact
/// rational (needed for the exact identity checks).
class QValue {
public:
    explicit QValue(double q) : value_(q), exact_(false) { validate(); }

    static QValue rational(const Rational& r) {
        QValue q(static_cast<double>(r));
        q.exact_ = true;
        q.rat_ = r;
        return q;
    }
    static QValue rational(long long num, long long den) {
        return rational(Rational(num, den));
    }

    double real() const { return value_; }
    double log() const { return std::log(value_); }
    bool exact() const { return exact_; }
    const Rational& rat() const {
        if (!exact_) throw std::logic_error("QValue: no exact rational value");
        return rat_;
    }

private:
    void validate() const {
        if (!(value_ > 0.0) || value_ == 1.0)
            throw std::invalid_argument("q must be positive and different from 1");
    }

    double value_;
    bool exact_;
    Rational rat_;
};

/// A number in the scalar tower.  Exact rationals arise only from q-numbers of
/// integer arguments at rational q; everything else is a complex double.
/// Mixed operations promote to floating, never the reverse.
class Scalar {
public:
    Scalar() : exact_(true), rat_(0) {}

    static Scalar rational(const Rational& r) {
        Scalar s;
        s.exact_ = true;
        s.rat_ = r;
        return s;
    }
    static Scalar rational(long long n) { return rational(Rational(n)); }
    static Scalar floating(Complex v) {
        Scalar s;
        s.exact_ = false;
        s.val_ = v;
        return s;
    }

    bool exact() const { return exact_; }
    Complex value() const { return exact_ ? Complex(static_cast<double>(rat_), 0.0) : val_; }
    const Rational& rat() const {
        if (!exact_) throw std::logic_error("Scalar: not exact");
        return rat_;
    }
    double abs() const { return std::abs(value()); }
    bool is_zero() const { return exact_ ? rat_.is_zero() : val_ == Complex(0.0, 0.0); }

    Scalar operator-() const {
        return exact_ ? rational(Rational(-rat_)) : floating(-val_);
    }
    Scalar operator+(const Scalar& o) const {
        if (exact_ && o.exact_) return rational(rat_ + o.rat_);
        return floating(value() + o.value());
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const {
        if (exact_ && o.exact_) return rational(rat_ * o.rat_);
        return floating(value() * o.value());
    }
    Scalar operator/(const Scalar& o) const {
        if (exact_ && o.exact_) {
            if (o.rat_.is_zero()) throw std::domain_error("Scalar: exact division by zero");
            return rational(rat_ / o.rat_);
        }
        return floating(value() / o.value());
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const {
        if (exact_ && o.exact_) return rat_ == o.rat_;
        return value() == o.value();
    }

private:
    bool exact_;
    Rational rat_;
    Complex val_{0.0, 0.0};
};

/// [z] = (q^z - q^{-z}) / (q - q^{-1}).  Exact-rational when z is an exact
/// integer and q carries a rational value.
Scalar q_number(const QExponent& z, const QValue& q);

/// Order of vanishing of [z] at the point z: 1 for an exact integer zero
/// (the zero of [z] at z = 0 is simple), 0 otherwise.
int zero_order(const QExponent& z);

/// d[z]/dz = ln q * (q^z + q^{-z}) / (q - q^{-1}).  Always floating.
Scalar q_number_derivative(const QExponent& z, const QValue& q);

/// Floating fast path used by the matrix builders.
Complex q_bracket(Complex z, const QValue& q);

/// Real q-number of an integer argument (floating).
double q_bracket(long long m, const QValue& q);

} // namespace uqrep
