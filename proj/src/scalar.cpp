#include "uqrep/scalar.hpp"

#include <cmath>

namespace uqrep {

namespace {

Rational rational_pow(const Rational& r, long long m) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::pow;
    if (m == 0) return Rational(1);
    const unsigned e = static_cast<unsigned>(m < 0 ? -m : m);
    cpp_int num = pow(boost::multiprecision::numerator(r), e);
    cpp_int den = pow(boost::multiprecision::denominator(r), e);
    return m > 0 ? Rational(num, den) : Rational(den, num);
}

} // namespace

Complex q_bracket(Complex z, const QValue& q) {
    const double h = q.log();
    const Complex up = std::exp(z * h);
    return (up - 1.0 / up) / (q.real() - 1.0 / q.real());
}

double q_bracket(long long m, const QValue& q) {
    const double qm = std::pow(q.real(), static_cast<double>(m));
    return (qm - 1.0 / qm) / (q.real() - 1.0 / q.real());
}

Scalar q_number(const QExponent& z, const QValue& q) {
    if (z.exact_integer() && q.exact()) {
        const long long m = z.integer_value();
        if (m == 0) return Scalar::rational(0);
        const Rational& r = q.rat();
        Rational qm = rational_pow(r, m);
        return Scalar::rational((qm - 1 / qm) / (r - 1 / r));
    }
    if (z.exact_integer()) return Scalar::floating(Complex(q_bracket(z.integer_value(), q), 0.0));
    return Scalar::floating(q_bracket(z.value(), q));
}

int zero_order(const QExponent& z) {
    return (z.exact_integer() && z.integer_value() == 0) ? 1 : 0;
}

Scalar q_number_derivative(const QExponent& z, const QValue& q) {
    const double h = q.log();
    const Complex up = std::exp(z.value() * h);
    return Scalar::floating(h * (up + 1.0 / up) / (q.real() - 1.0 / q.real()));
}

} // namespace uqrep
