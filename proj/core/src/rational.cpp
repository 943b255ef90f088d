#include "hooklab/rational.hpp"

#include <ostream>

namespace hooklab {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw ArithmeticError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw ArithmeticError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(text));
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational literal '" + text + "'", 0);
    }
}

long Rational::to_long() const {
    if (!is_integer() || !num().fits_slong_p())
        throw ArithmeticError("rational does not fit in a machine integer: " + str());
    return num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? reciprocal() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), n);
    return Rational(num, den);
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class n, d;
    mpz_gcd(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(n, d);
}

Rational Rational::binomial(long n, long k) {
    if (k < 0) return Rational(0);
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

Rational Rational::factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace hooklab
