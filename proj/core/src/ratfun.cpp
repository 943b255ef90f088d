#include "hooklab/ratfun.hpp"

#include <ostream>

namespace hooklab {

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

namespace {

// Cancels den into num when one exactly divides the other; full cancellation
// is the common case in expansion identities and avoids a gcd.
bool cancel_exact(MultiPoly& num, MultiPoly& den) {
    MultiPoly q;
    if (try_poly_div_exact(num, den, q)) {
        num = std::move(q);
        den = MultiPoly(Rational(1));
        return true;
    }
    if (try_poly_div_exact(den, num, q)) {
        den = std::move(q);
        num = MultiPoly(Rational(1));
        return true;
    }
    return false;
}

} // namespace

void RatFun::normalize() {
    if (den_.is_zero()) throw ArithmeticError("division by zero rational function");
    if (num_.is_zero()) {
        num_ = MultiPoly();
        den_ = MultiPoly(Rational(1));
        return;
    }
    const Rational cn = num_.content();
    const Rational cd = den_.content();
    MultiPoly n = num_.scaled(cn.reciprocal());
    MultiPoly d = den_.scaled(cd.reciprocal());
    if (!n.is_constant() && !d.is_constant() && !cancel_exact(n, d)) {
        const MultiPoly g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = poly_div_exact(n, g);
            d = poly_div_exact(d, g);
        }
    }
    const Rational c = cn / cd;  // lowest terms, positive denominator
    num_ = n.scaled(Rational(c.num()));
    den_ = d.scaled(Rational(c.den()));
    if (den_.leading_coeff().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFun RatFun::operator-() const {
    RatFun out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() || b.den_.is_constant())
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    // Work over the lcm of the denominators.
    const MultiPoly g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    const MultiPoly da = poly_div_exact(a.den_, g);
    const MultiPoly db = poly_div_exact(b.den_, g);
    return RatFun(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return a + (-b);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    // Cross-cancel before multiplying to keep the final gcd small.
    MultiPoly an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
    if (!an.is_constant() && !bd.is_constant() && !cancel_exact(an, bd)) {
        const MultiPoly g = poly_gcd(an, bd);
        if (!g.is_one()) { an = poly_div_exact(an, g); bd = poly_div_exact(bd, g); }
    }
    if (!bn.is_constant() && !ad.is_constant() && !cancel_exact(bn, ad)) {
        const MultiPoly g = poly_gcd(bn, ad);
        if (!g.is_one()) { bn = poly_div_exact(bn, g); ad = poly_div_exact(ad, g); }
    }
    return RatFun(an * bn, ad * bd);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero rational function");
    return a * b.reciprocal();
}

RatFun RatFun::reciprocal() const {
    if (is_zero()) throw ArithmeticError("division by zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
    if (e == 0) return RatFun(1);
    const RatFun base = e < 0 ? reciprocal() : *this;
    const unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    // Canonical form is preserved by powering coprime num/den.
    RatFun out;
    out.num_ = base.num_.pow(n);
    out.den_ = base.den_.pow(n);
    return out;
}

RatFun RatFun::scaled_by(const Rational& c) const {
    if (c.is_zero()) return RatFun();
    return RatFun(num_.scaled(c), den_);
}

RatFun RatFun::substituted(const std::map<std::string, Rational>& bindings) const {
    const MultiPoly n = num_.substituted(bindings);
    const MultiPoly d = den_.substituted(bindings);
    if (d.is_zero()) {
        std::string offender;
        for (const auto& [name, value] : bindings)
            if (den_.depends_on(name)) { offender = name; break; }
        throw PoleError("substitution " + offender + " makes a denominator vanish in " + str(),
                        offender);
    }
    return RatFun(n, d);
}

std::vector<std::string> RatFun::parameters() const {
    std::vector<std::string> out = num_.vars();
    for (const auto& v : den_.vars())
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

std::string RatFun::str() const {
    const bool num_simple = num_.term_count() <= 1;
    std::string n = num_.str();
    if (den_.is_one()) return n;
    if (!num_simple) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.term_count() > 1 || d.find('*') != std::string::npos || d.find('^') != std::string::npos)
        d = "(" + d + ")";
    return n + "/" + d;
}

void mark_used_parameters(ParamContext& ctx, const RatFun& f) {
    for (const auto& v : f.parameters()) ctx.mark_used(v);
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) {
    return os << f.str();
}

} // namespace hooklab
