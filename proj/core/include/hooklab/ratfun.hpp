#pragma once

#include <map>
#include <string>

#include "hooklab/multipoly.hpp"

namespace hooklab {

/// Rational function num/den over Rational coefficients, kept canonical:
/// gcd(num, den) = 1, both integer-coefficient and jointly primitive, and the
/// leading coefficient of den positive.
class RatFun {
public:
    RatFun() : num_(), den_(Rational(1)) {}
    RatFun(long n) : num_(Rational(n)), den_(Rational(1)) {}
    RatFun(const Rational& r) : num_(r), den_(Rational(1)) { normalize(); }
    RatFun(MultiPoly num, MultiPoly den);
    static RatFun variable(const std::string& name) { return RatFun(MultiPoly::variable(name), MultiPoly(Rational(1))); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Requires is_constant().
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_integer() const { return is_constant() && constant_value().is_integer(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun reciprocal() const;
    RatFun pow(long e) const;
    /// Multiplication by a rational constant.
    RatFun scaled_by(const Rational& c) const;

    /// Substitutes rational values; parameters absent from the value are
    /// ignored.  Throws PoleError when the denominator vanishes.
    RatFun substituted(const std::map<std::string, Rational>& bindings) const;

    /// Names of parameters occurring in num or den, in variable order.
    std::vector<std::string> parameters() const;

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// `(z+8)/9` style: expanded polynomials, parenthesized when needed.
    std::string str() const;

private:
    void normalize();

    MultiPoly num_, den_;
};

/// Registers every parameter of `f` as used in `ctx`.
void mark_used_parameters(ParamContext& ctx, const RatFun& f);

std::ostream& operator<<(std::ostream& os, const RatFun& f);

} // namespace hooklab
