#pragma once

#include <vector>

#include "hooklab/ratfun.hpp"

namespace hooklab {

/// Power series in x truncated at a fixed order N: coefficients of x^0..x^N
/// are known exactly, everything above is unknown.  Mixed-order arithmetic
/// truncates to the smaller order and never extends.
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}
    static TruncSeries constant(const RatFun& value, int order);
    static TruncSeries one(int order) { return constant(RatFun(1), order); }
    static TruncSeries x(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const RatFun& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    RatFun& at(int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<RatFun>& coeffs() const { return c_; }

    TruncSeries truncated(int new_order) const;
    /// Index of the first nonzero coefficient; order()+1 when all are zero.
    int valuation() const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    TruncSeries scaled(const RatFun& c) const;
    /// Multiplies by x^k (order grows by k is NOT implied; coefficients shift
    /// within the same order).
    TruncSeries shifted_up(int k) const;
    /// Divides by x^k; requires the first k coefficients to vanish.  The
    /// result has order reduced by k.
    TruncSeries shifted_down(int k) const;

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

private:
    std::vector<RatFun> c_;
};

/// a/b; requires b with invertible (nonzero) constant term.
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);

/// exp(a); requires a(0) = 0.
TruncSeries series_exp(const TruncSeries& a);
/// log(a); requires a(0) = 1.
TruncSeries series_log(const TruncSeries& a);

/// a^e.  With a(0) = 1 the exponent may be any rational function (computed as
/// exp(e log a)); otherwise e must be an integer, with a(0) invertible when
/// e < 0.
TruncSeries series_pow(const TruncSeries& a, const RatFun& e);
TruncSeries series_pow(const TruncSeries& a, long e);

/// outer(inner(x)); requires inner(0) = 0.
TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner);

enum class Elementary { Sin, Cos, Tan, Sec };
TruncSeries elementary_series(Elementary fn, int order);

/// Product of the factors truncated at `order` (empty product = 1).
TruncSeries finite_product(const std::vector<TruncSeries>& factors, int order);

/// `1 + x + 1/2*x^2 - ...` rendering.
std::string to_string(const TruncSeries& s);

} // namespace hooklab
