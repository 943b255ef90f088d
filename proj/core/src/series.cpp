#include "hooklab/series.hpp"

#include <algorithm>
#include <sstream>

namespace hooklab {

TruncSeries TruncSeries::constant(const RatFun& value, int order) {
    TruncSeries s(order);
    s.at(0) = value;
    return s;
}

TruncSeries TruncSeries::x(int order) {
    TruncSeries s(order);
    if (order >= 1) s.at(1) = RatFun(1);
    return s;
}

TruncSeries TruncSeries::truncated(int new_order) const {
    if (new_order >= order()) return *this;
    TruncSeries s(new_order);
    for (int k = 0; k <= new_order; ++k) s.at(k) = c_[static_cast<std::size_t>(k)];
    return s;
}

int TruncSeries::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (!c_[static_cast<std::size_t>(k)].is_zero()) return k;
    return order() + 1;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s(order());
    for (int k = 0; k <= order(); ++k) s.at(k) = -c_[static_cast<std::size_t>(k)];
    return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries s(n);
    for (int k = 0; k <= n; ++k) s.at(k) = a[k] + b[k];
    return s;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries s(n);
    for (int k = 0; k <= n; ++k) s.at(k) = a[k] - b[k];
    return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries s(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            s.at(i + j) += a[i] * b[j];
        }
    }
    return s;
}

TruncSeries TruncSeries::scaled(const RatFun& c) const {
    TruncSeries s(order());
    if (c.is_zero()) return s;
    for (int k = 0; k <= order(); ++k) s.at(k) = c_[static_cast<std::size_t>(k)] * c;
    return s;
}

TruncSeries TruncSeries::shifted_up(int k) const {
    TruncSeries s(order());
    for (int i = 0; i + k <= order(); ++i) s.at(i + k) = c_[static_cast<std::size_t>(i)];
    return s;
}

TruncSeries TruncSeries::shifted_down(int k) const {
    if (k == 0) return *this;
    if (order() < k) throw DomainError("series order too small for x-shift");
    for (int i = 0; i < k; ++i)
        if (!c_[static_cast<std::size_t>(i)].is_zero())
            throw DomainError("series not divisible by x^" + std::to_string(k));
    TruncSeries s(order() - k);
    for (int i = 0; i <= s.order(); ++i) s.at(i) = c_[static_cast<std::size_t>(i + k)];
    return s;
}

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
    if (b[0].is_zero()) throw DomainError("nonunit divisor: series has zero constant term");
    const int n = std::min(a.order(), b.order());
    const RatFun inv = b[0].reciprocal();
    TruncSeries q(n);
    for (int k = 0; k <= n; ++k) {
        RatFun acc = a[k];
        for (int j = 1; j <= k; ++j) {
            if (b[j].is_zero() || q[k - j].is_zero()) continue;
            acc -= b[j] * q[k - j];
        }
        q.at(k) = acc * inv;
    }
    return q;
}

TruncSeries series_exp(const TruncSeries& a) {
    if (!a[0].is_zero()) throw DomainError("exp requires zero constant term");
    const int n = a.order();
    TruncSeries b(n);
    b.at(0) = RatFun(1);
    // b' = a'b, i.e. n*b_n = sum_{k=1..n} k*a_k*b_{n-k}.
    for (int m = 1; m <= n; ++m) {
        RatFun acc;
        for (int k = 1; k <= m; ++k) {
            if (a[k].is_zero() || b[m - k].is_zero()) continue;
            acc += a[k] * b[m - k] * RatFun(Rational(k));
        }
        b.at(m) = acc * RatFun(Rational(1, m));
    }
    return b;
}

TruncSeries series_log(const TruncSeries& a) {
    if (!a[0].is_one()) throw DomainError("log requires constant term 1");
    const int n = a.order();
    TruncSeries g(n);
    // a' = g'a, i.e. m*a_m = sum_{k=1..m} k*g_k*a_{m-k}.
    for (int m = 1; m <= n; ++m) {
        RatFun acc = a[m] * RatFun(Rational(m));
        for (int k = 1; k < m; ++k) {
            if (g[k].is_zero() || a[m - k].is_zero()) continue;
            acc -= g[k] * a[m - k] * RatFun(Rational(k));
        }
        g.at(m) = acc * RatFun(Rational(1, m));
    }
    return g;
}

TruncSeries series_pow(const TruncSeries& a, long e) {
    if (e >= 0) {
        TruncSeries result = TruncSeries::one(a.order());
        TruncSeries base = a;
        unsigned long n = static_cast<unsigned long>(e);
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }
    if (a[0].is_zero())
        throw DomainError("negative power of a series with zero constant term");
    return series_div(TruncSeries::one(a.order()), series_pow(a, -e));
}

TruncSeries series_pow(const TruncSeries& a, const RatFun& e) {
    if (e.is_integer()) {
        const Rational v = e.constant_value();
        if (v.num().fits_slong_p()) {
            const long k = v.num().get_si();
            if (k >= 0 || !a[0].is_zero()) return series_pow(a, k);
        }
    }
    if (!a[0].is_one())
        throw DomainError("series power with symbolic or fractional exponent requires constant term 1");
    return series_exp(series_log(a).scaled(e));
}

TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner) {
    if (!inner[0].is_zero()) throw DomainError("composition requires inner constant term 0");
    const int n = std::min(outer.order(), inner.order());
    TruncSeries r = TruncSeries::constant(outer[outer.order()], n);
    for (int i = outer.order() - 1; i >= 0; --i) {
        r = r * inner.truncated(n);
        r.at(0) += outer[i];
    }
    return r;
}

TruncSeries elementary_series(Elementary fn, int order) {
    switch (fn) {
    case Elementary::Sin: {
        TruncSeries s(order);
        Rational sign(1);
        for (int k = 1; k <= order; k += 2) {
            s.at(k) = RatFun(sign / Rational::factorial(k));
            sign = -sign;
        }
        return s;
    }
    case Elementary::Cos: {
        TruncSeries s(order);
        Rational sign(1);
        for (int k = 0; k <= order; k += 2) {
            s.at(k) = RatFun(sign / Rational::factorial(k));
            sign = -sign;
        }
        return s;
    }
    case Elementary::Tan:
        return series_div(elementary_series(Elementary::Sin, order),
                          elementary_series(Elementary::Cos, order));
    case Elementary::Sec:
        return series_div(TruncSeries::one(order),
                          elementary_series(Elementary::Cos, order));
    }
    throw DomainError("unknown elementary series");
}

TruncSeries finite_product(const std::vector<TruncSeries>& factors, int order) {
    TruncSeries acc = TruncSeries::one(order);
    for (const auto& f : factors) acc = acc * f.truncated(order);
    return acc;
}

std::string to_string(const TruncSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= s.order(); ++k) {
        const RatFun& c = s[k];
        if (c.is_zero()) continue;

        bool negative = false;
        RatFun shown = c;
        if (c.num().leading_coeff().sign() < 0) {
            negative = true;
            shown = -c;
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }

        std::string cs = shown.str();
        const bool needs_parens = !shown.is_constant() &&
            (shown.num().term_count() > 1 || !shown.den().is_one());
        if (needs_parens) cs = "(" + cs + ")";
        if (k == 0) {
            os << cs;
        } else {
            const std::string xs = k == 1 ? "x" : "x^" + std::to_string(k);
            if (shown.is_one()) os << xs;
            else os << cs << "*" << xs;
        }
    }
    if (first) return "0";
    return os.str();
}

} // namespace hooklab
