#include "hooklab/etamake.hpp"

#include <sstream>

namespace hooklab {

bool EtaQuotient::integral() const {
    for (const auto& [k, e] : exponents)
        if (!e.is_integer()) return false;
    return true;
}

std::map<int, Rational> plain_euler_exponents(const TruncSeries& f, int order) {
    if (order > f.order())
        throw DomainError("series order too small for exponent recovery up to " +
                          std::to_string(order));
    if (!f[0].is_one()) throw DomainError("Euler product recovery requires constant term 1");
    for (int k = 0; k <= order; ++k)
        if (!f[k].is_constant())
            throw DomainError("numeric input required: coefficient of x^" + std::to_string(k) +
                              " contains parameters");

    const TruncSeries logf = series_log(f.truncated(order));
    // n*c_n = -sum_{m|n} m*b_m solved triangularly upward.
    std::map<int, Rational> b;
    std::vector<Rational> weighted(static_cast<std::size_t>(order) + 1);  // m*b_m
    for (int n = 1; n <= order; ++n) {
        Rational target = -(logf[n].constant_value() * Rational(n));
        for (int d = 1; d < n; ++d)
            if (n % d == 0) target -= weighted[static_cast<std::size_t>(d)];
        weighted[static_cast<std::size_t>(n)] = target;
        const Rational bn = target / Rational(n);
        if (!bn.is_zero()) b[n] = bn;
    }
    return b;
}

namespace {

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

} // namespace

std::map<int, Rational> euler_exponents(const TruncSeries& f, int order) {
    const std::map<int, Rational> b = plain_euler_exponents(f, order);
    std::map<int, Rational> e;
    for (int k = 1; k <= order; ++k) {
        Rational ek(0);
        for (int d = 1; d <= k; ++d) {
            if (k % d != 0) continue;
            const int mu = moebius(k / d);
            if (mu == 0) continue;
            const auto it = b.find(d);
            if (it == b.end()) continue;
            ek += Rational(mu) * it->second;
        }
        if (!ek.is_zero()) e[k] = ek;
    }
    return e;
}

EtaQuotient eta_from_exponents(const std::map<int, Rational>& exponents) {
    EtaQuotient q;
    q.exponents = exponents;
    Rational s(0);
    for (const auto& [k, e] : exponents) s += e * Rational(k);
    q.prefactor = -(s / Rational(24));
    return q;
}

namespace {

std::string eta_factor(int k, const Rational& e_abs) {
    std::string s = k == 1 ? "eta(tau)" : "eta(" + std::to_string(k) + "tau)";
    if (!e_abs.is_one()) {
        if (e_abs.is_integer()) s += "^" + e_abs.str();
        else s += "^(" + e_abs.str() + ")";
    }
    return s;
}

} // namespace

std::string render_eta(const EtaQuotient& q) {
    if (q.exponents.empty()) return "1";
    std::ostringstream os;
    if (!q.prefactor.is_zero()) {
        if (q.prefactor.is_integer() && q.prefactor.sign() > 0)
            os << "x^" << q.prefactor.str() << "*";
        else
            os << "x^(" << q.prefactor.str() << ")*";
    }
    std::vector<std::string> pos, neg;
    // Numerator and denominator each list moduli in descending order.
    for (auto it = q.exponents.rbegin(); it != q.exponents.rend(); ++it) {
        const auto& [k, e] = *it;
        if (e.sign() > 0) pos.push_back(eta_factor(k, e));
        else if (e.sign() < 0) neg.push_back(eta_factor(k, e.abs()));
    }
    if (pos.empty()) os << "1";
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (i) os << "*";
        os << pos[i];
    }
    if (!neg.empty()) {
        os << "/";
        if (neg.size() == 1) os << neg[0];
        else {
            os << "(";
            for (std::size_t i = 0; i < neg.size(); ++i) {
                if (i) os << "*";
                os << neg[i];
            }
            os << ")";
        }
    }
    return os.str();
}

TruncSeries euler_product(const std::map<int, Rational>& exponents, int order) {
    TruncSeries acc = TruncSeries::one(order);
    for (const auto& [k, e] : exponents) {
        if (k <= 0) throw DomainError("Euler product modulus must be positive");
        if (k > order || e.is_zero()) continue;
        TruncSeries block = TruncSeries::one(order);
        for (int m = 1; k * m <= order; ++m) {
            TruncSeries factor = TruncSeries::one(order);
            factor.at(k * m) = RatFun(Rational(-1));
            block = block * factor;
        }
        if (e.is_integer() && e.num().fits_slong_p())
            acc = acc * series_pow(block, e.num().get_si());
        else
            acc = acc * series_pow(block, RatFun(e));
    }
    return acc;
}

} // namespace hooklab
