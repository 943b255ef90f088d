#pragma once

#include <map>

#include "hooklab/series.hpp"

namespace hooklab {

/// Generalized Euler product written as an eta quotient:
///   f = x^prefactor * prod_k eta(k*tau)^{e_k},  prefactor = -sum_k e_k*k/24,
/// where eta(k*tau) = x^{k/24} * prod_m (1-x^{km}).
struct EtaQuotient {
    std::map<int, Rational> exponents;
    Rational prefactor;

    /// True when every exponent is an integer (a genuine eta quotient).
    bool integral() const;
};

/// Exponents b_m of f = prod_m (1-x^m)^{b_m}, m = 1..N, solved triangularly
/// from n*c_n = -sum_{m|n} m*b_m where c = log f.  Requires a numeric series
/// with constant term 1; parametric coefficients are rejected.
std::map<int, Rational> plain_euler_exponents(const TruncSeries& f, int order);

/// Eta-quotient exponents e_k of f = prod_k [prod_m (1-x^{km})]^{e_k},
/// obtained from the plain exponents by Moebius inversion over divisors:
/// e_k = sum_{d|k} mu(k/d) b_d.
std::map<int, Rational> euler_exponents(const TruncSeries& f, int order);

EtaQuotient eta_from_exponents(const std::map<int, Rational>& exponents);

/// "x^(1/24)*eta(12tau)^3*eta(3tau)^6/(eta(6tau)^9*eta(tau))"
std::string render_eta(const EtaQuotient& q);

/// prod_k [prod_m (1-x^{km})]^{e_k} truncated at `order` (the reconstruction
/// of euler_exponents output).
TruncSeries euler_product(const std::map<int, Rational>& exponents, int order);

} // namespace hooklab
