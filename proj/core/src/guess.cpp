#include "hooklab/guess.hpp"

#include <algorithm>
#include <sstream>

namespace hooklab {

namespace {

Rational eval_poly(const MultiPoly& p, const Rational& n) {
    return p.substituted({{"n", n}}).constant_value();
}

// Reduced row echelon form of the homogeneous system rows*cols; returns the
// nullspace dimension and, when it is exactly one, a canonical basis vector.
int nullspace_dim(std::vector<std::vector<Rational>> m, int cols,
                  std::vector<Rational>* solution) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivot_cols;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
        auto& prow = m[static_cast<std::size_t>(rank)];
        const Rational inv = prow[static_cast<std::size_t>(c)].reciprocal();
        for (int cc = c; cc < cols; ++cc) prow[static_cast<std::size_t>(cc)] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            auto& row = m[static_cast<std::size_t>(r)];
            const Rational f = row[static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (int cc = c; cc < cols; ++cc)
                row[static_cast<std::size_t>(cc)] -= f * prow[static_cast<std::size_t>(cc)];
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    const int dim = cols - rank;
    if (dim == 1 && solution) {
        int free_col = -1;
        for (int c = 0; c < cols; ++c)
            if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) {
                free_col = c;
                break;
            }
        std::vector<Rational> v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(free_col)] = Rational(1);
        for (int r = 0; r < rank; ++r)
            v[static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(r)])] =
                -m[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_col)];
        *solution = std::move(v);
    }
    return dim;
}

MultiPoly poly_from_coeffs(const std::vector<Rational>& coeffs, std::size_t offset,
                           std::size_t count) {
    const MultiPoly n = MultiPoly::variable("n");
    MultiPoly p;
    MultiPoly power{Rational(1)};
    for (std::size_t i = 0; i < count; ++i) {
        p += power.scaled(coeffs[offset + i]);
        power *= n;
    }
    return p;
}

} // namespace

Rational ClosedForm::eval_at(long n) const {
    if (level == 0) {
        const RatFun v = ratfun.substituted({{"n", Rational(n)}});
        return v.constant_value();
    }
    Rational acc = base_value;
    for (long k = base_index; k < n; ++k)
        acc *= ratfun.substituted({{"n", Rational(k)}}).constant_value();
    return acc;
}

std::optional<ClosedForm> guess_rational(const std::vector<Rational>& values, long n0) {
    const int len = static_cast<int>(values.size());
    if (len < 4) return std::nullopt;

    const int max_drop = static_cast<int>(std::min(2, len - 4));
    for (int drop = 0; drop <= max_drop; ++drop) {
        const long base = n0 + drop;
        const int m = len - drop;
        const int held_out = std::max(2, (m + 3) / 4);
        const int fit_points = m - held_out;
        const int degree_budget = std::min(m - 3, fit_points - 1);

        for (int d = 0; d <= degree_budget; ++d) {
            for (int dp = 0; dp <= d; ++dp) {
                const int dq = d - dp;
                const int unknowns = dp + dq + 2;
                if (unknowns > fit_points + 1) continue;

                std::vector<std::vector<Rational>> matrix;
                matrix.reserve(static_cast<std::size_t>(fit_points));
                for (int i = 0; i < fit_points; ++i) {
                    const Rational nval(base + i);
                    const Rational& v = values[static_cast<std::size_t>(drop + i)];
                    std::vector<Rational> row(static_cast<std::size_t>(unknowns));
                    Rational power(1);
                    for (int a = 0; a <= dp; ++a) {
                        row[static_cast<std::size_t>(a)] = power;
                        power *= nval;
                    }
                    power = Rational(1);
                    for (int b = 0; b <= dq; ++b) {
                        row[static_cast<std::size_t>(dp + 1 + b)] = -(v * power);
                        power *= nval;
                    }
                    matrix.push_back(std::move(row));
                }

                std::vector<Rational> sol;
                if (nullspace_dim(std::move(matrix), unknowns, &sol) != 1) continue;

                const MultiPoly P = poly_from_coeffs(sol, 0, static_cast<std::size_t>(dp) + 1);
                const MultiPoly Q =
                    poly_from_coeffs(sol, static_cast<std::size_t>(dp) + 1,
                                     static_cast<std::size_t>(dq) + 1);
                if (Q.is_zero()) continue;

                // Every point from `base` on must be matched, held-out points
                // included, and none may sit on a pole.
                bool ok = true;
                for (int i = 0; i < m && ok; ++i) {
                    const Rational nval(base + i);
                    const Rational qv = eval_poly(Q, nval);
                    if (qv.is_zero() ||
                        eval_poly(P, nval) / qv != values[static_cast<std::size_t>(drop + i)])
                        ok = false;
                }
                if (!ok) continue;

                ClosedForm cf;
                cf.level = 0;
                cf.ratfun = RatFun(P, Q);
                cf.base_index = base;
                cf.text = render_closed_form(cf);
                return cf;
            }
        }
    }
    return std::nullopt;
}

std::optional<ClosedForm> guess_hypergeometric(const std::vector<Rational>& values, long n0) {
    if (values.size() < 5) return std::nullopt;
    for (const auto& v : values)
        if (v.is_zero()) throw DomainError("hypergeometric guessing requires nonzero values");

    std::vector<Rational> ratios;
    ratios.reserve(values.size() - 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        ratios.push_back(values[i + 1] / values[i]);

    auto ratio_form = guess_rational(ratios, n0);
    if (!ratio_form) return std::nullopt;

    ClosedForm cf;
    cf.level = 1;
    cf.ratfun = ratio_form->ratfun;
    cf.base_index = ratio_form->base_index;
    cf.base_value = values[static_cast<std::size_t>(cf.base_index - n0)];
    cf.text = render_closed_form(cf);
    return cf;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

// Dense integer coefficients of a univariate polynomial in n, degree order.
std::vector<mpz_class> dense_coeffs(const MultiPoly& p) {
    std::vector<mpz_class> out(static_cast<std::size_t>(p.degree_in("n")) + 1, mpz_class(0));
    for (const auto& [e, c] : p.terms()) {
        const int deg = e.empty() ? 0 : e[0];
        out[static_cast<std::size_t>(deg)] = c.num();
    }
    return out;
}

std::vector<mpz_class> divisors_of(const mpz_class& value) {
    std::vector<mpz_class> out;
    const mpz_class v = abs(value);
    if (v == 0 || v > 1000000) return out;
    for (mpz_class d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct LinearFactor {
    mpz_class lead, cst;  // lead*n + cst, lead > 0, gcd(lead, |cst|) = 1
    int multiplicity = 1;

    Rational root() const { return Rational(-cst, lead); }
    std::string str() const {
        MultiPoly p = MultiPoly::variable("n").scaled(Rational(lead)) + MultiPoly(Rational(cst));
        return p.str();
    }
};

struct Factored {
    Rational constant;                   // overall rational multiplier
    std::vector<LinearFactor> linear;    // rational-root factors
    MultiPoly remainder;                 // what did not split (may be 1)
    bool fully_split() const { return remainder.is_one(); }
};

// Splits an integer-coefficient polynomial in n into content * linear
// rational-root factors * remainder.
Factored factor_rational_roots(const MultiPoly& poly) {
    Factored out;
    out.constant = Rational(1);
    out.remainder = MultiPoly(Rational(1));
    if (poly.is_zero()) {
        out.constant = Rational(0);
        return out;
    }

    std::vector<mpz_class> c = dense_coeffs(poly);
    // Pull the integer content (carries the sign of the leading coefficient).
    mpz_class content = 0;
    for (const auto& x : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (sgn(c.back()) < 0) content = -content;
    for (auto& x : c) x /= content;
    out.constant = Rational(content);

    auto add_factor = [&](const mpz_class& lead, const mpz_class& cst) {
        for (auto& f : out.linear)
            if (f.lead == lead && f.cst == cst) {
                ++f.multiplicity;
                return;
            }
        out.linear.push_back({lead, cst, 1});
    };

    while (c.size() > 1) {
        // Roots p/q with q*n - p dividing the polynomial.
        while (c.size() > 1 && c[0] == 0) {
            add_factor(1, 0);
            c.erase(c.begin());
        }
        if (c.size() == 1) break;
        if (c.size() == 2) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), c[0].get_mpz_t(), c[1].get_mpz_t());
            add_factor(c[1] / g, c[0] / g);
            out.constant *= Rational(g);
            c = {mpz_class(1)};
            break;
        }
        const auto ps = divisors_of(c[0]);
        const auto qs = divisors_of(c.back());
        if (ps.empty() || qs.empty()) break;
        bool found = false;
        for (const auto& q : qs) {
            for (const auto& p : ps) {
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    const Rational root(sign > 0 ? p : mpz_class(-p), q);
                    // Synthetic evaluation/division by (q*n - sign*p).
                    Rational acc(0);
                    for (std::size_t i = c.size(); i-- > 0;)
                        acc = acc * root + Rational(c[i]);
                    if (!acc.is_zero()) continue;
                    // Deflate: divide by (n - root), then absorb q.
                    std::vector<Rational> quotient(c.size() - 1);
                    Rational carry(0);
                    for (std::size_t i = c.size(); i-- > 1;) {
                        carry = Rational(c[i]) + carry * root;
                        quotient[i - 1] = carry;
                    }
                    // quotient has rational coefficients with denominators
                    // dividing q^deg; rescale to integers.
                    Rational content_q(0);
                    for (const auto& x : quotient) content_q = Rational::gcd(content_q, x);
                    std::vector<mpz_class> next(quotient.size());
                    for (std::size_t i = 0; i < quotient.size(); ++i)
                        next[i] = (quotient[i] / content_q).num();
                    mpz_class neg_p = sign > 0 ? mpz_class(-p) : p;
                    add_factor(q, neg_p);
                    out.constant *= content_q / Rational(q);
                    c = std::move(next);
                    found = true;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }

    if (c.size() > 1) {
        MultiPoly rem;
        const MultiPoly n = MultiPoly::variable("n");
        MultiPoly power{Rational(1)};
        for (const auto& x : c) {
            rem += power.scaled(Rational(x));
            power *= n;
        }
        out.remainder = rem;
    } else {
        out.constant *= Rational(c[0]);
    }
    std::sort(out.linear.begin(), out.linear.end(), [](const LinearFactor& a, const LinearFactor& b) {
        if (a.lead != b.lead) return a.lead < b.lead;
        const mpz_class aa = abs(a.cst), ab = abs(b.cst);
        if (aa != ab) return aa < ab;
        return a.cst < b.cst;
    });
    return out;
}

std::string join_pieces(const std::vector<std::string>& pieces) {
    if (pieces.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) out += "*";
        out += pieces[i];
    }
    return out;
}

std::string wrap_factor(const LinearFactor& f) {
    std::string s = f.str();
    if (s.find('+') != std::string::npos || s.find('-') != std::string::npos) s = "(" + s + ")";
    if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
    return s;
}

std::string combine_num_den(std::vector<std::string> num, std::vector<std::string> den) {
    if (num.empty()) num.push_back("1");
    std::string ns = join_pieces(num);
    if (den.empty()) return ns;
    std::string ds = join_pieces(den);
    if (den.size() > 1 || ds.find('*') != std::string::npos) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

std::string render_level0(const ClosedForm& cf) {
    const Factored fn = factor_rational_roots(cf.ratfun.num());
    const Factored fd = factor_rational_roots(cf.ratfun.den());
    const Rational c = fn.constant / fd.constant;

    std::vector<std::string> num, den;
    if (c.num() != 1 || (fn.linear.empty() && fn.remainder.is_one())) num.push_back(c.num().get_str());
    for (const auto& f : fn.linear) num.push_back(wrap_factor(f));
    if (!fn.remainder.is_one()) num.push_back("(" + fn.remainder.str() + ")");
    if (c.den() != 1) den.push_back(c.den().get_str());
    for (const auto& f : fd.linear) den.push_back(wrap_factor(f));
    if (!fd.remainder.is_one()) den.push_back("(" + fd.remainder.str() + ")");
    return combine_num_den(std::move(num), std::move(den));
}

std::string exponent_text(long n0, bool negated) {
    // n - n0, or n0 - n when negated.
    if (!negated) {
        if (n0 == 0) return "n";
        if (n0 < 0) return "n+" + std::to_string(-n0);
        return "n-" + std::to_string(n0);
    }
    if (n0 == 0) return "-n";
    return std::to_string(n0) + "-n";
}

std::string power_base_text(const mpz_class& b) {
    if (b >= 0) return b.get_str();
    return "(" + b.get_str() + ")";
}

std::string render_level1(const ClosedForm& cf) {
    const Factored fn = factor_rational_roots(cf.ratfun.num());
    const Factored fd = factor_rational_roots(cf.ratfun.den());
    if (!fn.fully_split() || !fd.fully_split()) {
        return cf.base_value.str() + "*product(" + cf.ratfun.str() + ", n=" +
               std::to_string(cf.base_index) + "..n-1)";
    }

    const Rational c = fn.constant / fd.constant;
    Rational constant = cf.base_value;
    std::vector<std::string> num, den;

    // Geometric part c^(n - n0).
    if (!c.is_one()) {
        auto exponent = [&](bool negated) {
            const std::string t = exponent_text(cf.base_index, negated);
            return t == "n" ? t : "(" + t + ")";
        };
        if (c.den() == 1) {
            num.push_back(power_base_text(c.num()) + "^" + exponent(false));
        } else if (c.num() == 1) {
            num.push_back(power_base_text(c.den()) + "^" + exponent(true));
        } else {
            num.push_back("(" + c.str() + ")^" + exponent(false));
        }
    }

    // Telescope num/den factor pairs whose roots differ by an integer.
    auto expand = [](const std::vector<LinearFactor>& fs) {
        std::vector<Rational> roots;
        for (const auto& f : fs)
            for (int i = 0; i < f.multiplicity; ++i) roots.push_back(f.root());
        return roots;
    };
    std::vector<Rational> num_roots = expand(fn.linear);
    std::vector<Rational> den_roots = expand(fd.linear);
    // The lead coefficients were absorbed into c, so each factor (lead*n+cst)
    // becomes monic (n - root); shift a = -root.
    std::vector<bool> den_used(den_roots.size(), false);

    auto emit_poly = [&](std::vector<std::string>& side, const Rational& shift) {
        MultiPoly p = MultiPoly::variable("n") + MultiPoly(shift);
        std::string s = p.str();
        if (s.find('+') != std::string::npos || s.find('-') != std::string::npos) s = "(" + s + ")";
        side.push_back(s);
    };

    for (const auto& r : num_roots) {
        const Rational a = -r;
        int pick = -1;
        for (std::size_t j = 0; j < den_roots.size(); ++j) {
            if (den_used[j]) continue;
            if ((a - (-den_roots[j])).is_integer()) { pick = static_cast<int>(j); break; }
        }
        if (pick >= 0) {
            den_used[static_cast<std::size_t>(pick)] = true;
            const Rational b = -den_roots[static_cast<std::size_t>(pick)];
            const long m = (a - b).num().get_si();
            if (m > 0) {
                for (long t = 0; t < m; ++t) {
                    emit_poly(num, b + Rational(t));
                    constant /= Rational(cf.base_index) + b + Rational(t);
                }
            } else if (m < 0) {
                for (long t = 0; t < -m; ++t) {
                    emit_poly(den, a + Rational(t));
                    constant *= Rational(cf.base_index) + a + Rational(t);
                }
            }
            continue;
        }
        // Unpaired rising factor: prod_{k=n0}^{n-1} (k+a).
        if (a.is_integer() && Rational(cf.base_index) + a == Rational(1)) {
            const long off = a.to_long() - 1;
            num.push_back(off == 0 ? "n!" : "(n+" + std::to_string(off) + ")!");
        } else {
            num.push_back("product(k+" + a.str() + ", k=" + std::to_string(cf.base_index) + "..n-1)");
        }
    }
    for (std::size_t j = 0; j < den_roots.size(); ++j) {
        if (den_used[j]) continue;
        const Rational a = -den_roots[j];
        if (a.is_integer() && Rational(cf.base_index) + a == Rational(1)) {
            const long off = a.to_long() - 1;
            den.push_back(off == 0 ? "n!" : "(n+" + std::to_string(off) + ")!");
        } else {
            den.push_back("product(k+" + a.str() + ", k=" + std::to_string(cf.base_index) + "..n-1)");
        }
    }

    if (!constant.is_one() || num.empty()) {
        std::vector<std::string> head;
        if (constant.num() != 1 || num.empty()) head.push_back(constant.num().get_str());
        num.insert(num.begin(), head.begin(), head.end());
        if (constant.den() != 1) den.insert(den.begin(), constant.den().get_str());
    }
    return combine_num_den(std::move(num), std::move(den));
}

} // namespace

std::string render_closed_form(const ClosedForm& cf) {
    return cf.level == 0 ? render_level0(cf) : render_level1(cf);
}

} // namespace hooklab
