#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

using ExpVec = std::vector<int>;

/// Graded lexicographic order on exponent vectors of equal length; earlier
/// variables are more significant on ties.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over Rational.  The variable list is kept
/// sorted by global registration rank and contains only variables that
/// actually occur, so structurally equal polynomials compare equal no matter
/// how they were computed.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);
    static MultiPoly constant(const Rational& c) { return MultiPoly(c); }
    static MultiPoly variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    bool is_one() const;
    /// Requires is_constant().
    Rational constant_value() const;

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;
    int degree_in(const std::string& var) const;
    bool depends_on(const std::string& var) const;

    /// Coefficient of the graded-lex leading term; zero polynomial gives 0.
    Rational leading_coeff() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned long e) const;

    /// Positive rational c such that (*this)/c has integer coefficients with
    /// gcd 1.  Zero polynomial gives 0.
    Rational content() const;
    MultiPoly primitive_part() const;

    /// Substitutes rational values for variables; variables absent from the
    /// polynomial are ignored.
    MultiPoly substituted(const std::map<std::string, Rational>& bindings) const;

    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Expanded text with `^` exponents and explicit `*`, highest term first.
    std::string str() const;

    /// Rewrites the polynomial over a variable list that must contain vars().
    MultiPoly aligned_to(const std::vector<std::string>& new_vars) const;

private:
    void add_term(const ExpVec& e, const Rational& c);
    void prune();

    std::vector<std::string> vars_;
    TermMap terms_;

    friend MultiPoly from_terms(std::vector<std::string> vars, MultiPoly::TermMap terms);
};

/// Primitive polynomial gcd with positive leading coefficient; gcd with a
/// nonzero constant is 1.  gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Exact division; throws ArithmeticError when b does not divide a.
MultiPoly poly_div_exact(const MultiPoly& a, const MultiPoly& b);
bool try_poly_div_exact(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient);

/// Registration order of parameter names; defines the global variable order
/// used by every polynomial (append-only, process-wide).
int variable_rank(const std::string& name);

/// Merge of two rank-sorted variable lists.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

/// Scope for generating fresh parameter names that avoid a set of names
/// already in use (typically a single hookexp computation).
class ParamContext {
public:
    void mark_used(const std::string& name) { used_.insert(name); }
    bool is_used(const std::string& name) const { return used_.count(name) != 0; }

    /// Returns `hint` when free, otherwise `hint_1`, `hint_2`, ...; the
    /// returned name is marked used.
    std::string fresh(const std::string& hint);

private:
    std::set<std::string> used_;
};

} // namespace hooklab
