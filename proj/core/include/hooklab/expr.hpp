#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "hooklab/series.hpp"

namespace hooklab::expr {

/// Expression tree for generating-function formulas, e.g.
/// "(1-sqrt(1-4*x))/(2*x)" or "product(1/(1-x^k)^z, k=1..7)".
struct Node;
using ExprPtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Div, Pow, Call, Product };

    Kind kind;
    std::size_t pos = 0;       // offset into the source, for error messages
    Rational number;           // Number
    std::string name;          // Ident: identifier; Call: function name
    ExprPtr a, b;              // operands; Call argument in a; Product body in a
    std::string index;         // Product: bound index variable
    ExprPtr lo, hi;            // Product bounds
};

/// Grammar (see the CLI manual for the user-facing description):
///   expr    := term (('+'|'-') term)*
///   term    := unary (('*'|'/') unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' unary)?                  -- right associative
///   atom    := number | ident | ident '(' expr ')' | '(' expr ')'
///            | 'product' '(' expr ',' ident '=' expr '..' expr ')'
/// Functions: exp, log, sqrt, sin, cos, tan, sec.
ExprPtr parse(const std::string& src);

/// Faithful text form; parse(render(e)) has the same structure as e.
std::string render(const ExprPtr& e);

/// Free identifiers other than x and product indices.
std::set<std::string> free_identifiers(const ExprPtr& e);

struct EvalEnv {
    /// Declared symbolic parameters; they evaluate to themselves.
    std::vector<std::string> params;
    /// Bound identifiers (integer instantiations like t=2, or renamings).
    std::map<std::string, RatFun> bindings;
};

/// Evaluates to an order-N truncated series.  Division by a series with zero
/// constant term is allowed when the numerator's valuation compensates;
/// bounded products with literal upper bounds below N are completed to N when
/// every added factor is 1 + O(x^k).
TruncSeries eval_series(const ExprPtr& e, int order, const EvalEnv& env = {});

/// Evaluates an x-free expression to a rational function.
RatFun eval_ratfun(const ExprPtr& e, const EvalEnv& env = {});

/// Convenience: parse + eval.
TruncSeries eval_series(const std::string& src, int order, const EvalEnv& env = {});
RatFun eval_ratfun(const std::string& src, const EvalEnv& env = {});

} // namespace hooklab::expr
