#pragma once

#include <optional>
#include <vector>

#include "hooklab/ratfun.hpp"

namespace hooklab {

/// Closed form recovered from a value sequence.
///   level 0: value(n) = ratfun(n) for n >= base_index.
///   level 1: value(n) = base_value * prod_{k=base_index}^{n-1} ratfun(k),
///            i.e. a hypergeometric term with rational consecutive ratio.
/// base_index may exceed the first input index when leading values had to be
/// dropped to obtain a verified fit.
struct ClosedForm {
    int level = 0;
    RatFun ratfun;  // in the single variable n
    long base_index = 0;
    Rational base_value;
    std::string text;

    /// Evaluates the closed form; n must be >= base_index.
    Rational eval_at(long n) const;
};

/// Minimal-degree rational function P(n)/Q(n) matching the values at
/// consecutive indices starting at n0.  The trailing max(2, ceil(len/4))
/// values are held out of the fit and must verify; candidates are swept by
/// total degree, numerator degree ascending within a degree.
std::optional<ClosedForm> guess_rational(const std::vector<Rational>& values, long n0);

/// Hypergeometric guess: fits the consecutive ratio with guess_rational.
/// All values must be nonzero.
std::optional<ClosedForm> guess_hypergeometric(const std::vector<Rational>& values, long n0);

/// Display form with rational linear factors pulled out, e.g. "6/(n*(n+2))".
std::string render_closed_form(const ClosedForm& cf);

} // namespace hooklab
