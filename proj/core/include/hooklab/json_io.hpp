#pragma once

#include <string>

#include "hooklab/etamake.hpp"
#include "hooklab/guess.hpp"
#include "hooklab/weight.hpp"

namespace hooklab {

/// {"values": ["1", "1/4", ...], "undetermined": [6, 7]}
std::string weight_table_json(const WeightTable& w);
/// Inverse of weight_table_json (values become RatFun via the expression
/// parser; parameters are inferred from the strings).
WeightTable weight_table_from_json(const std::string& text);

/// {"order": N, "coeffs": ["1", "1", "1/2", ...]}
std::string series_json(const TruncSeries& s);

/// {"level": .., "n0": .., "ratfun": .., "base": .., "text": ..}
std::string closed_form_json(const ClosedForm& cf);

/// {"exponents": {"1": "-1", ...}, "prefactor": "1/24", "eta": "...",
///  "is_eta_quotient": true}
std::string eta_json(const EtaQuotient& q);

} // namespace hooklab
