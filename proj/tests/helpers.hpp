#pragma once

#include <random>
#include <string>
#include <vector>

#include "hooklab/expr.hpp"
#include "hooklab/weight.hpp"

namespace testutil {

// Evaluates an x-free expression; free identifiers become parameters.
inline hooklab::RatFun rf(const std::string& src) {
    const auto ast = hooklab::expr::parse(src);
    hooklab::expr::EvalEnv env;
    for (const auto& name : hooklab::expr::free_identifiers(ast)) env.params.push_back(name);
    return hooklab::expr::eval_ratfun(ast, env);
}

inline hooklab::TruncSeries series_of(const std::string& src, int order,
                                      const std::vector<std::string>& params = {}) {
    hooklab::expr::EvalEnv env;
    env.params = params;
    return hooklab::expr::eval_series(src, order, env);
}

inline hooklab::WeightTable table_of(const std::vector<std::string>& values) {
    hooklab::WeightTable w;
    for (const auto& v : values) w.values.push_back(rf(v));
    return w;
}

// Expected-prefix comparison: every listed value must match exactly.
inline bool matches_prefix(const hooklab::WeightTable& got,
                           const std::vector<std::string>& expected) {
    if (got.size() < static_cast<int>(expected.size())) return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (got.values[i] != rf(expected[i])) return false;
    return true;
}

class RandomRationals {
public:
    explicit RandomRationals(unsigned seed) : rng_(seed) {}

    hooklab::Rational nonzero() {
        std::uniform_int_distribution<int> num(-5, 5);
        std::uniform_int_distribution<int> den(1, 4);
        int n = 0;
        while (n == 0) n = num(rng_);
        return hooklab::Rational(n, den(rng_));
    }

    hooklab::Rational positive() {
        std::uniform_int_distribution<int> num(1, 6);
        std::uniform_int_distribution<int> den(1, 4);
        return hooklab::Rational(num(rng_), den(rng_));
    }

    hooklab::WeightTable table(int size) {
        hooklab::WeightTable w;
        for (int i = 0; i < size; ++i) w.values.push_back(hooklab::RatFun(nonzero()));
        return w;
    }

private:
    std::mt19937 rng_;
};

} // namespace testutil
