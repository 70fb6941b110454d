#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mzv/forests.hpp"

namespace mzv {

struct NumericResult {
    double value = 0;  // truncation at horizon 2N
    double error = 0;  // |value(2N) - value(N)|
    long horizon = 0;  // N
};

// 1e5 up to depth 3, 2e4 beyond
long default_horizon(std::size_t depth);

NumericResult eval_mzv(const Word& w, std::optional<long> N = std::nullopt, bool strict = true);
NumericResult eval_binary(const Word& w, std::optional<long> N = std::nullopt);
// term values keyed by (Nat word, horizon), reusable across eval_expr calls
using EvalCache = std::map<std::pair<Word, long>, NumericResult>;

// Nat words are stuffle MZVs, {x,y} words shuffle MZVs; divergent words must have cancelled
NumericResult eval_expr(const WordComb& e, std::optional<long> N = std::nullopt, EvalCache* cache = nullptr);

// box truncation n_v in [1,N]
NumericResult eval_tzv_direct(const Forest& f, long N);
// simplex truncation n_1+...+n_r <= N, r <= 3
NumericResult eval_mt_direct(const std::vector<long>& s, long s0, long N);

// floating tree sum at a single horizon, exposed for cross-checks
double tzv_box_sum(const Forest& f, long N);

}  // namespace mzv
