#pragma once

#include <vector>

#include "mzv/forests.hpp"

namespace mzv {

// Sum over N >= n1 > ... > nk >= 1 (or >= chains) of prod n_i^{-s_i}.
Rational word_sum(const Word& w, long N, bool strict = true);
Rational word_sum(const WordComb& c, long N, bool strict = true);

// Sum over n : V(F) -> [1,N], decreasing (strictly or weakly) away from the roots, of prod n_v^{-d(v)}.
Rational forest_sum(const Forest& f, long N, bool strict = true);

// Sum over n : V(F) -> [1,N] of prod_v (sum of n over the descendants of v, v included)^{-d(v)}.
Rational tzv_sum(const Forest& f, long N);

// 1/n^s
Rational inverse_power(long n, long s);

}  // namespace mzv
