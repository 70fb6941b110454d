#pragma once

#include <string>

#include "json.hpp"
#include "mzv/cones.hpp"
#include "mzv/forests.hpp"
#include "mzv/numeric.hpp"

namespace mzv {

using Json = nlohmann::json;

// "3 xxxy + 2 xxyx + xyxx"; "0" when empty
std::string format_words(const WordComb& c);
// "ladder(2,3,1) + 4 ladder(3,2,1)"
std::string format_forests(const ForestComb& c);
// "2 * zeta(2,1,1)" for Nat words, "2 * zeta_sh(xyyy)" for {x,y} words
std::string format_zeta(const WordComb& c);
std::string format_numeric(const NumericResult& r);

Json word_to_json(const Word& w);  // [2,1,1] or "xyy"
Word word_from_json(const Json& j);

Json to_json(const WordComb& c);  // [{"coeff":"p/q","basis":...}]
Json to_json(const ForestComb& c);
WordComb word_comb_from_json(const Json& j);
ForestComb forest_comb_from_json(const Json& j);

Json zeta_to_json(const WordComb& c);  // [{"coeff":"p/q","zeta":[...]}] or "zeta_sh":"xyy"
WordComb zeta_from_json(const Json& j);

Json to_json(const Cone& c);
Cone cone_from_json(const Json& j);

Json to_json(const NumericResult& r);

}  // namespace mzv
