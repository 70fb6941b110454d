#pragma once

#include <map>
#include <utility>

#include "mzv/forests.hpp"

namespace mzv {

// The Upsilon product on Nat-decorated forests, by its binomial recursion.
class Yew {
public:
    ForestComb operator()(const Forest& f, const Forest& g);
    ForestComb operator()(const ForestComb& a, const ForestComb& b);
    // on words read as ladders; throws if a non-ladder appears
    WordComb operator()(const Word& u, const Word& v);

private:
    ForestComb trees(const Tree& t, const Tree& u);
    std::map<std::pair<Forest, Forest>, ForestComb> memo_;
};

ForestComb yew(const Forest& f, const Forest& g);
ForestComb yew_via_definition(const Forest& f, const Forest& g);

WordComb fl_yew(const Forest& f);
WordComb fl_yew(const ForestComb& c);

}  // namespace mzv
