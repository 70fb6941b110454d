#include "mzv/oracles.hpp"

#include <map>
#include <tuple>

#include "mzv/cones.hpp"
#include "mzv/partial_sums.hpp"
#include "mzv/upsilon.hpp"

namespace mzv {

namespace {

std::string pair_string(const Forest& f, const Forest& g) { return "\"" + to_string(f) + "\" \"" + to_string(g) + "\""; }

}  // namespace

OracleReport oracle_flattening(int max_size, long max_dec) {
    OracleReport rep;
    auto all = enumerate_forests(max_size, nat_letters(max_dec));
    for (const Rational& lambda : {Rational(-1), Rational(0), Rational(1), Rational(2)}) {
        ForestShuffler fsh(lambda);
        WordShuffler wsh(lambda);
        std::map<Forest, WordComb> fl;
        auto flat = [&](const Forest& f) -> const WordComb& {
            auto it = fl.find(f);
            if (it == fl.end()) it = fl.emplace(f, flatten(f, lambda)).first;
            return it->second;
        };
        for (std::size_t total = 0; total <= static_cast<std::size_t>(max_size); ++total)
            for (const auto& f : all)
                for (const auto& g : all) {
                    if (f.size() + g.size() != total || g < f) continue;
                    ++rep.cases;
                    WordComb lhs = linear_extend(fsh(f, g), flat);
                    if (lhs != wsh(flat(f), flat(g))) {
                        rep.ok = false;
                        rep.counterexample =
                            "flatten morphism fails for " + pair_string(f, g) + " at lambda " + to_string(lambda);
                        return rep;
                    }
                }
    }
    std::map<std::tuple<Word, long, bool>, Rational> ws;
    for (const auto& f : all) {
        WordComb st = flatten(f, 1), an = flatten(f, -1);
        for (long N : {5L, 10L}) {
            for (bool strict : {true, false}) {
                Rational rhs = 0;
                for (const auto& [w, c] : strict ? st : an) {
                    auto key = std::make_tuple(w, N, strict);
                    auto it = ws.find(key);
                    if (it == ws.end()) it = ws.emplace(key, word_sum(w, N, strict)).first;
                    rhs += c * it->second;
                }
                ++rep.cases;
                if (forest_sum(f, N, strict) != rhs) {
                    rep.ok = false;
                    rep.counterexample = "partial sum factorization fails for \"" + to_string(f) + "\" at N=" +
                                         std::to_string(N) + (strict ? " (strict)" : " (non-strict)");
                    return rep;
                }
            }
        }
    }
    return rep;
}

OracleReport oracle_yew(int max_size, long max_dec) {
    OracleReport rep;
    auto all = enumerate_forests(max_size, nat_letters(max_dec), true);
    Yew y;
    ForestShuffler sh(0);
    for (long total = 0; total <= max_size; ++total)
        for (const auto& f : all)
            for (const auto& g : all) {
                if (f.weight() + g.weight() != total || g < f) continue;
                ++rep.cases;
                ForestComb viadef = branched_debinarize(sh(branched_binarize(f), branched_binarize(g)));
                if (y(f, g) != viadef) {
                    rep.ok = false;
                    rep.counterexample = "yew routes differ on " + pair_string(f, g);
                    return rep;
                }
            }
    for (const auto& f : all) {
        ++rep.cases;
        if (flatten(branched_binarize(f), 0) != binarize(fl_yew(f))) {
            rep.ok = false;
            rep.counterexample = "fl_0 o s^T differs from s o fl_yew on \"" + to_string(f) + "\"";
            return rep;
        }
    }
    return rep;
}

OracleReport oracle_roundtrip(int max_size, long max_dec) {
    OracleReport rep;
    for (const auto& f : enumerate_forests(max_size, nat_letters(max_dec))) {
        ++rep.cases;
        Forest b = branched_binarize(f);
        if (branched_debinarize(b) != f || static_cast<long>(b.size()) != f.weight()) {
            rep.ok = false;
            rep.counterexample = "branched binarization round trip fails on \"" + to_string(f) + "\"";
            return rep;
        }
        if (f.empty()) continue;
        Cone c = phi(f);
        if (psi(c) != f) {
            rep.ok = false;
            rep.counterexample = "psi(phi(F)) != F for \"" + to_string(f) + "\"";
            return rep;
        }
        if (is_convergent(f) && czv_reduce(c) != fl_yew(f)) {
            rep.ok = false;
            rep.counterexample = "czv_reduce(phi(F)) != fl_yew(F) for \"" + to_string(f) + "\"";
            return rep;
        }
    }
    return rep;
}

}  // namespace mzv
