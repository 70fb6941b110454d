#include "mzv/upsilon.hpp"

#include "mzv/errors.hpp"

namespace mzv {

namespace {
void require_nat(const Forest& f) {
    if (f.kind() == Kind::Bin) throw Error(ErrorKind::AlphabetMismatch, "the Upsilon product needs Nat decorations");
}
}  // namespace

// B^n(f1) Y B^m(f2) = sum_{i<m} C(n-1+i,i) B^{n+i}[f1 Y B^{m-i}(f2)] + sum_{j<n} C(m-1+j,j) B^{m+j}[B^{n-j}(f1) Y f2]
ForestComb Yew::trees(const Tree& t, const Tree& u) {
    long n = t.root().value(), m = u.root().value();
    const Forest& f1 = t.children();
    const Forest& f2 = u.children();
    ForestComb out;
    for (long i = 0; i < m; ++i) {
        Forest right(b_plus(Letter::nat(m - i), f2));
        out.axpy(Rational(binomial(n - 1 + i, i)), b_plus(Letter::nat(n + i), (*this)(f1, right)));
    }
    for (long j = 0; j < n; ++j) {
        Forest left(b_plus(Letter::nat(n - j), f1));
        out.axpy(Rational(binomial(m - 1 + j, j)), b_plus(Letter::nat(m + j), (*this)(left, f2)));
    }
    return out;
}

ForestComb Yew::operator()(const Forest& f, const Forest& g) {
    require_nat(f);
    require_nat(g);
    if (f.empty()) return ForestComb(g);
    if (g.empty()) return ForestComb(f);

    auto key = f < g ? std::make_pair(f, g) : std::make_pair(g, f);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    ForestComb out;
    if (f.is_tree() && g.is_tree())
        out = trees(f.trees()[0], g.trees()[0]);
    else
        out = concatenation_clause(f, g, [this](const Tree& t, const Tree& u) { return (*this)(Forest(t), Forest(u)); });
    memo_.emplace(std::move(key), out);
    return out;
}

ForestComb Yew::operator()(const ForestComb& a, const ForestComb& b) {
    return bilinear_extend(a, b, [this](const Forest& f, const Forest& g) { return (*this)(f, g); });
}

WordComb Yew::operator()(const Word& u, const Word& v) {
    ForestComb r = (*this)(ladder(u), ladder(v));
    return map_basis<Word>(r, [](const Forest& f) {
        auto w = as_ladder_word(f);
        if (!w) throw Error(ErrorKind::Domain, "Upsilon product of ladders produced non-ladder " + to_string(f));
        return *w;
    });
}

ForestComb yew(const Forest& f, const Forest& g) { return Yew()(f, g); }

ForestComb yew_via_definition(const Forest& f, const Forest& g) {
    require_nat(f);
    require_nat(g);
    return branched_debinarize(forest_shuffle(branched_binarize(f), branched_binarize(g), 0));
}

WordComb fl_yew(const Forest& f) {
    require_nat(f);
    Yew y;
    WordComb unit{Word()};
    return operated_fold(
        f, unit,
        [&y](const WordComb& a, const WordComb& b) {
            return bilinear_extend(a, b, [&y](const Word& u, const Word& v) { return y(u, v); });
        },
        [](Letter a, const WordComb& t) { return prepend(a, t); });
}

WordComb fl_yew(const ForestComb& c) {
    return linear_extend(c, [](const Forest& f) { return fl_yew(f); });
}

}  // namespace mzv
