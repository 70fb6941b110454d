#include <algorithm>
#include <random>

#include "doctest.h"
#include "mzv/errors.hpp"
#include "mzv/forests.hpp"
#include "mzv/serialize.hpp"

using namespace mzv;

namespace {

Letter n(long v) { return Letter::nat(v); }
Forest F(const std::string& s) { return parse_forest(s); }
ForestComb C(const std::string& s) { return ForestComb(parse_forest(s)); }
Word w(std::vector<long> v) { return Word::nat(v); }

// random child order at every node, printed with the plain grammar
std::string scrambled(const Tree& t, std::mt19937& rng) {
    std::string s = to_string(t.root());
    if (t.children().empty()) return s;
    std::vector<Tree> kids = t.children().trees();
    std::shuffle(kids.begin(), kids.end(), rng);
    s += "(";
    for (std::size_t i = 0; i < kids.size(); ++i) s += (i ? "," : "") + scrambled(kids[i], rng);
    return s + ")";
}

std::string scrambled(const Forest& f, std::mt19937& rng) {
    if (f.empty()) return "()";
    std::vector<Tree> ts = f.trees();
    std::shuffle(ts.begin(), ts.end(), rng);
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? " " : "") + scrambled(ts[i], rng);
    return s;
}

ForestComb product(const ForestComb& a, const ForestComb& b) {
    return bilinear_extend(a, b, [](const Forest& f, const Forest& g) { return ForestComb(concat(f, g)); });
}

}  // namespace

TEST_CASE("grafting") {
    CHECK(Forest(b_plus(n(3), Forest())) == F("3"));
    CHECK(Forest(b_plus(n(1), F("2"))) == ladder(w({1, 2})));
    CHECK(b_plus(n(1), F("2 3")) == b_plus(n(1), F("3 2")));
    CHECK(b_plus(n(2), F("1 1")).size() == 3);
}

TEST_CASE("concatenation of forests") {
    CHECK(concat(Forest(), F("2(1)")) == F("2(1)"));
    CHECK(concat(F("1"), F("2")) == concat(F("2"), F("1")));
    CHECK(concat(F("1(2) 3"), F("4(1,1)")).size() == 6);
}

TEST_CASE("forest weight and size") {
    Forest f = F("2(1,3(1)) 4");
    CHECK(f.size() == 5);
    CHECK(f.weight() == 11);
    CHECK(f.num_trees() == 2);
}

TEST_CASE("text grammar") {
    CHECK(to_string(F("2(1,1)")) == "2(1,1)");
    CHECK(to_string(F("3(1)")) == "ladder(3,1)");
    CHECK(F("ladder(3,2,1)") == F("3(2(1))"));
    CHECK(to_string(Forest()) == "()");
    CHECK(F("()").empty());
    CHECK(to_string(F("2(1) 3")) == "3 ladder(2,1)");
    CHECK(F(to_string(F("1 ladder(2,3) 2(1,1)"))) == F("1 2(3) 2(1,1)"));
    CHECK(to_string(F("x(y,y)")) == "x(y,y)");
    CHECK_THROWS_AS(F("2(1"), Error);
    CHECK_THROWS_AS(F("0"), Error);
    CHECK_THROWS_AS(F("1(x)"), Error);
    CHECK_THROWS_AS(F("2(1))"), Error);
}

TEST_CASE("canonical form ignores child order") {
    std::mt19937 rng(3);
    for (const auto& f : enumerate_forests(5, nat_letters(3))) {
        CHECK(F(to_string(f)) == f);
        for (int k = 0; k < 3; ++k) CHECK(F(scrambled(f, rng)) == f);
    }
}

TEST_CASE("forest enumeration counts") {
    // rooted forests with one decoration: 1, 1, 2, 4, 9, 20 of sizes 0..5
    std::vector<int> count(6, 0);
    for (const auto& f : enumerate_forests(5, nat_letters(1))) ++count[f.size()];
    CHECK(count == std::vector<int>{1, 1, 2, 4, 9, 20});
    auto by_w = enumerate_forests(4, nat_letters(4), true);
    for (const auto& f : by_w) CHECK(f.weight() <= 4);
}

TEST_CASE("forest shuffle golden") {
    for (Rational lambda : {Rational(1), Rational(0), Rational(-2)}) {
        long a = 1, b = 2, c = 3;
        ForestComb e;
        e.add(concat(F("1"), ladder(w({b, c}))), Rational(1, 2));
        e.add(concat(F("1"), ladder(w({c, b}))), Rational(1, 2));
        e.add(F("1 5"), lambda / 2);
        e.add(concat(F("2"), ladder(w({a, c}))), Rational(1, 2));
        e.add(concat(F("2"), ladder(w({c, a}))), Rational(1, 2));
        e.add(F("2 4"), lambda / 2);
        CHECK(forest_shuffle(F("1 2"), F("3"), lambda) == e);
    }
    CHECK(format_forests(forest_shuffle(F("1 2"), F("3"), 1)) ==
          "1/2 (1 5) + 1/2 (2 4) + 1/2 (1 ladder(2,3)) + 1/2 (1 ladder(3,2)) + 1/2 (2 ladder(1,3)) + 1/2 (2 ladder(3,1))");
}

TEST_CASE("forest shuffle basics") {
    CHECK(forest_shuffle(F("4"), F("5"), 0) == C("4(5)") + C("5(4)"));
    CHECK(forest_shuffle(Forest(), F("2(1) 3"), 1) == C("2(1) 3"));
    CHECK(forest_shuffle(F("2(1)"), Forest(), -1) == C("2(1)"));
    CHECK(forest_shuffle(F("2"), F("3"), 1) == C("2(3)") + C("3(2)") + C("5"));
    CHECK_THROWS_AS(forest_shuffle(F("x"), F("y"), 1), Error);
}

TEST_CASE("forest shuffle is commutative") {
    auto fs = enumerate_forests(5, nat_letters(3));
    for (Rational lambda : {Rational(0), Rational(1)}) {
        ForestShuffler sh(lambda);
        for (const auto& f : fs)
            for (const auto& g : fs)
                if (f.size() + g.size() <= 6 && f <= g) CHECK(sh(f, g) == sh(g, f));
    }
}

TEST_CASE("forest shuffle is not associative") {
    // expanding the recursion by hand for four single vertices a, b, c, d
    ForestShuffler sh(0);
    long a = 1, b = 2, c = 3, d = 4;
    auto L = [](std::vector<long> v) { return ForestComb(ladder(Word::nat(v))); };
    auto V = [](long p) { return ForestComb(Forest(b_plus(Letter::nat(p), Forest()))); };
    auto six = [&](long r, long p, long q) {
        return L({r, p, q}) + L({r, q, p}) + L({p, r, q}) + L({p, q, r}) + L({q, r, p}) + L({q, p, r});
    };
    ForestComb lhs = sh(sh(C("1 2"), C("3")), C("4"));
    ForestComb rhs = sh(C("1 2"), sh(C("3"), C("4")));
    ForestComb diff = Rational(1, 4) * product(L({a, d}) + L({d, a}), L({b, c}) + L({c, b})) +
                      Rational(1, 4) * product(L({b, d}) + L({d, b}), L({a, c}) + L({c, a})) -
                      Rational(1, 4) * product(V(b), six(a, c, d)) - Rational(1, 4) * product(V(a), six(b, c, d));
    CHECK(lhs - rhs == diff);
    CHECK_FALSE(diff.empty());
}

TEST_CASE("operated fold") {
    auto fs = enumerate_forests(5, nat_letters(2));
    for (const auto& f : fs) {
        long size = operated_fold(
            f, 0L, [](long a, long b) { return a + b; }, [](Letter, long t) { return t + 1; });
        CHECK(size == static_cast<long>(f.size()));
    }
    for (Rational lambda : {Rational(0), Rational(1), Rational(-1)}) {
        WordShuffler sh(lambda);
        auto mul = [&](const WordComb& a, const WordComb& b) { return sh(a, b); };
        auto beta = [](Letter a, const WordComb& t) { return prepend(a, t); };
        for (const auto& f : fs) CHECK(operated_fold(f, WordComb(Word()), mul, beta) == flatten(f, lambda));
    }
    auto bin_beta = [](Letter a, const Forest& g) {
        Tree t = b_plus(Letter::y(), g);
        for (long i = 1; i < a.value(); ++i) t = b_plus(Letter::x(), Forest(t));
        return Forest(t);
    };
    auto cat = [](const Forest& f, const Forest& g) { return concat(f, g); };
    for (const auto& f : fs) CHECK(operated_fold(f, Forest(), cat, bin_beta) == branched_binarize(f));
}

TEST_CASE("map decorations") {
    Forest f = F("2(1,3) 1");
    CHECK(map_decorations(f, [](Letter a) { return a; }) == f);
    CHECK(map_decorations(F("1 2"), [](Letter a) { return Letter::nat(a.value() + 1); }) == F("2 3"));
    CHECK(map_decorations(f, [](Letter) { return Letter::nat(1); }).size() == f.size());
}

TEST_CASE("flattening examples") {
    CHECK(flatten(Forest(), 1) == WordComb(Word()));
    for (Rational lambda : {Rational(0), Rational(1), Rational(-1)})
        CHECK(flatten(ladder(w({3, 1, 2})), lambda) == WordComb(w({3, 1, 2})));
    CHECK(flatten(F("2(3,4)"), 0) == WordComb(w({2, 3, 4})) + WordComb(w({2, 4, 3})));
    CHECK(flatten(F("2(3,4)"), 1) == WordComb(w({2, 3, 4})) + WordComb(w({2, 4, 3})) + WordComb(w({2, 7})));
}

TEST_CASE("flattening is a shuffle morphism") {
    auto fs = enumerate_forests(5, nat_letters(2));
    for (Rational lambda : {Rational(-1), Rational(0), Rational(1), Rational(2)}) {
        ForestShuffler fsh(lambda);
        WordShuffler wsh(lambda);
        for (const auto& f : fs)
            for (const auto& g : fs) {
                if (f.size() + g.size() > 5) continue;
                CHECK(flatten(fsh(f, g), lambda) == wsh(flatten(f, lambda), flatten(g, lambda)));
            }
    }
}

TEST_CASE("flattening keeps convergence") {
    for (const auto& f : enumerate_forests(5, nat_letters(3))) {
        if (!is_convergent(f)) continue;
        for (Rational lambda : {Rational(0), Rational(1)})
            for (const auto& [u, c] : flatten(f, lambda)) CHECK(is_convergent(u));
    }
}

TEST_CASE("branched binarization") {
    CHECK(branched_binarize(F("1")) == F("y"));
    CHECK(branched_binarize(F("2")) == F("x(y)"));
    CHECK(branched_binarize(F("1(1,2)")) == F("y(y,x(y))"));
    CHECK(branched_debinarize(F("y")) == F("1"));
    CHECK(branched_debinarize(F("x(y)")) == F("2"));
    CHECK_THROWS_AS(branched_debinarize(F("x")), Error);
    CHECK_THROWS_AS(branched_debinarize(F("x(y,y)")), Error);
    for (const auto& f : enumerate_forests(5, nat_letters(3))) {
        Forest b = branched_binarize(f);
        CHECK(branched_debinarize(b) == f);
        CHECK(static_cast<long>(b.size()) == f.weight());
        if (is_convergent(f)) CHECK(is_convergent(b));
    }
}

TEST_CASE("forest convergence") {
    CHECK(is_convergent(F("2(1,1)")));
    CHECK_FALSE(is_convergent(F("1")));
    CHECK(is_convergent(F("x(y)")));
    CHECK_FALSE(is_convergent(F("y")));
    CHECK_FALSE(is_convergent(F("x(x)")));
    CHECK(is_convergent(Forest()));
}

TEST_CASE("forest combination JSON round trip") {
    ForestComb c = forest_shuffle(F("1 2"), F("3(1)"), 1);
    CHECK(forest_comb_from_json(Json::parse(to_json(c).dump())) == c);
}
