#include <functional>

#include "doctest.h"
#include "mzv/errors.hpp"
#include "mzv/partial_sums.hpp"

using namespace mzv;

namespace {

Forest F(const std::string& s) { return parse_forest(s); }
Word w(std::vector<long> v) { return Word::nat(v); }

struct Flat {
    std::vector<long> parent, dec;
};

Flat flatten_vertices(const Forest& f) {
    Flat out;
    std::function<void(const Forest&, long)> walk = [&](const Forest& g, long p) {
        for (const auto& t : g.trees()) {
            long id = static_cast<long>(out.parent.size());
            out.parent.push_back(p);
            out.dec.push_back(t.root().value());
            walk(t.children(), id);
        }
    };
    walk(f, -1);
    return out;
}

// every n : V -> [1,N], keeping the admissible ones
template <class Term>
Rational brute(const Forest& f, long N, Term&& term) {
    Flat fl = flatten_vertices(f);
    std::size_t V = fl.parent.size();
    std::vector<long> n(V, 1);
    Rational total = 0;
    while (true) {
        total += term(fl, n);
        std::size_t k = 0;
        while (k < V && n[k] == N) n[k++] = 1;
        if (k == V) break;
        ++n[k];
    }
    return total;
}

Rational brute_forest_sum(const Forest& f, long N, bool strict) {
    return brute(f, N, [&](const Flat& fl, const std::vector<long>& n) {
        Rational t = 1;
        for (std::size_t v = 0; v < n.size(); ++v) {
            if (fl.parent[v] >= 0) {
                long p = n[fl.parent[v]];
                if (strict ? n[v] >= p : n[v] > p) return Rational(0);
            }
            t *= inverse_power(n[v], fl.dec[v]);
        }
        return t;
    });
}

Rational brute_tzv_sum(const Forest& f, long N) {
    return brute(f, N, [&](const Flat& fl, const std::vector<long>& n) {
        std::vector<long> acc(n);
        for (std::size_t v = n.size(); v-- > 0;)
            if (fl.parent[v] >= 0) acc[fl.parent[v]] += acc[v];
        Rational t = 1;
        for (std::size_t v = 0; v < n.size(); ++v) t *= inverse_power(acc[v], fl.dec[v]);
        return t;
    });
}

Rational reduce(const WordComb& c, long N, bool strict) {
    Rational s = 0;
    for (const auto& [u, q] : c) s += q * word_sum(u, N, strict);
    return s;
}

}  // namespace

TEST_CASE("word sums") {
    CHECK(word_sum(w({2}), 3) == Rational(49, 36));
    CHECK(word_sum(w({1, 1}), 2) == Rational(1, 2));
    CHECK(word_sum(Word(), 7) == 1);
    CHECK(word_sum(Word(), 7, false) == 1);
    CHECK(word_sum(w({1, 1}), 2, false) == 1 + Rational(1, 2) + Rational(1, 4));
    CHECK(word_sum(w({3}), 0) == 0);
    CHECK_THROWS_AS(word_sum(Word::bin("xy"), 3), Error);
}

TEST_CASE("forest sums") {
    CHECK(forest_sum(F("2(1,1)"), 2) == Rational(1, 4));
    CHECK(forest_sum(Forest(), 5) == 1);
    CHECK(forest_sum(Forest(), 5, false) == 1);
    for (long N : {1, 4, 9}) {
        CHECK(forest_sum(ladder(w({3, 1, 2})), N) == word_sum(w({3, 1, 2}), N));
        CHECK(forest_sum(ladder(w({3, 1, 2})), N, false) == word_sum(w({3, 1, 2}), N, false));
    }
}

TEST_CASE("tree sums") {
    CHECK(tzv_sum(Forest(), 4) == 1);
    for (long s = 1; s <= 3; ++s) CHECK(tzv_sum(F(std::to_string(s)), 6) == word_sum(w({s}), 6));
    // a ladder tzv over [1,N]^2 sits between the word sums at horizons N and 2N
    for (long N : {3, 6, 10}) {
        Rational t = tzv_sum(F("ladder(2,1)"), N);
        CHECK(t >= word_sum(w({2, 1}), N));
        CHECK(t <= word_sum(w({2, 1}), 2 * N));
    }
}

TEST_CASE("forest and tree sums agree with brute force") {
    for (const auto& f : enumerate_forests(4, nat_letters(2)))
        for (long N : {1, 3, 8}) {
            CHECK(forest_sum(f, N, true) == brute_forest_sum(f, N, true));
            CHECK(forest_sum(f, N, false) == brute_forest_sum(f, N, false));
            if (N <= 3 || f.size() <= 3) CHECK(tzv_sum(f, N) == brute_tzv_sum(f, N));
        }
}

TEST_CASE("forest sums factor through flattening") {
    for (const auto& f : enumerate_forests(4, nat_letters(3))) {
        WordComb s = flatten(f, 1), a = flatten(f, -1);
        for (long N : {2, 7, 25}) {
            CHECK(forest_sum(f, N, true) == reduce(s, N, true));
            CHECK(forest_sum(f, N, false) == reduce(a, N, false));
        }
    }
}

TEST_CASE("forest sums are stuffle morphisms at finite horizon") {
    auto fs = enumerate_forests(3, nat_letters(2));
    ForestShuffler stuffle(1), anti(-1);
    for (const auto& f : fs)
        for (const auto& g : fs)
            for (long N : {3, 6}) {
                Rational prod = forest_sum(f, N) * forest_sum(g, N);
                Rational sum = 0;
                for (const auto& [h, c] : stuffle(f, g)) sum += c * forest_sum(h, N);
                CHECK(sum == prod);
                Rational prod_w = forest_sum(f, N, false) * forest_sum(g, N, false);
                Rational sum_w = 0;
                for (const auto& [h, c] : anti(f, g)) sum_w += c * forest_sum(h, N, false);
                CHECK(sum_w == prod_w);
            }
}

TEST_CASE("sums are nondecreasing in the horizon") {
    for (const auto& f : enumerate_forests(3, nat_letters(2))) {
        Rational prev_s = 0, prev_w = 0, prev_t = 0;
        for (long N = 1; N <= 6; ++N) {
            Rational s = forest_sum(f, N), ws = forest_sum(f, N, false), t = tzv_sum(f, N);
            CHECK(s >= prev_s);
            CHECK(ws >= prev_w);
            CHECK(t >= prev_t);
            prev_s = s;
            prev_w = ws;
            prev_t = t;
        }
    }
}
