#include "mzv/partial_sums.hpp"

#include <map>

#include "mzv/errors.hpp"

namespace mzv {

Rational inverse_power(long n, long s) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s));
    return Rational(Integer(1), p);
}

namespace {

void require_nat(Kind k, const char* what) {
    if (k == Kind::Bin) throw Error(ErrorKind::AlphabetMismatch, std::string(what) + " needs Nat letters");
}

void require_horizon(long N) {
    if (N < 0) throw Error(ErrorKind::Domain, "horizon must be >= 0");
}

// P(M) = sum_{n<=M} n^{-s} prev(n-1) (strict) or prev(n), for M = 0..N
std::vector<Rational> sum_operator(long s, const std::vector<Rational>& prev, bool strict) {
    std::vector<Rational> out(prev.size());
    out[0] = 0;
    for (std::size_t n = 1; n < prev.size(); ++n)
        out[n] = out[n - 1] + inverse_power(static_cast<long>(n), s) * prev[strict ? n - 1 : n];
    return out;
}

}  // namespace

Rational word_sum(const Word& w, long N, bool strict) {
    require_nat(w.kind(), "word_sum");
    require_horizon(N);
    std::vector<Rational> p(static_cast<std::size_t>(N) + 1, Rational(1));
    for (std::size_t i = w.length(); i-- > 0;) p = sum_operator(w[i].value(), p, strict);
    return p.back();
}

Rational word_sum(const WordComb& c, long N, bool strict) {
    Rational s = 0;
    for (const auto& [w, q] : c) s += q * word_sum(w, N, strict);
    return s;
}

Rational forest_sum(const Forest& f, long N, bool strict) {
    require_nat(f.kind(), "forest_sum");
    require_horizon(N);
    using Seq = std::vector<Rational>;
    Seq unit(static_cast<std::size_t>(N) + 1, Rational(1));
    Seq r = operated_fold(
        f, unit,
        [](const Seq& a, const Seq& b) {
            Seq c(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * b[i];
            return c;
        },
        [strict](Letter w, const Seq& t) { return sum_operator(w.value(), t, strict); });
    return r.back();
}

Rational tzv_sum(const Forest& f, long N) {
    require_nat(f.kind(), "tzv_sum");
    require_horizon(N);
    // flatten to parent pointers in preorder
    std::vector<long> dec;
    std::vector<long> parent;
    auto visit = [&](auto&& self, const Tree& t, long par) -> void {
        long id = static_cast<long>(dec.size());
        dec.push_back(t.root().value());
        parent.push_back(par);
        for (const auto& c : t.children().trees()) self(self, c, id);
    };
    for (const auto& t : f.trees()) visit(visit, t, -1);
    std::size_t V = dec.size();
    if (V == 0) return 1;
    if (N == 0) return 0;

    std::map<std::pair<long, long>, Rational> pow_cache;
    auto ipow = [&](long n, long s) -> const Rational& {
        auto key = std::make_pair(n, s);
        auto it = pow_cache.find(key);
        if (it == pow_cache.end()) it = pow_cache.emplace(key, inverse_power(n, s)).first;
        return it->second;
    };

    std::vector<long> n(V, 1), sub(V);
    Rational total = 0;
    while (true) {
        // children have larger preorder ids, so a reverse pass accumulates subtree sums
        for (std::size_t v = 0; v < V; ++v) sub[v] = n[v];
        for (std::size_t v = V; v-- > 0;)
            if (parent[v] >= 0) sub[static_cast<std::size_t>(parent[v])] += sub[v];
        Rational term = 1;
        for (std::size_t v = 0; v < V; ++v) term *= ipow(sub[v], dec[v]);
        total += term;
        std::size_t k = 0;
        while (k < V && n[k] == N) n[k++] = 1;
        if (k == V) break;
        ++n[k];
    }
    return total;
}

}  // namespace mzv
