#include "mzv/numeric.hpp"

#include <cmath>

#include "mzv/cones.hpp"
#include "mzv/errors.hpp"

namespace mzv {

long default_horizon(std::size_t depth) { return depth <= 3 ? 100000 : 20000; }

namespace {

double ipow(long n, long s) { return std::pow(static_cast<double>(n), -static_cast<double>(s)); }

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b, std::size_t limit) {
    std::size_t len = std::min(limit, a.size() + b.size() - 1);
    std::vector<double> c(len, 0.0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// g[m] = m^{-d} * sum_{n=1..N} h[m-n]: weights of a subtree whose descendant sum is m
std::vector<double> tzv_vertex(const Tree& t, long N) {
    std::vector<double> h{1.0};
    for (const auto& c : t.children().trees()) h = convolve(h, tzv_vertex(c, N), static_cast<std::size_t>(-1));
    std::vector<double> H(h.size() + 1, 0.0);
    for (std::size_t i = 0; i < h.size(); ++i) H[i + 1] = H[i] + h[i];
    std::size_t L = h.size() + static_cast<std::size_t>(N);
    std::vector<double> g(L, 0.0);
    for (std::size_t m = 1; m < L; ++m) {
        // sum of h[k] for k in [m-N, m-1] intersected with the support
        long hi = std::min<long>(static_cast<long>(m) - 1, static_cast<long>(h.size()) - 1);
        long lo = std::max<long>(static_cast<long>(m) - N, 0);
        if (hi < lo) continue;
        g[m] = ipow(static_cast<long>(m), t.root().value()) * (H[static_cast<std::size_t>(hi) + 1] - H[static_cast<std::size_t>(lo)]);
    }
    return g;
}

}  // namespace

NumericResult eval_mzv(const Word& w, std::optional<long> N, bool strict) {
    if (w.kind() == Kind::Bin) throw Error(ErrorKind::AlphabetMismatch, "eval_mzv expects a Nat word");
    if (!is_convergent(w)) throw Error(ErrorKind::Divergent, "divergent word " + to_string(w));
    long n = N.value_or(default_horizon(w.length()));
    if (n < 1) throw Error(ErrorKind::Domain, "horizon must be >= 1");
    NumericResult r{1.0, 0.0, n};
    if (w.empty()) return r;
    std::size_t M = 2 * static_cast<std::size_t>(n);
    std::vector<double> p(M + 1, 1.0), q(M + 1);
    for (std::size_t i = w.length(); i-- > 0;) {
        long s = w[i].value();
        q[0] = 0.0;
        for (std::size_t k = 1; k <= M; ++k) q[k] = q[k - 1] + ipow(static_cast<long>(k), s) * p[strict ? k - 1 : k];
        std::swap(p, q);
    }
    r.value = p[M];
    r.error = std::fabs(p[M] - p[static_cast<std::size_t>(n)]);
    return r;
}

NumericResult eval_binary(const Word& w, std::optional<long> N) {
    if (w.kind() == Kind::Nat) throw Error(ErrorKind::AlphabetMismatch, "eval_binary expects an {x,y} word");
    if (!is_convergent(w)) throw Error(ErrorKind::Divergent, "divergent word " + to_string(w));
    return eval_mzv(debinarize(w), N);
}

NumericResult eval_expr(const WordComb& e, std::optional<long> N, EvalCache* cache) {
    NumericResult r{0.0, 0.0, 0};
    for (const auto& [w, c] : e) {
        if (!is_convergent(w)) throw Error(ErrorKind::Divergent, "divergent word " + to_string(w) + " survives in the expression");
        Word nat = w.kind() == Kind::Bin ? debinarize(w) : w;
        long n = N.value_or(default_horizon(nat.length()));
        NumericResult t;
        if (cache) {
            auto key = std::make_pair(nat, n);
            auto it = cache->find(key);
            if (it == cache->end()) it = cache->emplace(key, eval_mzv(nat, n)).first;
            t = it->second;
        } else {
            t = eval_mzv(nat, n);
        }
        double cd = c.get_d();
        r.value += cd * t.value;
        r.error += std::fabs(cd) * t.error;
        if (r.horizon == 0 || (t.horizon != 0 && t.horizon < r.horizon)) r.horizon = t.horizon;
    }
    if (r.horizon == 0) r.horizon = N.value_or(0);
    return r;
}

double tzv_box_sum(const Forest& f, long N) {
    if (f.kind() == Kind::Bin) throw Error(ErrorKind::AlphabetMismatch, "tree zeta values need Nat decorations");
    if (N < 0) throw Error(ErrorKind::Domain, "horizon must be >= 0");
    double prod = 1.0;
    for (const auto& t : f.trees()) {
        double s = 0.0;
        for (double g : tzv_vertex(t, N)) s += g;
        prod *= s;
    }
    return prod;
}

NumericResult eval_tzv_direct(const Forest& f, long N) {
    if (f.kind() == Kind::Bin) throw Error(ErrorKind::AlphabetMismatch, "tree zeta values need Nat decorations");
    if (!is_convergent(f)) throw Error(ErrorKind::Divergent, "divergent forest " + to_string(f));
    if (N < 1) throw Error(ErrorKind::Domain, "horizon must be >= 1");
    double lo = tzv_box_sum(f, N), hi = tzv_box_sum(f, 2 * N);
    return {hi, std::fabs(hi - lo), N};
}

NumericResult eval_mt_direct(const std::vector<long>& s, long s0, long N) {
    if (s.empty() || s.size() > 3) throw Error(ErrorKind::Domain, "direct Mordell-Tornheim evaluation supports 1 to 3 arguments");
    for (long a : s)
        if (a < 0) throw Error(ErrorKind::Domain, "Mordell-Tornheim arguments must be >= 0");
    if (s0 < 0) throw Error(ErrorKind::Domain, "Mordell-Tornheim exponent must be >= 0");
    if (!mt_convergent(s, s0)) throw Error(ErrorKind::Divergent, "Mordell-Tornheim parameters fail the convergence criterion");
    if (N < 1) throw Error(ErrorKind::Domain, "horizon must be >= 1");
    std::size_t M = 2 * static_cast<std::size_t>(N);
    auto powers = [M](long e) {
        std::vector<double> f(M + 1, 0.0);
        for (std::size_t n = 1; n <= M; ++n) f[n] = ipow(static_cast<long>(n), e);
        return f;
    };
    std::vector<double> h = powers(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) h = convolve(h, powers(s[i]), M + 1);
    double lo = 0.0, hi = 0.0;
    for (std::size_t m = 1; m < h.size(); ++m) {
        hi += h[m] * ipow(static_cast<long>(m), s0);
        if (m == static_cast<std::size_t>(N)) lo = hi;
    }
    return {hi, std::fabs(hi - lo), N};
}

}  // namespace mzv
