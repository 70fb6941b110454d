#include "mzv/cones.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mzv/errors.hpp"
#include "mzv/upsilon.hpp"

namespace mzv {

bool Cone::unimodular() const {
    for (const auto& row : A)
        for (long a : row)
            if (a != 0 && a != 1) return false;
    return true;
}

namespace {

std::size_t rank(const IntMatrix& A) {
    std::vector<std::vector<Rational>> m;
    for (const auto& row : A) {
        std::vector<Rational> r;
        for (long a : row) r.emplace_back(a);
        m.push_back(std::move(r));
    }
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace

void validate(const Cone& c) {
    std::size_t n = c.A.size();
    if (n == 0) throw Error(ErrorKind::Domain, "cone matrix is empty");
    for (const auto& row : c.A)
        if (row.size() != n) throw Error(ErrorKind::Domain, "cone matrix is not square");
    if (c.s.size() != n) throw Error(ErrorKind::Domain, "decoration vector length differs from the matrix size");
    for (long d : c.s)
        if (d < 1) throw Error(ErrorKind::Domain, "cone decorations must be >= 1");
    if (rank(c.A) != n) throw Error(ErrorKind::Domain, "cone matrix rows are linearly dependent");
}

BoolMatrix poset_of_cone(const Cone& c) {
    validate(c);
    std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (c.A[i] == c.A[j])
                throw Error(ErrorKind::NotAPoset, "rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
    BoolMatrix le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k) ok = c.A[i][k] - c.A[j][k] >= 0;
            le[i][j] = ok;
        }
    return le;
}

bool is_poset_compatible(const Cone& c) {
    BoolMatrix le = poset_of_cone(c);
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j)
            if (c.A[i][j] != 0 && !le[i][j]) return false;
    return true;
}

BoolMatrix second_representing_matrix(const Cone& c) {
    BoolMatrix le = poset_of_cone(c);
    std::size_t n = c.dim();
    BoolMatrix b(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !le[i][j]) continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k)
                if (k != i && k != j && le[i][k] && le[k][j]) cover = false;
            b[i][j] = cover;
        }
    return b;
}

bool is_tree_like(const Cone& c) {
    validate(c);
    if (!c.unimodular()) throw Error(ErrorKind::Unsupported, "only cones with 0/1 representing matrices are supported");
    if (!is_poset_compatible(c)) return false;
    BoolMatrix b = second_representing_matrix(c);
    for (std::size_t j = 0; j < c.dim(); ++j) {
        int nz = 0;
        for (std::size_t i = 0; i < c.dim(); ++i) nz += b[i][j];
        if (nz > 1) return false;
    }
    return true;
}

Forest psi(const Cone& c) {
    if (!is_tree_like(c)) throw Error(ErrorKind::NotTreeLike, "cone is not tree-like");
    std::size_t n = c.dim();
    BoolMatrix b = second_representing_matrix(c);
    std::vector<long> parent(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (b[i][j]) parent[j] = static_cast<long>(i);

    // the labeled Hasse forest must have A as its path matrix
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool anc = false;
            for (long k = static_cast<long>(j); k >= 0 && !anc; k = parent[static_cast<std::size_t>(k)]) anc = k == static_cast<long>(i);
            if (anc != (c.A[i][j] == 1))
                throw Error(ErrorKind::NotTreeLike, "cone matrix is not the path matrix of its Hasse forest");
        }

    auto build = [&](auto&& self, std::size_t v) -> Tree {
        std::vector<Tree> kids;
        for (std::size_t j = 0; j < n; ++j)
            if (parent[j] == static_cast<long>(v)) kids.push_back(self(self, j));
        return b_plus(Letter::nat(c.s[v]), Forest(std::move(kids)));
    };
    std::vector<Tree> roots;
    for (std::size_t v = 0; v < n; ++v)
        if (parent[v] < 0) roots.push_back(build(build, v));
    return Forest(std::move(roots));
}

Cone phi(const Forest& f) {
    if (f.kind() == Kind::Bin) throw Error(ErrorKind::AlphabetMismatch, "phi expects Nat decorations");
    std::vector<long> dec, parent;
    auto visit = [&](auto&& self, const Tree& t, long par) -> void {
        long id = static_cast<long>(dec.size());
        dec.push_back(t.root().value());
        parent.push_back(par);
        for (const auto& ch : t.children().trees()) self(self, ch, id);
    };
    for (const auto& t : f.trees()) visit(visit, t, -1);
    std::size_t n = dec.size();
    Cone c{IntMatrix(n, std::vector<long>(n, 0)), dec};
    for (std::size_t j = 0; j < n; ++j)
        for (long k = static_cast<long>(j); k >= 0; k = parent[static_cast<std::size_t>(k)]) c.A[static_cast<std::size_t>(k)][j] = 1;
    return c;
}

WordComb czv_reduce(const Cone& c, Route route) {
    Forest f = psi(c);
    if (!is_convergent(f)) throw Error(ErrorKind::Divergent, "forest " + to_string(f) + " of the cone is not convergent");
    if (route == Route::A) return fl_yew(f);
    return flatten(branched_binarize(f), 0);
}

bool mt_convergent(std::vector<long> s, long s0) {
    std::sort(s.begin(), s.end());
    long acc = s0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        acc += s[k];
        if (acc <= static_cast<long>(k + 1)) return false;
    }
    return true;
}

namespace {

Word bin_letter(long s) { return binarize(Word::nat({s})); }

class MTReducer {
public:
    WordComb operator()(const std::vector<long>& v, long t) {
        auto key = std::make_pair(v, t);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        WordComb out;
        long zeros = std::count(v.begin(), v.end(), 0L);
        if (v.size() == 1) {
            out = WordComb(bin_letter(v[0] + t));
        } else if (zeros == 1) {
            WordShuffler sh;
            WordComb acc{bin_letter(v[1])};
            for (std::size_t j = 2; j < v.size(); ++j) acc = sh(acc, WordComb(bin_letter(v[j])));
            Word head = bin_letter(t);
            out = map_basis<Word>(acc, [&head](const Word& w) { return concat(head, w); });
        } else if (zeros == 0) {
            // (n_1+...+n_r)/(n_1+...+n_r) = 1 lowers one s_i and raises s
            for (std::size_t i = 0; i < v.size();) {
                std::size_t i2 = i;
                while (i2 < v.size() && v[i2] == v[i]) ++i2;
                std::vector<long> w = v;
                --w[i];
                out.axpy(static_cast<long>(i2 - i), (*this)(w, t + 1));
                i = i2;
            }
        } else {
            throw Error(ErrorKind::Unsupported, "Mordell-Tornheim values with more than one zero argument are not supported");
        }
        memo_.emplace(std::move(key), out);
        return out;
    }

private:
    std::map<std::pair<std::vector<long>, long>, WordComb> memo_;
};

}  // namespace

MTReduction mt_reduce(const std::vector<long>& s, long s0) {
    if (s.empty()) throw Error(ErrorKind::Domain, "Mordell-Tornheim value needs at least one argument");
    if (s0 < 0) throw Error(ErrorKind::Domain, "Mordell-Tornheim exponent must be >= 0");
    for (long a : s)
        if (a < 0) throw Error(ErrorKind::Domain, "Mordell-Tornheim arguments must be >= 0");
    if (!mt_convergent(s, s0)) throw Error(ErrorKind::Divergent, "Mordell-Tornheim parameters fail the convergence criterion");
    MTReduction r;
    r.perm.resize(s.size());
    std::iota(r.perm.begin(), r.perm.end(), 0);
    std::stable_sort(r.perm.begin(), r.perm.end(), [&s](std::size_t a, std::size_t b) { return s[a] < s[b]; });
    std::vector<long> sorted;
    for (auto p : r.perm) sorted.push_back(s[p]);
    r.expr = MTReducer()(sorted, s0);
    return r;
}

}  // namespace mzv
