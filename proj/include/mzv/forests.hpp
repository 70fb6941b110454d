#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzv/lincomb.hpp"
#include "mzv/words.hpp"

namespace mzv {

class Forest;
struct TreeNode;

// Immutable decorated rooted tree with shared structure; children kept in canonical order.
class Tree {
public:
    Tree(Letter root, const Forest& children);

    Letter root() const;
    const Forest& children() const;
    std::size_t size() const;
    Kind kind() const { return root().kind(); }

    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
    friend bool operator==(const Tree& a, const Tree& b) { return (a <=> b) == 0; }

private:
    std::shared_ptr<const TreeNode> node_;
};

// Canonical multiset of trees.
class Forest {
public:
    Forest() = default;
    explicit Forest(std::vector<Tree> trees);
    explicit Forest(const Tree& t) : trees_{t}, size_(t.size()) {}

    const std::vector<Tree>& trees() const { return trees_; }
    std::size_t num_trees() const { return trees_.size(); }
    std::size_t size() const { return size_; }
    bool empty() const { return trees_.empty(); }
    bool is_tree() const { return trees_.size() == 1; }
    Kind kind() const { return empty() ? Kind::Empty : trees_.front().kind(); }
    long weight() const;

    Forest without(std::size_t i) const;

    friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);
    friend bool operator==(const Forest& a, const Forest& b) { return (a <=> b) == 0; }

private:
    std::vector<Tree> trees_;
    std::size_t size_ = 0;
};

struct TreeNode {
    Letter root;
    Forest children;
    std::size_t size;
};

using ForestComb = LinComb<Forest>;

Tree b_plus(Letter a, const Forest& f);
ForestComb b_plus(Letter a, const ForestComb& c);
Forest concat(const Forest& f, const Forest& g);
ForestComb concat(const ForestComb& c, const Forest& g);

Forest ladder(const Word& w);
std::optional<Word> as_ladder_word(const Forest& f);  // nullopt unless empty or a single ladder

template <class Phi>
Forest map_decorations(const Forest& f, Phi&& phi) {
    std::vector<Tree> ts;
    for (const auto& t : f.trees())
        ts.push_back(b_plus(phi(t.root()), map_decorations(t.children(), phi)));
    return Forest(std::move(ts));
}

namespace detail {
template <class T, class Mul, class Beta>
struct Folder {
    const T& unit;
    Mul& mul;
    Beta& beta;
    std::map<Tree, T> memo;

    T forest(const Forest& f) {
        if (f.empty()) return unit;
        T acc = tree(f.trees()[0]);
        for (std::size_t i = 1; i < f.num_trees(); ++i) acc = mul(acc, tree(f.trees()[i]));
        return acc;
    }
    T tree(const Tree& t) {
        if (auto it = memo.find(t); it != memo.end()) return it->second;
        T v = beta(t.root(), forest(t.children()));
        memo.emplace(t, v);
        return v;
    }
};
}  // namespace detail

// Unique operated-algebra morphism: unit on the empty forest, mul on concatenation, beta on grafting.
template <class T, class Mul, class Beta>
T operated_fold(const Forest& f, const T& unit, Mul&& mul, Beta&& beta) {
    detail::Folder<T, std::remove_reference_t<Mul>, std::remove_reference_t<Beta>> folder{unit, mul, beta, {}};
    return folder.forest(f);
}

class ForestShuffler {
public:
    explicit ForestShuffler(Rational lambda = 0) : lambda_(std::move(lambda)) {}
    ForestComb operator()(const Forest& f, const Forest& g);
    ForestComb operator()(const ForestComb& a, const ForestComb& b);

private:
    ForestComb trees(const Tree& t, const Tree& u);
    Rational lambda_;
    std::map<std::pair<Forest, Forest>, ForestComb> memo_;
};

ForestComb forest_shuffle(const Forest& f, const Forest& g, const Rational& lambda);

WordComb flatten(const Forest& f, const Rational& lambda);
WordComb flatten(const ForestComb& c, const Rational& lambda);

Forest branched_binarize(const Forest& f);
Forest branched_debinarize(const Forest& f);
ForestComb branched_binarize(const ForestComb& c);
ForestComb branched_debinarize(const ForestComb& c);

bool is_convergent(const Forest& f, bool semi = false);

// Forest := Tree {" " Tree} | "()" ; Tree := Dec ["(" Tree {"," Tree} ")"] ; also "ladder(a,b,...)"
Forest parse_forest(const std::string& s);
std::string to_string(const Tree& t);
std::string to_string(const Forest& f);

// All forests of cost <= max_cost over the given decorations, in canonical order.
// Cost is the vertex count, or the total weight when by_weight is set.
std::vector<Forest> enumerate_forests(int max_cost, const std::vector<Letter>& decorations, bool by_weight = false);
std::vector<Letter> nat_letters(long max_dec);

// sum over i<k, j<n of w * (prod(T_i, t_j)) * rest, with w = 1/(k n)
template <class TreeProduct>
ForestComb concatenation_clause(const Forest& f, const Forest& g, TreeProduct&& prod) {
    ForestComb out;
    const auto& ft = f.trees();
    const auto& gt = g.trees();
    Rational w(1, static_cast<long>(ft.size() * gt.size()));
    for (std::size_t i = 0; i < ft.size();) {
        std::size_t i2 = i;
        while (i2 < ft.size() && ft[i2] == ft[i]) ++i2;
        Forest frest = f.without(i);
        for (std::size_t j = 0; j < gt.size();) {
            std::size_t j2 = j;
            while (j2 < gt.size() && gt[j2] == gt[j]) ++j2;
            Rational mult = w * static_cast<long>((i2 - i) * (j2 - j));
            out.axpy(mult, concat(prod(ft[i], gt[j]), concat(frest, g.without(j))));
            j = j2;
        }
        i = i2;
    }
    return out;
}

}  // namespace mzv
