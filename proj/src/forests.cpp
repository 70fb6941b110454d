#include "mzv/forests.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "mzv/errors.hpp"

namespace mzv {

Tree::Tree(Letter root, const Forest& children) {
    common_kind(root.kind(), children.kind());
    node_ = std::make_shared<const TreeNode>(TreeNode{root, children, children.size() + 1});
}

Letter Tree::root() const { return node_->root; }
const Forest& Tree::children() const { return node_->children; }
std::size_t Tree::size() const { return node_->size; }

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.root() <=> b.root(); c != 0) return c;
    const auto& x = a.children().trees();
    const auto& y = b.children().trees();
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    std::sort(trees_.begin(), trees_.end());
    Kind k = Kind::Empty;
    for (const auto& t : trees_) {
        k = common_kind(k, t.kind());
        size_ += t.size();
    }
}

long Forest::weight() const {
    long w = 0;
    for (const auto& t : trees_) {
        if (!t.root().is_nat()) throw Error(ErrorKind::Domain, "weight is defined on Nat forests only");
        w += t.root().value() + t.children().weight();
    }
    return w;
}

Forest Forest::without(std::size_t i) const {
    Forest f;
    f.trees_ = trees_;
    f.trees_.erase(f.trees_.begin() + static_cast<long>(i));
    f.size_ = size_ - trees_[i].size();
    return f;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                                  b.trees_.end());
}

Tree b_plus(Letter a, const Forest& f) { return Tree(a, f); }

ForestComb b_plus(Letter a, const ForestComb& c) {
    return map_basis<Forest>(c, [a](const Forest& f) { return Forest(b_plus(a, f)); });
}

Forest concat(const Forest& f, const Forest& g) {
    if (f.empty()) return g;
    if (g.empty()) return f;
    std::vector<Tree> ts = f.trees();
    ts.insert(ts.end(), g.trees().begin(), g.trees().end());
    return Forest(std::move(ts));
}

ForestComb concat(const ForestComb& c, const Forest& g) {
    return map_basis<Forest>(c, [&g](const Forest& f) { return concat(f, g); });
}

Forest ladder(const Word& w) {
    Forest f;
    for (std::size_t i = w.length(); i-- > 0;) f = Forest(b_plus(w[i], f));
    return f;
}

std::optional<Word> as_ladder_word(const Forest& f) {
    std::vector<Letter> ls;
    const Forest* cur = &f;
    while (!cur->empty()) {
        if (!cur->is_tree()) return std::nullopt;
        ls.push_back(cur->trees()[0].root());
        cur = &cur->trees()[0].children();
    }
    return Word(std::move(ls));
}

ForestComb ForestShuffler::trees(const Tree& t, const Tree& u) {
    ForestComb out = b_plus(t.root(), (*this)(t.children(), Forest(u)));
    out += b_plus(u.root(), (*this)(Forest(t), u.children()));
    if (lambda_ != 0)
        out.axpy(lambda_, b_plus(add_letters(t.root(), u.root()), (*this)(t.children(), u.children())));
    return out;
}

ForestComb ForestShuffler::operator()(const Forest& f, const Forest& g) {
    Kind k = common_kind(f.kind(), g.kind());
    if (k == Kind::Bin && lambda_ != 0)
        throw Error(ErrorKind::UnsupportedSemigroup, "forest lambda-shuffle with lambda != 0 needs Nat decorations");
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

ForestComb ForestShuffler::operator()(const ForestComb& a, const ForestComb& b) {
    return bilinear_extend(a, b, [this](const Forest& f, const Forest& g) { return (*this)(f, g); });
}

ForestComb forest_shuffle(const Forest& f, const Forest& g, const Rational& lambda) {
    return ForestShuffler(lambda)(f, g);
}

WordComb flatten(const Forest& f, const Rational& lambda) {
    if (f.kind() == Kind::Bin && lambda != 0)
        throw Error(ErrorKind::UnsupportedSemigroup, "flattening with lambda != 0 needs Nat decorations");
    WordShuffler sh(lambda);
    WordComb unit{Word()};
    return operated_fold(
        f, unit, [&sh](const WordComb& a, const WordComb& b) { return sh(a, b); },
        [](Letter a, const WordComb& t) { return prepend(a, t); });
}

WordComb flatten(const ForestComb& c, const Rational& lambda) {
    return linear_extend(c, [&lambda](const Forest& f) { return flatten(f, lambda); });
}

Forest branched_binarize(const Forest& f) {
    if (f.kind() == Kind::Bin) throw Error(ErrorKind::AlphabetMismatch, "branched binarization expects Nat decorations");
    return operated_fold(
        f, Forest(), [](const Forest& a, const Forest& b) { return concat(a, b); },
        [](Letter n, const Forest& g) {
            Forest t(b_plus(Letter::y(), g));
            for (long i = 1; i < n.value(); ++i) t = Forest(b_plus(Letter::x(), t));
            return t;
        });
}

namespace {

std::string path_string(const std::vector<std::size_t>& path) {
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "." : "") + std::to_string(path[i]);
    return s;
}

Forest debin(const Forest& f, std::vector<std::size_t>& path);

Tree debin_tree(const Tree& t, std::vector<std::size_t>& path) {
    long n = 1;
    const Tree* cur = &t;
    std::size_t depth = path.size();
    while (cur->root().is_x()) {
        if (cur->children().num_trees() != 1)
            throw Error(ErrorKind::NotInImage, "vertex " + path_string(path) + " is decorated x but has " +
                                                   std::to_string(cur->children().num_trees()) + " children");
        cur = &cur->children().trees()[0];
        path.push_back(0);
        ++n;
    }
    Tree out = b_plus(Letter::nat(n), debin(cur->children(), path));
    path.resize(depth);
    return out;
}

Forest debin(const Forest& f, std::vector<std::size_t>& path) {
    std::vector<Tree> ts;
    for (std::size_t i = 0; i < f.num_trees(); ++i) {
        path.push_back(i);
        ts.push_back(debin_tree(f.trees()[i], path));
        path.pop_back();
    }
    return Forest(std::move(ts));
}

}  // namespace

Forest branched_debinarize(const Forest& f) {
    if (f.kind() == Kind::Nat) throw Error(ErrorKind::AlphabetMismatch, "branched debinarization expects {x,y} decorations");
    std::vector<std::size_t> path;
    return debin(f, path);
}

ForestComb branched_binarize(const ForestComb& c) {
    return map_basis<Forest>(c, [](const Forest& f) { return branched_binarize(f); });
}

ForestComb branched_debinarize(const ForestComb& c) {
    return map_basis<Forest>(c, [](const Forest& f) { return branched_debinarize(f); });
}

namespace {
bool bin_vertices_ok(const Tree& t) {
    std::size_t k = t.children().num_trees();
    if (k != 1 && !t.root().is_y()) return false;
    for (const auto& c : t.children().trees())
        if (!bin_vertices_ok(c)) return false;
    return true;
}
}  // namespace

bool is_convergent(const Forest& f, bool semi) {
    for (const auto& t : f.trees()) {
        if (t.root().is_nat()) {
            if (t.root().value() < 2) return false;
            continue;
        }
        if (!semi && !t.root().is_x()) return false;
        if (!bin_vertices_ok(t)) return false;
    }
    return true;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Forest forest() {
        skip();
        if (at_end()) return Forest();
        if (s_.compare(pos_, 2, "()") == 0) {
            pos_ += 2;
            skip();
            expect_end();
            return Forest();
        }
        std::vector<Tree> ts;
        while (true) {
            ts.push_back(tree());
            skip();
            if (at_end()) break;
        }
        return make_forest(std::move(ts));
    }

private:
    Tree tree() {
        skip();
        if (s_.compare(pos_, 6, "ladder") == 0) {
            pos_ += 6;
            skip();
            take('(');
            std::vector<Letter> ls{decoration()};
            skip();
            while (peek() == ',') {
                ++pos_;
                ls.push_back(decoration());
                skip();
            }
            take(')');
            Word w;
            try {
                w = Word(std::move(ls));
            } catch (const Error& e) {
                throw parse_error(e.what());
            }
            return ladder(w).trees()[0];
        }
        Letter d = decoration();
        skip();
        std::vector<Tree> kids;
        if (peek() == '(') {
            ++pos_;
            skip();
            if (peek() != ')') {
                kids.push_back(tree());
                skip();
                while (peek() == ',') {
                    ++pos_;
                    kids.push_back(tree());
                    skip();
                }
            }
            take(')');
        }
        try {
            return b_plus(d, Forest(std::move(kids)));
        } catch (const Error& e) {
            throw parse_error(e.what());
        }
    }

    Letter decoration() {
        skip();
        std::size_t start = pos_;
        if (peek() == 'x' || peek() == 'y') {
            ++pos_;
        } else {
            while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        if (start == pos_) fail("expected a decoration");
        return parse_letter(s_.substr(start, pos_ - start));
    }

    Forest make_forest(std::vector<Tree> ts) {
        try {
            return Forest(std::move(ts));
        } catch (const Error& e) {
            throw parse_error(e.what());
        }
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void take(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void expect_end() {
        if (!at_end()) fail("trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("forest '" + s_ + "': " + msg + " at offset " + std::to_string(pos_));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(const std::string& s) { return Parser(s).forest(); }

std::string to_string(const Tree& t) {
    std::string s = to_string(t.root());
    const auto& kids = t.children().trees();
    if (kids.empty()) return s;
    s += "(";
    for (std::size_t i = 0; i < kids.size(); ++i) s += (i ? "," : "") + to_string(kids[i]);
    return s + ")";
}

std::string to_string(const Forest& f) {
    if (f.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < f.num_trees(); ++i) {
        const Tree& t = f.trees()[i];
        if (i) s += " ";
        auto w = as_ladder_word(Forest(t));
        if (t.size() >= 2 && w) {
            s += "ladder(";
            for (std::size_t j = 0; j < w->length(); ++j) s += (j ? "," : "") + to_string((*w)[j]);
            s += ")";
        } else {
            s += to_string(t);
        }
    }
    return s;
}

std::vector<Letter> nat_letters(long max_dec) {
    std::vector<Letter> ls;
    for (long d = 1; d <= max_dec; ++d) ls.push_back(Letter::nat(d));
    return ls;
}

std::vector<Forest> enumerate_forests(int max_cost, const std::vector<Letter>& decorations, bool by_weight) {
    auto cost = [by_weight](Letter d) { return by_weight ? static_cast<int>(d.value()) : 1; };
    std::vector<std::vector<Tree>> trees(static_cast<std::size_t>(max_cost) + 1);
    std::vector<std::vector<Forest>> forests(static_cast<std::size_t>(max_cost) + 1);
    forests[0].push_back(Forest());

    for (int c = 1; c <= max_cost; ++c) {
        for (Letter d : decorations) {
            int rest = c - cost(d);
            if (rest < 0) continue;
            for (const auto& f : forests[static_cast<std::size_t>(rest)]) trees[static_cast<std::size_t>(c)].push_back(b_plus(d, f));
        }
        // multisets of trees of total cost c, picked in nondecreasing pool order
        std::vector<std::pair<int, Tree>> pool;
        for (int k = 1; k <= c; ++k)
            for (const auto& t : trees[static_cast<std::size_t>(k)]) pool.emplace_back(k, t);
        std::vector<Tree> cur;
        std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
            if (left == 0) {
                forests[static_cast<std::size_t>(c)].push_back(Forest(cur));
                return;
            }
            for (std::size_t i = start; i < pool.size(); ++i) {
                if (pool[i].first > left) continue;
                cur.push_back(pool[i].second);
                rec(i, left - pool[i].first);
                cur.pop_back();
            }
        };
        rec(0, c);
    }
    std::vector<Forest> all;
    for (auto& fs : forests) all.insert(all.end(), fs.begin(), fs.end());
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace mzv
