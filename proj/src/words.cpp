#include "mzv/words.hpp"

#include <algorithm>
#include <cctype>

#include "mzv/errors.hpp"

namespace mzv {

Letter Letter::nat(long n) {
    if (n < 1) throw Error(ErrorKind::Domain, "Nat letters must be >= 1, got " + std::to_string(n));
    return Letter(n);
}

Letter add_letters(Letter a, Letter b) {
    if (!a.is_nat() || !b.is_nat())
        throw Error(ErrorKind::UnsupportedSemigroup, "letters x,y carry no semigroup structure");
    return Letter::nat(a.value() + b.value());
}

std::string to_string(Letter a) {
    if (a.is_x()) return "x";
    if (a.is_y()) return "y";
    return std::to_string(a.value());
}

Letter parse_letter(const std::string& s) {
    if (s == "x") return Letter::x();
    if (s == "y") return Letter::y();
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw parse_error("bad letter '" + s + "'");
    long n = std::stol(s);
    if (n < 1) throw parse_error("Nat letters must be >= 1, got '" + s + "'");
    return Letter::nat(n);
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const auto& l : letters_)
        if (l.kind() != letters_.front().kind())
            throw Error(ErrorKind::AlphabetMismatch, "word mixes Nat and {x,y} letters");
}

Word Word::nat(const std::vector<long>& values) {
    std::vector<Letter> ls;
    ls.reserve(values.size());
    for (long v : values) ls.push_back(Letter::nat(v));
    return Word(std::move(ls));
}

Word Word::bin(const std::string& xy) {
    std::vector<Letter> ls;
    for (char c : xy) {
        if (c == 'x') ls.push_back(Letter::x());
        else if (c == 'y') ls.push_back(Letter::y());
        else throw parse_error(std::string("bad binary letter '") + c + "'");
    }
    return Word(std::move(ls));
}

long Word::weight() const {
    long w = 0;
    for (const auto& l : letters_) {
        if (!l.is_nat()) throw Error(ErrorKind::Domain, "weight is defined on Nat words only");
        w += l.value();
    }
    return w;
}

Word Word::suffix(std::size_t from) const {
    Word r;
    r.letters_.assign(letters_.begin() + static_cast<long>(from), letters_.end());
    return r;
}

std::vector<long> Word::values() const {
    std::vector<long> v;
    for (const auto& l : letters_) v.push_back(l.value());
    return v;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
}

Kind common_kind(Kind a, Kind b) {
    if (a == Kind::Empty) return b;
    if (b == Kind::Empty || a == b) return a;
    throw Error(ErrorKind::AlphabetMismatch, "cannot combine Nat and {x,y} alphabets");
}

Word concat(const Word& w, const Word& v) {
    common_kind(w.kind(), v.kind());
    std::vector<Letter> ls = w.letters();
    ls.insert(ls.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(ls));
}

Word prepend(Letter a, const Word& w) {
    std::vector<Letter> ls;
    ls.reserve(w.length() + 1);
    ls.push_back(a);
    ls.insert(ls.end(), w.letters().begin(), w.letters().end());
    return Word(std::move(ls));
}

WordComb prepend(Letter a, const WordComb& c) {
    return map_basis<Word>(c, [a](const Word& w) { return prepend(a, w); });
}

WordComb WordShuffler::operator()(const Word& w, const Word& v) {
    Kind k = common_kind(w.kind(), v.kind());
    if (k == Kind::Bin && lambda_ != 0)
        throw Error(ErrorKind::UnsupportedSemigroup, "lambda-shuffle with lambda != 0 needs Nat letters");
    if (w.empty()) return WordComb(v);
    if (v.empty()) return WordComb(w);

    auto key = w < v ? std::make_pair(w, v) : std::make_pair(v, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Word w1 = w.suffix(1), v1 = v.suffix(1);
    WordComb out = prepend(w[0], (*this)(w1, v));
    out += prepend(v[0], (*this)(w, v1));
    if (lambda_ != 0) out.axpy(lambda_, prepend(add_letters(w[0], v[0]), (*this)(w1, v1)));
    memo_.emplace(std::move(key), out);
    return out;
}

WordComb WordShuffler::operator()(const WordComb& a, const WordComb& b) {
    return bilinear_extend(a, b, [this](const Word& u, const Word& v) { return (*this)(u, v); });
}

WordComb shuffle(const Word& w, const Word& v) { return WordShuffler(0)(w, v); }

WordComb lambda_shuffle(const Word& w, const Word& v, const Rational& lambda) {
    return WordShuffler(lambda)(w, v);
}

bool is_convergent(const Word& w) {
    if (w.empty()) return true;
    if (w.kind() == Kind::Nat) return w[0].value() >= 2;
    return w[0].is_x() && w[w.length() - 1].is_y();
}

Word binarize(const Word& w) {
    if (w.kind() == Kind::Bin) throw Error(ErrorKind::AlphabetMismatch, "binarize expects a Nat word");
    std::vector<Letter> ls;
    for (const auto& l : w.letters()) {
        for (long i = 1; i < l.value(); ++i) ls.push_back(Letter::x());
        ls.push_back(Letter::y());
    }
    return Word(std::move(ls));
}

Word debinarize(const Word& w) {
    if (w.kind() == Kind::Nat) throw Error(ErrorKind::AlphabetMismatch, "debinarize expects an {x,y} word");
    std::vector<long> vals;
    long run = 0;
    for (const auto& l : w.letters()) {
        ++run;
        if (l.is_y()) {
            vals.push_back(run);
            run = 0;
        }
    }
    if (run != 0) throw Error(ErrorKind::NotInImage, "word " + to_string(w) + " ends in x; not a binarized word");
    return Word::nat(vals);
}

WordComb binarize(const WordComb& c) {
    return map_basis<Word>(c, [](const Word& w) { return binarize(w); });
}

WordComb debinarize(const WordComb& c) {
    return map_basis<Word>(c, [](const Word& w) { return debinarize(w); });
}

std::string to_string(const Word& w) {
    if (w.kind() == Kind::Bin) {
        std::string s;
        for (const auto& l : w.letters()) s += to_string(l);
        return s;
    }
    std::string s = "[";
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) s += ",";
        s += to_string(w[i]);
    }
    return s + "]";
}

Word parse_word(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "[]") return Word();
    if (s.find_first_not_of("xy") == std::string::npos) return Word::bin(s);
    if (s.front() == '[') {
        if (s.back() != ']') throw parse_error("unterminated word '" + raw + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<Letter> ls;
    std::size_t pos = 0;
    while (true) {
        auto comma = s.find(',', pos);
        ls.push_back(parse_letter(s.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return Word(std::move(ls));
    } catch (const Error& e) {
        throw parse_error(e.what());
    }
}

}  // namespace mzv
