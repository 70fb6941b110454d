#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzv/lincomb.hpp"

namespace mzv {

enum class Kind { Empty, Nat, Bin };

// Nat letters are codes >= 1; x and y are negative codes so that x < y.
class Letter {
public:
    constexpr Letter() = default;
    static Letter nat(long n);
    static constexpr Letter x() { return Letter(-2); }
    static constexpr Letter y() { return Letter(-1); }

    bool is_nat() const { return code_ > 0; }
    bool is_bin() const { return code_ < 0; }
    bool is_x() const { return code_ == -2; }
    bool is_y() const { return code_ == -1; }
    long value() const { return code_; }
    Kind kind() const { return is_nat() ? Kind::Nat : Kind::Bin; }

    friend constexpr auto operator<=>(Letter, Letter) = default;

private:
    constexpr explicit Letter(long c) : code_(c) {}
    long code_ = 1;
};

Letter add_letters(Letter a, Letter b);
std::string to_string(Letter a);
Letter parse_letter(const std::string& s);

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    static Word nat(const std::vector<long>& values);
    static Word bin(const std::string& xy);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Kind kind() const { return empty() ? Kind::Empty : letters_.front().kind(); }
    long weight() const;
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    Word suffix(std::size_t from) const;
    std::vector<long> values() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<Letter> letters_;
};

using WordComb = LinComb<Word>;

Kind common_kind(Kind a, Kind b);  // throws on mismatch

Word concat(const Word& w, const Word& v);
Word prepend(Letter a, const Word& w);
WordComb prepend(Letter a, const WordComb& c);

WordComb shuffle(const Word& w, const Word& v);
WordComb lambda_shuffle(const Word& w, const Word& v, const Rational& lambda);

// memoized lambda-shuffle; one instance per computation
class WordShuffler {
public:
    explicit WordShuffler(Rational lambda = 0) : lambda_(std::move(lambda)) {}
    const Rational& lambda() const { return lambda_; }
    WordComb operator()(const Word& w, const Word& v);
    WordComb operator()(const WordComb& a, const WordComb& b);

private:
    Rational lambda_;
    std::map<std::pair<Word, Word>, WordComb> memo_;
};

bool is_convergent(const Word& w);

Word binarize(const Word& w);
Word debinarize(const Word& w);
WordComb binarize(const WordComb& c);
WordComb debinarize(const WordComb& c);

// "[2,1,1]" for Nat, "xyy" for Bin, "[]" for empty
std::string to_string(const Word& w);
Word parse_word(const std::string& s);

}  // namespace mzv
