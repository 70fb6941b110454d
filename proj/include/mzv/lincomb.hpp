#pragma once

#include <map>
#include <type_traits>
#include <utility>

#include "mzv/rational.hpp"

namespace mzv {

// Finite Q-linear combination over an ordered basis; zero coefficients are never stored.
template <class B>
class LinComb {
public:
    using Terms = std::map<B, Rational>;
    using const_iterator = typename Terms::const_iterator;

    LinComb() = default;
    explicit LinComb(const B& b, const Rational& c = 1) { add(b, c); }

    void add(const B& b, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Terms& terms() const { return terms_; }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= c;
        return *this;
    }

    // adds c * o without a temporary
    void axpy(const Rational& c, const LinComb& o) {
        if (c == 0) return;
        for (const auto& [b, d] : o.terms_) add(b, c * d);
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

template <class B>
LinComb<B> lc_add(const LinComb<B>& a, const LinComb<B>& b) { return a + b; }

template <class B>
LinComb<B> lc_scale(const LinComb<B>& a, const Rational& c) { return c * a; }

// linear extension of f : B -> LinComb<B2>
template <class B, class F>
auto linear_extend(const LinComb<B>& a, F&& f) -> std::remove_cvref_t<decltype(f(std::declval<const B&>()))> {
    std::remove_cvref_t<decltype(f(std::declval<const B&>()))> out;
    for (const auto& [b, c] : a) out.axpy(c, f(b));
    return out;
}

// linear extension of a basis map f : B -> B2
template <class B2, class B, class F>
LinComb<B2> map_basis(const LinComb<B>& a, F&& f) {
    LinComb<B2> out;
    for (const auto& [b, c] : a) out.add(f(b), c);
    return out;
}

// bilinear extension of f : B x B' -> LinComb<B2>
template <class B, class B1, class F>
auto bilinear_extend(const LinComb<B>& a, const LinComb<B1>& b, F&& f)
    -> std::remove_cvref_t<decltype(f(std::declval<const B&>(), std::declval<const B1&>()))> {
    std::remove_cvref_t<decltype(f(std::declval<const B&>(), std::declval<const B1&>()))> out;
    for (const auto& [u, c] : a)
        for (const auto& [v, d] : b) out.axpy(c * d, f(u, v));
    return out;
}

}  // namespace mzv
