#include "mzv/rational.hpp"

#include <cctype>

#include "mzv/errors.hpp"

namespace mzv {

std::string to_string(const Rational& q) { return q.get_str(); }

static bool is_int_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int_literal(num) || !is_int_literal(den) || den[0] == '-' || den[0] == '+')
        throw parse_error("bad rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw parse_error("zero denominator in '" + s + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

Integer binomial(long n, long k) {
    Integer r;
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace mzv
