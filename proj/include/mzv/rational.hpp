#pragma once

#include <gmpxx.h>

#include <string>

namespace mzv {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is 1
std::string to_string(const Rational& q);

// accepts "p", "-p", "p/q"; normalizes
Rational parse_rational(const std::string& s);

Integer binomial(long n, long k);

}  // namespace mzv
