#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lps {

// mpq_class keeps every value canonical (lowest terms, positive denominator)
// after arithmetic; values built from raw numerator/denominator pairs go
// through makeRational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;
using RVector = std::vector<Rational>;

Rational makeRational(const Integer& num, const Integer& den);

/// Parses "k", "-k" or "p/q". Throws InputError on malformed text or q == 0.
Rational parseRational(std::string_view text);

/// "p/q" in lowest terms, or "k" when the denominator is 1.
std::string toString(const Rational& value);

bool isInteger(const Rational& value);
Integer floorOf(const Rational& value);
Integer ceilOf(const Rational& value);
std::int64_t toInt64(const Integer& value);

Rational dot(const RVector& a, const RVector& b);
RVector add(const RVector& a, const RVector& b);
RVector sub(const RVector& a, const RVector& b);
RVector scale(const RVector& a, const Rational& s);
RVector negate(const RVector& a);
RVector zeros(std::size_t dim);
RVector unitVector(std::size_t dim, std::size_t axis);
RVector integerVector(const std::vector<std::int64_t>& coords);

bool lexLess(const RVector& a, const RVector& b);
std::string toString(const RVector& v);

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(unsigned n);

} // namespace lps
