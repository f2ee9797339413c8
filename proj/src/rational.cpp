#include "lps/rational.hpp"

#include "lps/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace lps {

namespace {

Integer parseInteger(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; }))
        throw InputError("malformed rational: '" + std::string(whole) + "'");
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(s, 10);
}

} // namespace

Rational makeRational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw InputError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parseRational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parseInteger(text, text));
    auto num = parseInteger(text.substr(0, slash), text);
    auto denText = text.substr(slash + 1);
    if (!denText.empty() && denText.front() == '-')
        throw InputError("malformed rational: '" + std::string(text) + "'");
    auto den = parseInteger(denText, text);
    if (den == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    return makeRational(num, den);
}

std::string toString(const Rational& value) { return value.get_str(); }

bool isInteger(const Rational& value) { return value.get_den() == 1; }

Integer floorOf(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer ceilOf(const Rational& value) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

std::int64_t toInt64(const Integer& value) {
    if (!value.fits_slong_p())
        throw OutOfRange("integer does not fit in 64 bits: " + value.get_str());
    return value.get_si();
}

Rational dot(const RVector& a, const RVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

RVector add(const RVector& a, const RVector& b) {
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

RVector sub(const RVector& a, const RVector& b) {
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

RVector scale(const RVector& a, const Rational& s) {
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] * s;
    return r;
}

RVector negate(const RVector& a) {
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

RVector zeros(std::size_t dim) { return RVector(dim, Rational(0)); }

RVector unitVector(std::size_t dim, std::size_t axis) {
    RVector r = zeros(dim);
    r.at(axis) = 1;
    return r;
}

RVector integerVector(const std::vector<std::int64_t>& coords) {
    RVector r;
    r.reserve(coords.size());
    for (auto c : coords)
        r.emplace_back(static_cast<long>(c));
    return r;
}

bool lexLess(const RVector& a, const RVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string toString(const RVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += toString(v[i]);
    }
    return s + ")";
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace lps
