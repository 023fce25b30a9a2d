#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "riordan/errors.hpp"

namespace riordan {

// Exact arithmetic over Q. mpq keeps values canonical: lowest terms,
// positive denominator, so equality is plain value equality.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Truncated integer n-th root is exact GMP machinery; returns the root only
// when v is a perfect n-th power. Negative v is allowed for odd n.
inline std::optional<Integer> exact_nth_root(const Integer& v, unsigned n) {
    if (n == 0) return std::nullopt;
    if (n == 1) return v;
    if (v < 0 && n % 2 == 0) return std::nullopt;
    Integer root;
    const int exact = mpz_root(root.backend().data(), v.backend().data(), n);
    if (!exact) return std::nullopt;
    return root;
}

inline std::optional<Rational> exact_nth_root(const Rational& v, unsigned n) {
    const auto num = exact_nth_root(numerator(v), n);
    if (!num) return std::nullopt;
    const auto den = exact_nth_root(denominator(v), n);
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p", "-p", "p/q", "-p/q" with base-10 digits; q > 0 after parsing.
inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    const auto bad = [&] { throw SyntaxError("invalid rational '" + s + "'", 0); };
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
    if (digits == 0) bad();
    Integer num(s.substr(0, pos));
    if (pos == s.size()) return Rational(num);
    if (s[pos] != '/') bad();
    ++pos;
    const std::size_t den_start = pos;
    digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
    if (digits == 0 || pos != s.size()) bad();
    Integer den(s.substr(den_start));
    if (den == 0) bad();
    return Rational(num, den);
}

}  // namespace riordan
