#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace bsg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational ratio(const BigInt& p, const BigInt& q) { return Rational(p, q); }

BigInt pow(const BigInt& base, unsigned exponent);
Rational pow(const Rational& base, unsigned exponent);
BigInt pow2(unsigned exponent);

/// Smallest integer >= q.
BigInt ceil(const Rational& q);
/// Largest integer <= q.
BigInt floor(const Rational& q);

/// "p" for integers, "p/q" otherwise; always in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p", "-p" or "p/q" with decimal digits only. Decimal points,
/// exponents and zero denominators are rejected.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

/// Decimal approximation for human-facing output only.
std::string approx_decimal(const Rational& q, int digits = 6);

}  // namespace bsg
