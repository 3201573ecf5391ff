#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "zfl/error.hpp"

namespace zfl {

using u128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(u128 value);
inline BigInt to_big(u128 value) {
  BigInt out = static_cast<std::uint64_t>(value >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(value);
  return out;
}

/// C(n, k) with C = 0 whenever k < 0, n < 0 or k > n.
BigInt binomial(long long n, long long k);

/// Same, in 128 bits; throws `Error(OutOfRange)` if the value does not fit.
u128 binomial_u128(long long n, long long k);

/// Parses "3/20", "0.15", "1", "1e-3" into an exact rational.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
std::string to_string(const Rational& r);

inline BigInt ipow(const BigInt& base, std::size_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

}  // namespace zfl
