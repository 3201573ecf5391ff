#include "zfl/exact.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace zfl {

std::string to_decimal(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

u128 binomial_u128(long long n, long long k) {
  BigInt b = binomial(n, k);
  if (b != 0 && boost::multiprecision::msb(b) >= 128)
    fail(ErrorCode::OutOfRange, "binomial C(" + std::to_string(n) + "," +
                                    std::to_string(k) + ") exceeds 128 bits");
  u128 out = 0;
  for (int shift = 96; shift >= 0; shift -= 32) {
    out = (out << 32) | static_cast<std::uint32_t>((b >> shift) & 0xffffffffu);
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  auto bad = [&]() -> Rational {
    fail(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
  };
  if (text.empty()) return bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    try {
      BigInt num(std::string(text.substr(0, slash)));
      BigInt den(std::string(text.substr(slash + 1)));
      if (den == 0) return bad();
      return Rational(num, den);
    } catch (const std::exception&) {
      return bad();
    }
  }
  // Decimal with optional exponent, converted digit by digit so 0.1 is 1/10.
  std::string_view s = text;
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto tail = s.substr(e + 1);
    if (!tail.empty() && tail.front() == '+') tail.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), exponent);
    if (ec != std::errc() || ptr != tail.data() + tail.size()) return bad();
    s = s.substr(0, e);
  }
  BigInt digits = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) return bad();
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      seen_digit = true;
      if (seen_point) --exponent;
    } else {
      return bad();
    }
  }
  if (!seen_digit) return bad();
  Rational r(digits);
  if (exponent > 0) r *= Rational(ipow(BigInt(10), static_cast<std::size_t>(exponent)));
  if (exponent < 0) r /= Rational(ipow(BigInt(10), static_cast<std::size_t>(-exponent)));
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace zfl
