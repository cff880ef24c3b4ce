#pragma once

// Exact 128-bit cost arithmetic with overflow detection.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polytri {

/// Node weight. Always strictly positive.
using Weight = std::uint64_t;

/// Triangle and triangulation weights. Signed so that -1 can serve as a
/// memo sentinel; legitimate costs are never negative.
using Cost = __int128;

class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

namespace checked {

inline Cost add(Cost a, Cost b) {
  Cost out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("cost addition overflows 128 bits");
  return out;
}

inline Cost mul(Cost a, Cost b) {
  Cost out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("cost multiplication overflows 128 bits");
  return out;
}

}  // namespace checked

inline std::string to_string(Cost value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  // Work in unsigned space so the minimum value does not overflow on negation.
  unsigned __int128 magnitude = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                         : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

/// Parses a base-10 integer into a Cost; throws std::invalid_argument on junk.
inline Cost parse_cost(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  bool negative = text.front() == '-';
  if (negative) text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("bare sign");
  Cost value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("not an integer: " + std::string(text));
    value = checked::add(checked::mul(value, 10), c - '0');
  }
  return negative ? -value : value;
}

inline Cost gcd(Cost a, Cost b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Cost r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// Exact nonnegative-denominator rational, always stored reduced.
struct Fraction {
  Cost num = 0;
  Cost den = 1;

  static Fraction make(Cost n, Cost d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Cost g = gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return to_string(num) + "/" + to_string(den); }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return checked::mul(a.num, b.den) < checked::mul(b.num, a.den);
  }
};

}  // namespace polytri
