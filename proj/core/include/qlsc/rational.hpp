#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <string>
#include <string_view>

// Exact-match rational/integer equality for Boost 1.74 under C++20.
namespace boost {
inline bool operator==(const rational<long long>& a, int b) { return a == rational<long long>(b); }
inline bool operator==(const rational<long long>& a, long long b) { return a == rational<long long>(b); }
inline bool operator!=(const rational<long long>& a, int b) { return !(a == rational<long long>(b)); }
inline bool operator!=(const rational<long long>& a, long long b) { return !(a == rational<long long>(b)); }
}  // namespace boost

namespace qlsc {

using Rational = boost::rational<long long>;

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

long long floor_of(const Rational& r);
long long ceil_of(const Rational& r);

std::string to_string(const Rational& r);

// Accepts "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace qlsc
