#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dbraid {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// floor division / nonnegative remainder (cpp_int's operator/ truncates)
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

// reduce a rational into [0,1)
inline Rat mod_one(const Rat& x) {
  Int n = numerator(x), d = denominator(x);
  return Rat(mod_floor(n, d), d);
}

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string rat_to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace dbraid
