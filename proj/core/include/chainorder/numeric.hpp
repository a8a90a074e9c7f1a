#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainorder {

using Int = boost::multiprecision::cpp_int;
// Canonical form (reduced, positive denominator) is maintained by the backend.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Serialized as decimal-free "p/q" (plain "p" when q = 1).
inline std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(num, den);
}

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// gcd of absolute values of all entries; 0 for the zero vector.
inline Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = int_gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

// Divides out the content so the first nonzero entry keeps its sign.
inline void make_primitive(std::vector<Int>& v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
}

inline Int factorial(unsigned k) {
  Int f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace chainorder
