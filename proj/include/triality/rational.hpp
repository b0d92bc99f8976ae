// Exact arithmetic aliases and rational parsing/formatting helpers.
// All engine arithmetic is exact: no floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <sstream>
#include <string>

namespace triality {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Renders p/q, or just p when q == 1.
inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Accepts "p", "-p", "p/q"; no decimals by design.
inline std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (char c : s)
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) return std::nullopt;
    return Rat(p, q);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace triality
