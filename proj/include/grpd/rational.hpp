#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace grpd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown on malformed external input (JSON, flags). CLI exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a brute-force bound is exceeded. CLI exit code 3.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an identity the library guarantees fails to hold.
// Always indicates a construction bug. CLI exit code 4.
struct theorem_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Renders "a/b", or just "a" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den <= 0) throw parse_error("rational denominator must be positive: " + s);
    return Rational(num, den);
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("malformed rational: " + s);
  }
}

inline bool is_p_local_integer(const Rational& q, long p) {
  return denominator(q) % p != 0;
}

}  // namespace grpd
