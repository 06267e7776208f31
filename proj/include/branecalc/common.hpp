#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace branecalc {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline constexpr const char* kEngineVersion = "0.1.0";

/// Bad user input: malformed files, violated preconditions, mismatched algebras.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A structural check failed on data the engine built itself (d^2 != 0,
/// a section that is not a section, an unsolvable lift). These indicate a
/// convention mismatch or an insufficient truncation degree.
struct verify_error : std::runtime_error {
  explicit verify_error(const std::string& what) : std::runtime_error(what) {}
};

/// Renders p/q with q > 0 and gcd(|p|,q) = 1; "p" alone when q = 1.
inline std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace branecalc
