#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace packlab {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  return r.str();  // "p/q" or "p"
}

Rational parse_rational(const std::string& s);

}  // namespace packlab
