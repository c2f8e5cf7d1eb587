#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace klbm {

// All scalar arithmetic in this library is exact: arbitrary-precision
// integers and rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline Int to_int(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("to_int: not an integer: " + r.str());
  return rat_num(r);
}

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace klbm
