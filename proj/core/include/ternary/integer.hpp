#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ternary {

/// Signed arbitrary-precision integer. Every scalar in the library is one of these.
using Integer = boost::multiprecision::cpp_int;

/// Precondition violated by the caller (bad coefficient, composite modulus, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that the construction guarantees turned out false. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Integer& n) { return n.str(); }

/// Parses an optionally signed decimal literal; throws InvalidArgument otherwise.
Integer parse_integer(std::string_view text);

}  // namespace ternary
