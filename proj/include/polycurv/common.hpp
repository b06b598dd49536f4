#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace polycurv {

// Exact arithmetic types used wherever a positivity or equality decision must
// not depend on floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Every precondition or data failure throws one of these with the operation
// name and a concrete witness in the message, so the CLI can report failures
// without a stack trace.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& op, const std::string& what) {
    throw Error(op + ": " + what);
}

}  // namespace polycurv
