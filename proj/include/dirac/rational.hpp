#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

#include "dirac/errors.hpp"

namespace dirac {

// All norms and pairings stay in exact rationals; no floating point anywhere.
using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p" or "p/q".
inline Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(text));
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw UsageError("rational with zero denominator: " + text);
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed rational: " + text);
  } catch (const std::out_of_range&) {
    throw UsageError("rational out of range: " + text);
  }
}

}  // namespace dirac
