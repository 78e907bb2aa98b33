#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "dirac/errors.hpp"
#include "dirac/rational.hpp"

namespace dirac {

// A (half-integral) weight in the fundamental-weight basis, stored as the
// integer coordinates of 2*lambda so every half-integral weight is exact.
using Weight = std::vector<long long>;

inline Weight add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Weight negate(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Weight scale(long long k, const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

// Integral weight: every fundamental-weight coordinate is an integer.
inline bool is_integral(const Weight& a) {
  for (long long x : a)
    if (x % 2 != 0) return false;
  return true;
}

inline bool is_dominant_weight(const Weight& a) {
  for (long long x : a)
    if (x < 0) return false;
  return true;
}

// Build a doubled-coordinate weight from plain integer coordinates.
inline Weight from_integral(const std::vector<long long>& coords) {
  Weight r(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) r[i] = 2 * coords[i];
  return r;
}

// Renders actual (possibly half-integral) coordinates, e.g. "1,1/2,-3".
inline std::string format_weight(const Weight& a) {
  std::ostringstream out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out << ',';
    out << to_string(Rat(a[i], 2));
  }
  return out.str();
}

// Renders the doubled integer coordinates, e.g. "2,1,-6".
inline std::string format_doubled(const Weight& a) {
  std::ostringstream out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out << ',';
    out << a[i];
  }
  return out.str();
}

// Parses comma-separated actual coordinates, each "p" or "p/2".
inline Weight parse_weight(const std::string& text) {
  Weight r;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw UsageError("empty weight coordinate in: " + text);
    Rat v = parse_rational(tok);
    Rat doubled = v * 2;
    if (doubled.denominator() != 1)
      throw UsageError("weight coordinate not half-integral: " + tok);
    r.push_back(doubled.numerator());
  }
  if (r.empty()) throw UsageError("empty weight: " + text);
  return r;
}

// Parses comma-separated doubled integer coordinates.
inline Weight parse_doubled(const std::string& text) {
  Weight r;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw UsageError("empty coordinate in: " + text);
    try {
      r.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw UsageError("malformed integer coordinate: " + tok);
    }
  }
  if (r.empty()) throw UsageError("empty weight: " + text);
  return r;
}

}  // namespace dirac
