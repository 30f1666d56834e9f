#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shamsuddin/bigrat.hpp"

namespace shamsuddin::detail {

inline std::string power(char var, int e) {
  std::string s(1, var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

/// Joins (coefficient, monomial) pairs already in print order into the
/// canonical text form: "x^2 - 3/2*y + 1". An empty monomial means 1.
inline std::string join_terms(const std::vector<std::pair<BigRat, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    BigRat mag = abs(c);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace shamsuddin::detail
