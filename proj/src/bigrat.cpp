#include "shamsuddin/bigrat.hpp"

#include <cctype>
#include <stdexcept>

namespace shamsuddin {

BigRat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  return make_rat(n, d);
}

std::string to_string(const BigRat& r) { return r.get_str(); }

}  // namespace shamsuddin
