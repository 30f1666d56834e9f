#pragma once

// Text format for polynomials, derivations and polynomial maps.
//
//   poly       := term (('+' | '-') term)*
//   term       := unary (('*' | '/') unary)*      division only by nonzero constants
//   unary      := ('+' | '-') unary | power
//   power      := primary ('^' INTEGER)?
//   primary    := INTEGER | 'x' | 'y' | '(' poly ')'
//   derivation := 'dx' '=' poly ';' 'dy' '=' poly [';']          (either order)
//              |  'shamsuddin' 'a' '=' poly ';' 'b' '=' poly [';']  (a, b free of y)
//   map        := '(' poly ',' poly ')'
//
// Multiplication is always explicit: "2*x", never "2x".

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shamsuddin/bpoly.hpp"
#include "shamsuddin/derivation.hpp"
#include "shamsuddin/poly_map.hpp"

namespace shamsuddin {

/// Byte range [start, end) into the parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span) : std::runtime_error(message), span_(span) {}
  const SourceSpan& span() const { return span_; }
  std::string message() const { return what(); }

 private:
  SourceSpan span_;
};

/// Largest exponent literal and largest total degree the parser will build.
inline constexpr int kMaxParsedDegree = 1000;

BPoly parse_poly(std::string_view text);
Derivation parse_derivation(std::string_view text);
PolyMap parse_map(std::string_view text);

std::string format(const BPoly& p);
std::string format(const UPoly& p, char var = 'x');
std::string format(const Derivation& d);
std::string format(const PolyMap& m);

/// "message at 3..5" followed by the input and a caret line under the span.
std::string render(const ParseError& e, std::string_view text);

}  // namespace shamsuddin
