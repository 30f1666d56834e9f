#pragma once

// Sparse bivariate polynomials over the rationals, k[x,y] with k = Q.
//
// Terms are kept in graded-lex order, highest first (total degree, then the
// x exponent), so iteration order is also the canonical print order and the
// first term is the leading term.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "shamsuddin/bigrat.hpp"
#include "shamsuddin/upoly.hpp"

namespace shamsuddin {

enum class Var { x, y };

inline Var other(Var v) { return v == Var::x ? Var::y : Var::x; }
inline char name(Var v) { return v == Var::x ? 'x' : 'y'; }

struct Monomial {
  int x = 0;
  int y = 0;

  int total() const { return x + y; }
  int exponent(Var v) const { return v == Var::x ? x : y; }
  bool divides(const Monomial& m) const { return x <= m.x && y <= m.y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.x > b.x;
  }
};

class BPoly {
 public:
  using TermMap = std::map<Monomial, BigRat, GradedLexGreater>;

  BPoly() = default;
  /// Zero coefficients are dropped.
  explicit BPoly(TermMap terms);

  static BPoly constant(const BigRat& c);
  static BPoly monomial(const BigRat& c, int x_exp, int y_exp);
  static BPoly x() { return monomial(BigRat(1), 1, 0); }
  static BPoly y() { return monomial(BigRat(1), 0, 1); }
  /// Embeds a univariate polynomial as a polynomial in `v`.
  static BPoly from_upoly(const UPoly& u, Var v = Var::x);

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  BigRat coeff(int x_exp, int y_exp) const;
  BigRat constant_term() const { return coeff(0, 0); }

  /// Total degree, or std::nullopt for zero.
  std::optional<int> degree() const;
  std::optional<int> degree_in(Var v) const;
  bool involves(Var v) const;

  /// The polynomial as a univariate one in `v`, if the other variable is absent.
  std::optional<UPoly> as_upoly(Var v) const;
  /// Coefficient of v^k, a univariate polynomial in the other variable.
  UPoly coefficient_of(Var v, int k) const;
  BPoly homogeneous_part(int total_degree) const;

  BigRat evaluate(const BigRat& x, const BigRat& y) const;

  BPoly pow(unsigned e) const;

  BPoly operator-() const;
  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  BPoly& operator*=(const BigRat& c);

  friend BPoly operator+(BPoly p, const BPoly& q) { return p += q; }
  friend BPoly operator-(BPoly p, const BPoly& q) { return p -= q; }
  friend BPoly operator*(const BPoly& p, const BPoly& q);
  friend BPoly operator*(BPoly p, const BigRat& c) { return p *= c; }
  friend BPoly operator*(const BigRat& c, BPoly p) { return p *= c; }
  friend bool operator==(const BPoly& p, const BPoly& q) { return p.terms_ == q.terms_; }

 private:
  TermMap terms_;
};

/// Deterministic total order: compares term lists in canonical order.
std::strong_ordering compare(const BPoly& p, const BPoly& q);

BPoly partial(const BPoly& p, Var v);

/// Image of p under the ring endomorphism x -> img_x, y -> img_y.
BPoly substitute(const BPoly& p, const BPoly& img_x, const BPoly& img_y);

/// Quotient h with p = h*q, or std::nullopt when q does not divide p.
/// Throws OperationError("division by zero polynomial") when q = 0.
std::optional<BPoly> exact_divide(const BPoly& p, const BPoly& q);

/// Canonical text: graded-lex order, explicit '*', e.g. "x*y - 1".
std::string to_string(const BPoly& p);
std::ostream& operator<<(std::ostream& os, const BPoly& p);

}  // namespace shamsuddin
