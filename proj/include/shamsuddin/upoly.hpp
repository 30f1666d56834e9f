#pragma once

// Dense univariate polynomials over the rationals.

#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "shamsuddin/bigrat.hpp"

namespace shamsuddin {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients indexed by exponent, lowest first. Trailing zeros are dropped.
  explicit UPoly(std::vector<BigRat> coeffs);

  static UPoly constant(const BigRat& c);
  static UPoly monomial(const BigRat& c, int exponent);
  static UPoly variable() { return monomial(BigRat(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Degree, or std::nullopt for the zero polynomial.
  std::optional<int> degree() const;

  /// Coefficient of x^i; zero outside the stored range.
  const BigRat& coeff(int i) const;
  /// Leading coefficient; zero for the zero polynomial.
  const BigRat& leading() const;
  std::span<const BigRat> coefficients() const { return coeffs_; }

  BigRat operator()(const BigRat& x) const;

  UPoly derivative() const;
  /// Antiderivative with zero constant term.
  UPoly antiderivative() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const BigRat& c);

  friend UPoly operator+(UPoly p, const UPoly& q) { return p += q; }
  friend UPoly operator-(UPoly p, const UPoly& q) { return p -= q; }
  friend UPoly operator*(const UPoly& p, const UPoly& q);
  friend UPoly operator*(UPoly p, const BigRat& c) { return p *= c; }
  friend UPoly operator*(const BigRat& c, UPoly p) { return p *= c; }
  friend bool operator==(const UPoly& p, const UPoly& q) = default;

 private:
  void normalize();

  std::vector<BigRat> coeffs_;
};

/// Euclidean division p = q*d + r with deg r < deg d. Throws OperationError on d = 0.
std::pair<UPoly, UPoly> divmod(const UPoly& p, const UPoly& d);

/// Monic gcd; zero when both inputs are zero.
UPoly gcd(UPoly p, UPoly q);

/// a(x + c), expanded.
UPoly shift_univariate(const UPoly& a, const BigRat& c);

/// Content-free integer representative: the primitive integer polynomial
/// proportional to p, with positive leading coefficient.
std::vector<BigInt> primitive_integer_coefficients(const UPoly& p);

/// Prints in the same grammar as bivariate polynomials, using `var` as the name.
std::string format_upoly(const UPoly& p, char var = 'x');

std::ostream& operator<<(std::ostream& os, const UPoly& p);

}  // namespace shamsuddin
