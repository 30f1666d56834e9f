#pragma once

// Elimination and root extraction on top of the UPoly/BPoly arithmetic.

#include <vector>

#include "shamsuddin/bigrat.hpp"
#include "shamsuddin/bpoly.hpp"
#include "shamsuddin/upoly.hpp"

namespace shamsuddin {

/// Resultant of p and q with respect to `eliminate`, as a polynomial in the
/// surviving variable.
///
/// Sign convention: the value is lc(q)^deg(p) times the product of p over the
/// roots of q (the Sylvester determinant with q's rows on top), so that
/// resultant(y^2 - x, y - 1, y) = 1 - x and resultant(y, y - 1, y) = 1.
/// Computed by fraction-free (Bareiss) elimination after clearing
/// denominators. Throws OperationError("no elimination variable") when both
/// inputs are constant in `eliminate`, and on zero inputs.
UPoly resultant(const BPoly& p, const BPoly& q, Var eliminate);

/// The distinct rational roots of u, ascending. Throws OperationError("identically zero") on u = 0.
std::vector<BigRat> rational_roots(const UPoly& u);

/// Positive divisors of |n| (n != 0), ascending.
std::vector<BigInt> positive_divisors(const BigInt& n);

}  // namespace shamsuddin
