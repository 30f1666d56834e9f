#pragma once

// Simplicity of Shamsuddin derivations d/dx + (a y + b) d/dy.
//
// Such a derivation is simple exactly when the first-order linear equation
// r' = a r + b has no polynomial solution r in k[x]. When a solution exists,
// y - r spans an invariant ideal: D(y - r) = a y + b - (a r + b) = a (y - r).

#include <optional>
#include <variant>

#include "shamsuddin/derivation.hpp"
#include "shamsuddin/upoly.hpp"

namespace shamsuddin {

struct OdeSolution {
  UPoly r;
  friend bool operator==(const OdeSolution&, const OdeSolution&) = default;
};
struct NoSolution {
  friend bool operator==(const NoSolution&, const NoSolution&) = default;
};
using OdeVerdict = std::variant<OdeSolution, NoSolution>;

struct Simple {
  friend bool operator==(const Simple&, const Simple&) = default;
};
struct NotSimple {
  DarbouxWitness witness;
  friend bool operator==(const NotSimple&, const NotSimple&) = default;
};
using SimplicityVerdict = std::variant<Simple, NotSimple>;

inline bool has_solution(const OdeVerdict& v) { return std::holds_alternative<OdeSolution>(v); }
inline bool is_simple(const SimplicityVerdict& v) { return std::holds_alternative<Simple>(v); }

/// r' - a r - b == 0 exactly.
bool solves_ode(const UPoly& r, const UPoly& a, const UPoly& b);

/// Polynomial solutions of r' = a r + b.
///
/// a = 0: the antiderivative of b with zero constant term. a != 0, b = 0: r = 0.
/// Otherwise a nonzero solution has deg r = deg b - deg a (the leading term of
/// a r must cancel b since deg r' < deg a r), so the coefficients are
/// determined top-down and the low-order equations are checked last.
/// For a != 0 the solution is unique.
OdeVerdict solve_linear_ode(const UPoly& a, const UPoly& b);

/// Independent check: for each degree 0..max_deg, sets up r with undetermined
/// coefficients and solves the dense linear system by exact Gaussian
/// elimination, free unknowns set to zero. Returns the first solution found.
OdeVerdict ode_brute_oracle(const UPoly& a, const UPoly& b, int max_deg);

SimplicityVerdict shamsuddin_is_simple(const ShamsuddinForm& sf);

}  // namespace shamsuddin
