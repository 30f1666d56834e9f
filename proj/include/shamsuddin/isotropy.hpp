#pragma once

// Automorphisms commuting with a derivation.
//
// For a simple Shamsuddin derivation the commuting group is trivial;
// shamsuddin_isotropy() replays that argument on a concrete (a, b) and
// re-checks every polynomial identity it relies on. brute_force_isotropy() is
// an independent exhaustive search over a finite box of candidate maps.

#include <cstdint>
#include <string>
#include <vector>

#include "shamsuddin/derivation.hpp"
#include "shamsuddin/error.hpp"
#include "shamsuddin/poly_map.hpp"

namespace shamsuddin {

/// rho D = D rho, checked on the generators x and y.
bool commutes(const Derivation& d, const PolyMap& rho);

/// One exact identity a certificate step relies on.
struct CertifiedCheck {
  std::string description;
  bool holds = false;
};

struct CertificateStep {
  std::string id;     // "S1".."S4"
  std::string claim;  // what the step establishes about a commuting rho
  std::vector<CertifiedCheck> checks;

  bool verified() const;
};

struct IsotropyCertificate {
  ShamsuddinForm form;
  std::vector<CertificateStep> steps;
  std::string conclusion;  // "trivial" once every step verified

  bool verified() const;
};

class NotSimpleError : public OperationError {
 public:
  explicit NotSimpleError(DarbouxWitness witness)
      : OperationError("derivation not simple"), witness_(std::move(witness)) {}
  const DarbouxWitness& witness() const { return witness_; }

 private:
  DarbouxWitness witness_;
};

/// Highest y-degree of rho(x) for which step S1 checks the coefficient
/// recursion explicitly.
inline constexpr int kDefaultYDegreeChecks = 8;

/// Builds the four-step certificate that the isotropy group is {id}.
/// Throws NotSimpleError when the derivation is not simple. A step whose
/// identity fails to re-verify throws std::logic_error.
IsotropyCertificate shamsuddin_isotropy(const ShamsuddinForm& sf, int y_degree_checks = kDefaultYDegreeChecks);

struct SearchBox {
  int deg_bound = 2;
  std::vector<BigRat> grid{BigRat(-1), BigRat(0), BigRat(1)};
  /// Upper bound on the number of candidate (f, g) pairs.
  std::uint64_t pair_budget = 100'000'000;
};

struct IsotropyEnumeration {
  std::vector<PolyMap> found;  // sorted by compare()
  std::uint64_t candidate_pairs = 0;
};

/// All maps (f, g) with total degree <= deg_bound and coefficients from the
/// grid that have constant nonzero Jacobian and commute with d.
/// Throws OperationError("search box too large") beyond the pair budget.
IsotropyEnumeration brute_force_isotropy(const Derivation& d, const SearchBox& box);

}  // namespace shamsuddin
