#pragma once

// k-derivations of k[x,y]. A derivation is fixed by the images of x and y and
// acts on everything else through the Leibniz rule.

#include <optional>

#include "shamsuddin/bpoly.hpp"
#include "shamsuddin/upoly.hpp"

namespace shamsuddin {

struct Derivation {
  BPoly dx;  // D(x)
  BPoly dy;  // D(y)

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// D = d/dx + (a(x) y + b(x)) d/dy.
struct ShamsuddinForm {
  UPoly a;
  UPoly b;

  Derivation to_derivation() const;
  friend bool operator==(const ShamsuddinForm&, const ShamsuddinForm&) = default;
};

/// A nonconstant f with D(f) = cofactor * f, i.e. the principal ideal (f) is D-stable.
struct DarbouxWitness {
  BPoly f;
  BPoly cofactor;

  /// Recomputes D(f) - cofactor*f and checks f is nonconstant.
  bool verify(const Derivation& d) const;
  friend bool operator==(const DarbouxWitness&, const DarbouxWitness&) = default;
};

/// D(p) = D(x) * dp/dx + D(y) * dp/dy.
BPoly apply(const Derivation& d, const BPoly& p);

/// Recognizes dx = 1, dy = a(x) y + b(x).
std::optional<ShamsuddinForm> to_shamsuddin(const Derivation& d);

/// Witness for (f) when f is nonconstant and divides D(f); throws OperationError on f = 0.
std::optional<DarbouxWitness> invariant_check(const Derivation& d, const BPoly& f);

/// The invariant ideals that rule out simplicity when a = 0 or b = 0:
/// (y) with cofactor a when b = 0, otherwise (y - h) with h' = b, h(0) = 0, when a = 0.
std::optional<DarbouxWitness> lemma_witness(const ShamsuddinForm& sf);

}  // namespace shamsuddin
