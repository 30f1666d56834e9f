#pragma once

#include <compare>
#include <optional>

#include "shamsuddin/bpoly.hpp"

namespace shamsuddin {

/// A polynomial endomorphism of the plane, x -> f(x,y), y -> g(x,y).
struct PolyMap {
  BPoly f;
  BPoly g;

  static PolyMap identity() { return {BPoly::x(), BPoly::y()}; }
  bool is_identity() const { return *this == identity(); }

  /// max(deg f, deg g); std::nullopt only for the zero map.
  std::optional<int> degree() const;
  std::size_t term_count() const { return f.term_count() + g.term_count(); }

  /// f_x g_y - f_y g_x.
  BPoly jacobian_determinant() const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;
};

/// Orders maps by f, then g, using the canonical polynomial order.
std::strong_ordering compare(const PolyMap& a, const PolyMap& b);

/// (rho o sigma): x -> rho.f(sigma.f, sigma.g), y -> rho.g(sigma.f, sigma.g).
PolyMap compose(const PolyMap& rho, const PolyMap& sigma);

}  // namespace shamsuddin
