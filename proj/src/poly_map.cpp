#include "shamsuddin/poly_map.hpp"

#include <algorithm>

namespace shamsuddin {

std::optional<int> PolyMap::degree() const {
  const auto df = f.degree();
  const auto dg = g.degree();
  if (!df) return dg;
  if (!dg) return df;
  return std::max(*df, *dg);
}

BPoly PolyMap::jacobian_determinant() const {
  return partial(f, Var::x) * partial(g, Var::y) - partial(f, Var::y) * partial(g, Var::x);
}

std::strong_ordering compare(const PolyMap& a, const PolyMap& b) {
  if (auto c = compare(a.f, b.f); c != 0) return c;
  return compare(a.g, b.g);
}

PolyMap compose(const PolyMap& rho, const PolyMap& sigma) {
  return {substitute(rho.f, sigma.f, sigma.g), substitute(rho.g, sigma.f, sigma.g)};
}

}  // namespace shamsuddin
