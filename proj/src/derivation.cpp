#include "shamsuddin/derivation.hpp"

#include "shamsuddin/error.hpp"

namespace shamsuddin {

Derivation ShamsuddinForm::to_derivation() const {
  return Derivation{BPoly::constant(BigRat(1)), BPoly::from_upoly(a) * BPoly::y() + BPoly::from_upoly(b)};
}

bool DarbouxWitness::verify(const Derivation& d) const {
  if (f.is_constant()) return false;
  return apply(d, f) - cofactor * f == BPoly();
}

BPoly apply(const Derivation& d, const BPoly& p) {
  return d.dx * partial(p, Var::x) + d.dy * partial(p, Var::y);
}

std::optional<ShamsuddinForm> to_shamsuddin(const Derivation& d) {
  if (d.dx != BPoly::constant(BigRat(1))) return std::nullopt;
  if (d.dy.degree_in(Var::y).value_or(0) > 1) return std::nullopt;
  return ShamsuddinForm{d.dy.coefficient_of(Var::y, 1), d.dy.coefficient_of(Var::y, 0)};
}

std::optional<DarbouxWitness> invariant_check(const Derivation& d, const BPoly& f) {
  if (f.is_zero()) throw OperationError("invariant check of the zero polynomial");
  if (f.is_constant()) return std::nullopt;
  auto cofactor = exact_divide(apply(d, f), f);
  if (!cofactor) return std::nullopt;
  return DarbouxWitness{f, std::move(*cofactor)};
}

std::optional<DarbouxWitness> lemma_witness(const ShamsuddinForm& sf) {
  if (sf.b.is_zero()) return DarbouxWitness{BPoly::y(), BPoly::from_upoly(sf.a)};
  if (sf.a.is_zero()) return DarbouxWitness{BPoly::y() - BPoly::from_upoly(sf.b.antiderivative()), BPoly()};
  return std::nullopt;
}

}  // namespace shamsuddin
