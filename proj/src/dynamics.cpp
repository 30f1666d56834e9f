#include "shamsuddin/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shamsuddin/polyring.hpp"

namespace shamsuddin {

// ---------------------------------------------------------------------------
// Automorphism validation.

bool AutomorphismCert::verify() const {
  const BPoly j = map.jacobian_determinant();
  if (jacobian_det == 0 || j != BPoly::constant(jacobian_det)) return false;
  if (!inverse) return true;
  return compose(map, *inverse).is_identity() && compose(*inverse, map).is_identity();
}

namespace {

std::optional<PolyMap> affine_inverse(const PolyMap& a) {
  const BigRat a11 = a.f.coeff(1, 0);
  const BigRat a12 = a.f.coeff(0, 1);
  const BigRat a21 = a.g.coeff(1, 0);
  const BigRat a22 = a.g.coeff(0, 1);
  const BigRat det = a11 * a22 - a12 * a21;
  if (det == 0) return std::nullopt;
  // (u, v) -> M^-1 ((u, v) - c)
  const BPoly u = BPoly::x() - BPoly::constant(a.f.constant_term());
  const BPoly v = BPoly::y() - BPoly::constant(a.g.constant_term());
  const BigRat inv = 1 / det;
  return PolyMap{(a22 * inv) * u - (a12 * inv) * v, (a11 * inv) * v - (a21 * inv) * u};
}

// Tries to write `top` as l * base^k; returns l.
std::optional<BigRat> proportional_power(const BPoly& top, const BPoly& base, unsigned k) {
  const BPoly power = base.pow(k);
  if (power.is_zero() || top.is_zero()) return std::nullopt;
  const BigRat l = top.terms().begin()->second / power.terms().begin()->second;
  if (top != power * l) return std::nullopt;
  return l;
}

std::optional<PolyMap> tame_inverse(const PolyMap& rho) {
  constexpr int kMaxReductions = 64;
  PolyMap current = rho;
  PolyMap reducer = PolyMap::identity();  // reducer o rho == current
  for (int step = 0; step < kMaxReductions; ++step) {
    const int df = current.f.degree().value_or(0);
    const int dg = current.g.degree().value_or(0);
    if (df == 0 || dg == 0) return std::nullopt;
    if (df <= 1 && dg <= 1) {
      auto a_inv = affine_inverse(current);
      if (!a_inv) return std::nullopt;
      PolyMap inverse = compose(*a_inv, reducer);
      if (!compose(rho, inverse).is_identity() || !compose(inverse, rho).is_identity()) return std::nullopt;
      return inverse;
    }
    PolyMap elementary = PolyMap::identity();
    if (df >= dg && df % dg == 0) {
      const auto k = static_cast<unsigned>(df / dg);
      auto l = proportional_power(current.f.homogeneous_part(df), current.g.homogeneous_part(dg), k);
      if (!l) return std::nullopt;
      elementary.f = BPoly::x() - *l * BPoly::y().pow(k);
    } else if (dg > df && dg % df == 0) {
      const auto k = static_cast<unsigned>(dg / df);
      auto l = proportional_power(current.g.homogeneous_part(dg), current.f.homogeneous_part(df), k);
      if (!l) return std::nullopt;
      elementary.g = BPoly::y() - *l * BPoly::x().pow(k);
    } else {
      return std::nullopt;
    }
    current = compose(elementary, current);
    reducer = compose(elementary, reducer);
  }
  return std::nullopt;
}

}  // namespace

AutomorphismVerdict validate_automorphism(const PolyMap& rho) {
  BPoly j = rho.jacobian_determinant();
  if (!j.is_constant() || j.is_zero()) return AutomorphismRejection{std::move(j)};
  return AutomorphismCert{rho, j.constant_term(), tame_inverse(rho)};
}

// ---------------------------------------------------------------------------
// Iteration.

DynDegreeEstimate degree_sequence(const PolyMap& rho, int n_max, std::size_t term_budget) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  DynDegreeEstimate est;
  PolyMap iterate = rho;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      iterate = compose(rho, iterate);
      if (iterate.term_count() > term_budget) throw IterationBlowUp(n - 1);
    }
    const int deg = iterate.degree().value_or(0);
    est.degree_sequence.push_back(deg);
    est.per_step_roots.push_back(std::pow(static_cast<double>(deg), 1.0 / n));
  }
  const auto& seq = est.degree_sequence;
  const std::size_t window = std::min<std::size_t>(3, seq.size());
  est.bounded = std::all_of(seq.end() - static_cast<std::ptrdiff_t>(window), seq.end(), [&](int d) { return d == seq.back(); });
  if (seq.size() == 1) {
    est.delta_estimate = BigRat(seq.back());
  } else if (seq[seq.size() - 2] == 0) {
    est.delta_estimate = BigRat(0);
  } else {
    est.delta_estimate = make_rat(seq.back(), seq[seq.size() - 2]);
  }
  return est;
}

std::optional<int> order_detect(const PolyMap& rho, int n_max, std::size_t term_budget) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  PolyMap iterate = rho;
  for (int n = 1; n <= n_max; ++n) {
    if (iterate.is_identity()) return n;
    if (n == n_max) break;
    iterate = compose(rho, iterate);
    if (iterate.term_count() > term_budget) throw IterationBlowUp(n);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fixed points.

std::string to_string(ClosureVerdict v) {
  switch (v) {
    case ClosureVerdict::ExistsOverClosure: return "ExistsOverClosure";
    case ClosureVerdict::NoneOverClosure: return "NoneOverClosure";
    case ClosureVerdict::InfinitelyMany: return "InfinitelyMany";
    case ClosureVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

// p(x0, y) as a polynomial in y.
UPoly specialize_x(const BPoly& p, const BigRat& x0) {
  UPoly out;
  for (const auto& [m, c] : p.terms()) {
    BigRat v = c;
    for (int i = 0; i < m.x; ++i) v *= x0;
    out += UPoly::monomial(v, m.y);
  }
  return out;
}

bool positive_degree(const BPoly& p, Var v) { return p.degree_in(v).value_or(0) > 0; }

// Decides existence of common zeros over the algebraic closure by eliminating
// `v`. A root of the resultant lifts to a common zero whenever one of the
// leading coefficients in `v` is nonzero there.
std::optional<ClosureVerdict> decide_by_elimination(const BPoly& p, const BPoly& q, Var v) {
  const UPoly r = resultant(p, q, v);
  if (r.is_zero()) return ClosureVerdict::InfinitelyMany;
  if (r.is_constant()) return ClosureVerdict::NoneOverClosure;
  const UPoly lp = p.coefficient_of(v, *p.degree_in(v));
  const UPoly lq = q.coefficient_of(v, *q.degree_in(v));
  const UPoly h = gcd(lp, lq);
  UPoly free_part = r;
  for (UPoly common = gcd(free_part, h); !common.is_constant(); common = gcd(free_part, h)) {
    free_part = divmod(free_part, common).first;
  }
  if (!free_part.is_constant()) return ClosureVerdict::ExistsOverClosure;
  return std::nullopt;
}

}  // namespace

FixedPointReport fixed_points(const PolyMap& rho) {
  const BPoly p = rho.f - BPoly::x();
  const BPoly q = rho.g - BPoly::y();
  if (p.is_zero() && q.is_zero()) throw OperationError("identity map: every point fixed");

  FixedPointReport report;
  if (p.is_zero() || q.is_zero()) {
    const BPoly& other_eq = p.is_zero() ? q : p;
    report.closure_verdict = other_eq.is_constant() ? ClosureVerdict::NoneOverClosure : ClosureVerdict::InfinitelyMany;
    return report;
  }
  if (p.is_constant() || q.is_constant()) {
    report.closure_verdict = ClosureVerdict::NoneOverClosure;
    return report;
  }
  const bool both_y = positive_degree(p, Var::y) && positive_degree(q, Var::y);
  const bool both_x = positive_degree(p, Var::x) && positive_degree(q, Var::x);
  if ((both_y && resultant(p, q, Var::y).is_zero()) || (both_x && resultant(p, q, Var::x).is_zero())) {
    report.closure_verdict = ClosureVerdict::InfinitelyMany;
    return report;
  }

  // A nonzero polynomial in x alone vanishing at every fixed point.
  UPoly in_x;
  if (!p.involves(Var::y)) {
    in_x = *p.as_upoly(Var::x);
  } else if (!q.involves(Var::y)) {
    in_x = *q.as_upoly(Var::x);
  } else {
    in_x = resultant(p, q, Var::y);
  }
  if (!in_x.is_constant()) {
    for (const BigRat& x0 : rational_roots(in_x)) {
      const UPoly py = specialize_x(p, x0);
      const UPoly qy = specialize_x(q, x0);
      const UPoly& driver = py.is_zero() ? qy : py;
      const UPoly& other_eq = py.is_zero() ? py : qy;
      if (driver.is_zero() || driver.is_constant()) continue;
      for (const BigRat& y0 : rational_roots(driver)) {
        if (other_eq(y0) != 0) continue;
        if (rho.f.evaluate(x0, y0) == x0 && rho.g.evaluate(x0, y0) == y0) report.rational_points.emplace_back(x0, y0);
      }
    }
  }
  std::sort(report.rational_points.begin(), report.rational_points.end());

  if (!report.rational_points.empty()) {
    report.closure_verdict = ClosureVerdict::ExistsOverClosure;
    return report;
  }
  if (!both_x && !both_y) {
    // One equation lives in k[x], the other in k[y]; both are nonconstant.
    report.closure_verdict = ClosureVerdict::ExistsOverClosure;
    return report;
  }
  std::optional<ClosureVerdict> v;
  if (both_y) v = decide_by_elimination(p, q, Var::y);
  if (!v && both_x) v = decide_by_elimination(p, q, Var::x);
  report.closure_verdict = v.value_or(ClosureVerdict::Unknown);
  return report;
}

}  // namespace shamsuddin
