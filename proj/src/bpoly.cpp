#include "shamsuddin/bpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "format_terms.hpp"
#include "shamsuddin/error.hpp"

namespace shamsuddin {

BPoly::BPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BPoly BPoly::constant(const BigRat& c) { return monomial(c, 0, 0); }

BPoly BPoly::monomial(const BigRat& c, int x_exp, int y_exp) {
  BPoly p;
  if (c != 0) p.terms_.emplace(Monomial{x_exp, y_exp}, c);
  return p;
}

BPoly BPoly::from_upoly(const UPoly& u, Var v) {
  BPoly p;
  auto coeffs = u.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const int e = static_cast<int>(i);
    p.terms_.emplace(v == Var::x ? Monomial{e, 0} : Monomial{0, e}, coeffs[i]);
  }
  return p;
}

bool BPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

BigRat BPoly::coeff(int x_exp, int y_exp) const {
  auto it = terms_.find(Monomial{x_exp, y_exp});
  return it == terms_.end() ? BigRat(0) : it->second;
}

std::optional<int> BPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.total();
}

std::optional<int> BPoly::degree_in(Var v) const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

bool BPoly::involves(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const auto& kv) { return kv.first.exponent(v) > 0; });
}

std::optional<UPoly> BPoly::as_upoly(Var v) const {
  if (involves(other(v))) return std::nullopt;
  return coefficient_of(other(v), 0);
}

UPoly BPoly::coefficient_of(Var v, int k) const {
  const Var w = other(v);
  std::vector<BigRat> coeffs;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != k) continue;
    const auto e = static_cast<std::size_t>(m.exponent(w));
    if (coeffs.size() <= e) coeffs.resize(e + 1, BigRat(0));
    coeffs[e] = c;
  }
  return UPoly(std::move(coeffs));
}

BPoly BPoly::homogeneous_part(int total_degree) const {
  BPoly p;
  for (const auto& [m, c] : terms_) {
    if (m.total() == total_degree) p.terms_.emplace(m, c);
  }
  return p;
}

BigRat BPoly::evaluate(const BigRat& x, const BigRat& y) const {
  // Horner in y over x-coefficients would be faster; the plain sum is enough
  // for the point checks this is used for.
  BigRat acc(0);
  for (const auto& [m, c] : terms_) {
    BigRat t = c;
    for (int i = 0; i < m.x; ++i) t *= x;
    for (int j = 0; j < m.y; ++j) t *= y;
    acc += t;
  }
  return acc;
}

BPoly BPoly::pow(unsigned e) const {
  BPoly result = constant(BigRat(1));
  BPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BPoly BPoly::operator-() const {
  BPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BPoly& BPoly::operator+=(const BPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BPoly& BPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

struct IntegerForm {
  BigInt denominator;
  std::vector<Monomial> monomials;
  std::vector<BigInt> numerators;
};

IntegerForm to_integer_form(const BPoly& p) {
  IntegerForm f;
  f.denominator = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(f.denominator.get_mpz_t(), f.denominator.get_mpz_t(), c.get_den_mpz_t());
  }
  f.monomials.reserve(p.term_count());
  f.numerators.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    BigInt n = f.denominator / c.get_den();
    n *= c.get_num();
    f.monomials.push_back(m);
    f.numerators.push_back(std::move(n));
  }
  return f;
}

constexpr std::size_t kSmallProduct = 64;
constexpr std::size_t kDenseCellLimit = std::size_t{1} << 22;

BPoly multiply_small(const BPoly& p, const BPoly& q) {
  BPoly::TermMap acc;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      acc[Monomial{mp.x + mq.x, mp.y + mq.y}] += cp * cq;
    }
  }
  return BPoly(std::move(acc));
}

// Products of large polynomials are accumulated on integer numerators over a
// common denominator; rational additions with gcd normalization per term
// would dominate the cost otherwise.
BPoly multiply_integer(const BPoly& p, const BPoly& q, bool square) {
  const IntegerForm a = to_integer_form(p);
  const IntegerForm b = square ? a : to_integer_form(q);
  const BigInt denominator = a.denominator * b.denominator;

  int max_x = 0;
  int max_y = 0;
  for (const auto& m : a.monomials) max_x = std::max(max_x, m.x), max_y = std::max(max_y, m.y);
  int bx = 0;
  int by = 0;
  for (const auto& m : b.monomials) bx = std::max(bx, m.x), by = std::max(by, m.y);
  max_x += bx;
  max_y += by;
  const std::size_t width = static_cast<std::size_t>(max_y) + 1;
  const std::size_t cells = (static_cast<std::size_t>(max_x) + 1) * width;

  BPoly::TermMap out;
  auto emit = [&](std::size_t x, std::size_t y, const BigInt& n) {
    if (n == 0) return;
    out.emplace_hint(out.end(), Monomial{static_cast<int>(x), static_cast<int>(y)}, make_rat(n, denominator));
  };

  auto for_each_product = [&](auto&& addmul) {
    if (square) {
      std::vector<BigInt> doubled(a.numerators.size());
      for (std::size_t i = 0; i < a.numerators.size(); ++i) doubled[i] = a.numerators[i] * 2;
      for (std::size_t i = 0; i < a.monomials.size(); ++i) {
        addmul(a.monomials[i], a.monomials[i], a.numerators[i], a.numerators[i]);
        for (std::size_t j = i + 1; j < a.monomials.size(); ++j) {
          addmul(a.monomials[i], a.monomials[j], doubled[i], a.numerators[j]);
        }
      }
    } else {
      for (std::size_t i = 0; i < a.monomials.size(); ++i) {
        for (std::size_t j = 0; j < b.monomials.size(); ++j) {
          addmul(a.monomials[i], b.monomials[j], a.numerators[i], b.numerators[j]);
        }
      }
    }
  };

  if (cells <= kDenseCellLimit) {
    std::vector<BigInt> grid(cells);
    for_each_product([&](const Monomial& m1, const Monomial& m2, const BigInt& c1, const BigInt& c2) {
      const std::size_t idx = static_cast<std::size_t>(m1.x + m2.x) * width + static_cast<std::size_t>(m1.y + m2.y);
      mpz_addmul(grid[idx].get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
    });
    // Walk cells in graded-lex descending order so map insertion is at the end.
    const int top = max_x + max_y;
    for (int t = top; t >= 0; --t) {
      for (int x = std::min(t, max_x); x >= 0 && t - x <= max_y; --x) {
        const auto ux = static_cast<std::size_t>(x);
        const auto uy = static_cast<std::size_t>(t - x);
        emit(ux, uy, grid[ux * width + uy]);
      }
    }
    return BPoly(std::move(out));
  }

  std::unordered_map<std::uint64_t, BigInt> sparse;
  for_each_product([&](const Monomial& m1, const Monomial& m2, const BigInt& c1, const BigInt& c2) {
    const std::uint64_t key = (static_cast<std::uint64_t>(m1.x + m2.x) << 32) | static_cast<std::uint32_t>(m1.y + m2.y);
    BigInt& cell = sparse[key];
    mpz_addmul(cell.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
  });
  BPoly::TermMap unordered;
  for (const auto& [key, n] : sparse) {
    if (n == 0) continue;
    unordered.emplace(Monomial{static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffU)}, make_rat(n, denominator));
  }
  return BPoly(std::move(unordered));
}

}  // namespace

BPoly operator*(const BPoly& p, const BPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (p.term_count() * q.term_count() <= kSmallProduct) return multiply_small(p, q);
  const bool square = &p == &q || p == q;
  return multiply_integer(p, q, square);
}

std::strong_ordering compare(const BPoly& p, const BPoly& q) {
  auto i = p.terms().begin();
  auto j = q.terms().begin();
  const GradedLexGreater greater;
  for (; i != p.terms().end() && j != q.terms().end(); ++i, ++j) {
    if (i->first != j->first) {
      return greater(i->first, j->first) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const int c = cmp(i->second, j->second);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (i == p.terms().end() && j == q.terms().end()) return std::strong_ordering::equal;
  return i == p.terms().end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

BPoly partial(const BPoly& p, Var v) {
  BPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    Monomial d = m;
    (v == Var::x ? d.x : d.y) -= 1;
    out.emplace(d, c * e);
  }
  return BPoly(std::move(out));
}

BPoly substitute(const BPoly& p, const BPoly& img_x, const BPoly& img_y) {
  if (p.is_zero()) return {};
  const int dx = *p.degree_in(Var::x);
  BPoly result;
  BPoly x_power = BPoly::constant(BigRat(1));
  for (int i = 0; i <= dx; ++i) {
    if (i > 0) x_power = x_power * img_x;
    // Horner in img_y for the coefficient of x^i.
    const UPoly inner = p.coefficient_of(Var::x, i);
    if (inner.is_zero()) continue;
    BPoly acc;
    auto coeffs = inner.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = acc * img_y;
      acc += BPoly::constant(*it);
    }
    result += x_power * acc;
  }
  return result;
}

std::optional<BPoly> exact_divide(const BPoly& p, const BPoly& q) {
  if (q.is_zero()) throw OperationError("division by zero polynomial");
  // A single polynomial is a Groebner basis of the ideal it generates, so the
  // division remainder vanishes exactly when q divides p. The first leading
  // term that q's leading term fails to divide lands in the remainder.
  const auto& [lq, cq] = *q.terms().begin();
  BPoly remainder = p;
  BPoly::TermMap quotient;
  while (!remainder.is_zero()) {
    const auto [lr, cr] = *remainder.terms().begin();
    if (!lq.divides(lr)) return std::nullopt;
    const Monomial shift{lr.x - lq.x, lr.y - lq.y};
    const BigRat c = cr / cq;
    quotient.emplace(shift, c);
    remainder -= BPoly::monomial(c, shift.x, shift.y) * q;
  }
  return BPoly(std::move(quotient));
}

std::string to_string(const BPoly& p) {
  std::vector<std::pair<BigRat, std::string>> terms;
  terms.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    if (m.x > 0) mono += detail::power('x', m.x);
    if (m.y > 0) {
      if (!mono.empty()) mono += "*";
      mono += detail::power('y', m.y);
    }
    terms.emplace_back(c, std::move(mono));
  }
  return detail::join_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const BPoly& p) { return os << to_string(p); }

}  // namespace shamsuddin
