#include "shamsuddin/upoly.hpp"

#include <algorithm>
#include <numeric>

#include "format_terms.hpp"
#include "shamsuddin/error.hpp"

namespace shamsuddin {

namespace {
const BigRat kZero(0);
}

UPoly::UPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UPoly UPoly::constant(const BigRat& c) { return UPoly(std::vector<BigRat>{c}); }

UPoly UPoly::monomial(const BigRat& c, int exponent) {
  std::vector<BigRat> v(static_cast<std::size_t>(exponent) + 1, BigRat(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> UPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

const BigRat& UPoly::coeff(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigRat& UPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

BigRat UPoly::operator()(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<BigRat> a(coeffs_.size() + 1, BigRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    a[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
    a[i + 1].canonicalize();
  }
  return UPoly(std::move(a));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UPoly operator*(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigRat> r(p.coeffs_.size() + q.coeffs_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> divmod(const UPoly& p, const UPoly& d) {
  if (d.is_zero()) throw OperationError("division by zero polynomial");
  const int dd = *d.degree();
  std::vector<BigRat> rem(p.coefficients().begin(), p.coefficients().end());
  const int dp = static_cast<int>(rem.size()) - 1;
  if (dp < dd) return {UPoly(), p};
  std::vector<BigRat> quo(static_cast<std::size_t>(dp - dd + 1), BigRat(0));
  const BigRat& lc = d.leading();
  for (int k = dp; k >= dd; --k) {
    BigRat c = rem[static_cast<std::size_t>(k)] / lc;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k - dd)] = c;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= c * d.coeff(i);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly p, UPoly q) {
  while (!q.is_zero()) {
    UPoly r = divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  if (p.is_zero()) return p;
  BigRat inv = 1 / p.leading();
  return p * inv;
}

UPoly shift_univariate(const UPoly& a, const BigRat& c) {
  // Horner: a(x+c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...) + a_0.
  const UPoly xc(std::vector<BigRat>{c, BigRat(1)});
  UPoly acc;
  auto coeffs = a.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * xc + UPoly::constant(*it);
  return acc;
}

std::vector<BigInt> primitive_integer_coefficients(const UPoly& p) {
  if (p.is_zero()) return {};
  BigInt den = common_denominator(p.coefficients());
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  BigInt g = 0;
  for (const BigRat& c : p.coefficients()) {
    BigRat scaled = c * den;
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (sgn(out.back()) < 0) g = -g;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::string format_upoly(const UPoly& p, char var) {
  std::vector<std::pair<BigRat, std::string>> terms;
  auto coeffs = p.coefficients();
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const BigRat& c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    terms.emplace_back(c, i == 0 ? std::string() : detail::power(var, i));
  }
  return detail::join_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << format_upoly(p); }

}  // namespace shamsuddin
