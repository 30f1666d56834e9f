#include "shamsuddin/polyring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "shamsuddin/error.hpp"

namespace shamsuddin {

namespace {

using Matrix = std::vector<std::vector<UPoly>>;

UPoly exact_quotient(const UPoly& p, const UPoly& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) throw std::logic_error("Bareiss step left a remainder");
  return q;
}

// Fraction-free determinant over Q[t]. Entries stay integer polynomials when
// the input is integral, and every division is exact.
UPoly bareiss_determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly::constant(BigRat(1));
  bool negate = false;
  UPoly previous = UPoly::constant(BigRat(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      }
      m[i][k] = UPoly();
    }
    previous = m[k][k];
  }
  UPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

// Coefficients of p as a polynomial in v (index = power of v), scaled to
// integer polynomials in the other variable. Returns the scale factor used.
BigInt integral_coefficients(const BPoly& p, Var v, std::vector<UPoly>& out) {
  const int deg = *p.degree_in(v);
  BigInt den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  out.clear();
  for (int k = 0; k <= deg; ++k) out.push_back(p.coefficient_of(v, k) * BigRat(den));
  return den;
}

}  // namespace

UPoly resultant(const BPoly& p, const BPoly& q, Var eliminate) {
  if (p.is_zero() || q.is_zero()) throw OperationError("resultant of the zero polynomial");
  const int m = *p.degree_in(eliminate);
  const int n = *q.degree_in(eliminate);
  if (m == 0 && n == 0) throw OperationError("no elimination variable");

  std::vector<UPoly> pc;
  std::vector<UPoly> qc;
  const BigInt dp = integral_coefficients(p, eliminate, pc);
  const BigInt dq = integral_coefficients(q, eliminate, qc);

  // q's m shifted rows on top, then p's n rows; coefficients by descending power.
  const auto size = static_cast<std::size_t>(m + n);
  Matrix sylvester(size, std::vector<UPoly>(size));
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) sylvester[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = qc[static_cast<std::size_t>(n - k)];
  }
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) sylvester[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + k)] = pc[static_cast<std::size_t>(m - k)];
  }

  UPoly det = bareiss_determinant(std::move(sylvester));
  BigInt scale;
  BigInt dq_pow;
  mpz_pow_ui(scale.get_mpz_t(), dp.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(dq_pow.get_mpz_t(), dq.get_mpz_t(), static_cast<unsigned long>(m));
  scale *= dq_pow;
  return det * make_rat(BigInt(1), scale);
}

namespace {

BigInt pollard_rho(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2;
    BigInt y = 2;
    BigInt d = 1;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      BigInt diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(BigInt n, std::map<BigInt, int>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++primes[n];
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<BigInt> positive_divisors(const BigInt& value) {
  BigInt n = abs(value);
  if (n == 0) throw OperationError("divisors of zero");
  std::map<BigInt, int> primes;
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++primes[BigInt(p)];
      n /= p;
    }
  }
  factor_into(n, primes);

  std::vector<BigInt> divisors{BigInt(1)};
  for (const auto& [p, e] : primes) {
    const std::size_t count = divisors.size();
    BigInt power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::vector<BigRat> rational_roots(const UPoly& u) {
  if (u.is_zero()) throw OperationError("identically zero");
  std::vector<BigInt> ints = primitive_integer_coefficients(u);
  std::set<BigRat> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.insert(BigRat(0));
  if (low + 1 < ints.size()) {
    // Any root p/q in lowest terms has p | a_low and q | a_high.
    const std::vector<BigInt> num = positive_divisors(ints[low]);
    const std::vector<BigInt> den = positive_divisors(ints.back());
    for (const BigInt& q : den) {
      for (const BigInt& p : num) {
        for (int s : {1, -1}) {
          BigRat candidate = make_rat(p * s, q);
          if (u(candidate) == 0) roots.insert(candidate);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace shamsuddin
