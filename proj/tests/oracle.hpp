#pragma once

// Test-side reference implementations and random generators. Nothing here
// calls into the library's arithmetic, so it can serve as an oracle for it.

#include <gmpxx.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "shamsuddin/bpoly.hpp"
#include "shamsuddin/upoly.hpp"

namespace oracle {

using Q = mpq_class;
using Exp = std::pair<int, int>;
using Naive = std::map<Exp, Q>;  // (i, j) -> coefficient of x^i y^j, zeros allowed

inline Naive clean(Naive p) {
  for (auto it = p.begin(); it != p.end();) it = (it->second == 0) ? p.erase(it) : std::next(it);
  return p;
}

inline Naive add(const Naive& p, const Naive& q, const Q& s = 1) {
  Naive r = p;
  for (const auto& [e, c] : q) r[e] += s * c;
  return clean(r);
}

// Schoolbook distributive expansion.
inline Naive mul(const Naive& p, const Naive& q) {
  Naive r;
  for (const auto& [e1, c1] : p)
    for (const auto& [e2, c2] : q) r[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  return clean(r);
}

inline Naive power(const Naive& p, int e) {
  Naive r{{{0, 0}, Q(1)}};
  for (int i = 0; i < e; ++i) r = mul(r, p);
  return r;
}

inline Naive diff(const Naive& p, bool in_x) {
  Naive r;
  for (const auto& [e, c] : p) {
    const int k = in_x ? e.first : e.second;
    if (k == 0) continue;
    r[in_x ? Exp{e.first - 1, e.second} : Exp{e.first, e.second - 1}] += c * k;
  }
  return clean(r);
}

// Plugs images into every monomial and expands with mul().
inline Naive subst(const Naive& p, const Naive& fx, const Naive& fy) {
  Naive r;
  for (const auto& [e, c] : p) r = add(r, mul(Naive{{{0, 0}, c}}, mul(power(fx, e.first), power(fy, e.second))));
  return r;
}

inline Q eval(const Naive& p, const Q& x, const Q& y) {
  Q s = 0;
  for (const auto& [e, c] : p) {
    Q t = c;
    for (int i = 0; i < e.first; ++i) t *= x;
    for (int j = 0; j < e.second; ++j) t *= y;
    s += t;
  }
  return s;
}

inline Naive from_bpoly(const shamsuddin::BPoly& p) {
  Naive r;
  for (const auto& [m, c] : p.terms()) r[{m.x, m.y}] = c;
  return r;
}

inline shamsuddin::BPoly to_bpoly(const Naive& p) {
  shamsuddin::BPoly r;
  for (const auto& [e, c] : p) r += shamsuddin::BPoly::monomial(c, e.first, e.second);
  return r;
}

inline bool same(const shamsuddin::BPoly& p, const Naive& q) { return from_bpoly(p) == clean(q); }

// Determinant by rational Gaussian elimination with row pivoting.
inline Q det(std::vector<std::vector<Q>> m) {
  const std::size_t n = m.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Resultant in y of two polynomials whose y-coefficients are plain numbers
// (i.e. the value of Res_y at a fixed x). Coefficients are given lowest first.
// Sylvester layout with q's rows on top.
inline Q sylvester(const std::vector<Q>& p, const std::vector<Q>& q) {
  const int m = static_cast<int>(p.size()) - 1;
  const int n = static_cast<int>(q.size()) - 1;
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Q>> s(size, std::vector<Q>(size, Q(0)));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[r][r + k] = q[n - k];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[m + r][r + k] = p[m - k];
  return det(s);
}

// --- random generation -----------------------------------------------------

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Q rat(int bound = 5) {
    const int num = uniform(-bound, bound);
    const int den = uniform(1, 3);
    Q q(num, den);
    q.canonicalize();
    return q;
  }

  Q nonzero_rat(int bound = 5) {
    Q q;
    do q = rat(bound);
    while (q == 0);
    return q;
  }

  // Random polynomial of total degree <= deg with up to `terms` monomials.
  Naive poly(int deg, int terms, int bound = 5) {
    Naive p;
    const int n = uniform(0, terms);
    for (int t = 0; t < n; ++t) {
      const int i = uniform(0, deg);
      const int j = uniform(0, deg - i);
      p[{i, j}] += rat(bound);
    }
    return clean(p);
  }

  // Dense univariate coefficients with exact degree `deg` (empty when deg < 0).
  std::vector<Q> upoly_coeffs(int deg, int bound) {
    std::vector<Q> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Q(uniform(-bound, bound)));
    if (deg >= 0) {
      while (c.back() == 0) c.back() = Q(uniform(-bound, bound));
    }
    return c;
  }
};

inline shamsuddin::UPoly upoly(const std::vector<Q>& c) { return shamsuddin::UPoly(std::vector<Q>(c.begin(), c.end())); }

}  // namespace oracle
