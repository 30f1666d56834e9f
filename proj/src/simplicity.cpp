#include "shamsuddin/simplicity.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace shamsuddin {

bool solves_ode(const UPoly& r, const UPoly& a, const UPoly& b) {
  return (r.derivative() - a * r - b).is_zero();
}

OdeVerdict solve_linear_ode(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return OdeSolution{b.antiderivative()};
  if (b.is_zero()) return OdeSolution{UPoly()};

  const int deg_a = *a.degree();
  const int deg_b = *b.degree();
  if (deg_b < deg_a) return NoSolution{};
  const int n = deg_b - deg_a;

  // Coefficient of x^(deg_a + k) in r' - a r - b, for k = n..0:
  //   (deg_a + k + 1) r_{deg_a+k+1} - sum_i a_i r_{deg_a+k-i} - b_{deg_a+k} = 0,
  // where the only unknown is r_k (the a_{deg_a} r_k term); everything else
  // has a higher index and is already fixed.
  std::vector<BigRat> r(static_cast<std::size_t>(n) + 1, BigRat(0));
  auto coeff_r = [&](int i) -> BigRat {
    return (i >= 0 && i <= n) ? r[static_cast<std::size_t>(i)] : BigRat(0);
  };
  for (int k = n; k >= 0; --k) {
    const int e = deg_a + k;
    BigRat rest = coeff_r(e + 1) * (e + 1) - b.coeff(e);
    for (int i = 0; i < deg_a; ++i) rest -= a.coeff(i) * coeff_r(e - i);
    r[static_cast<std::size_t>(k)] = rest / a.leading();
  }
  UPoly candidate(std::move(r));
  if (!solves_ode(candidate, a, b)) return NoSolution{};
  return OdeSolution{std::move(candidate)};
}

namespace {

// Solves A u = rhs exactly; free unknowns are set to zero.
std::optional<std::vector<BigRat>> gaussian_solve(std::vector<std::vector<BigRat>> m, std::vector<BigRat> rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    std::swap(rhs[p], rhs[row]);
    const BigRat inv = 1 / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    rhs[row] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const BigRat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<BigRat> u(cols, BigRat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) u[pivot_col[i]] = rhs[i];
  return u;
}

}  // namespace

OdeVerdict ode_brute_oracle(const UPoly& a, const UPoly& b, int max_deg) {
  if (max_deg < 0) throw std::invalid_argument("max_deg must be nonnegative");
  const int deg_a = a.degree().value_or(0);
  const int deg_b = b.degree().value_or(0);
  for (int m = 0; m <= max_deg; ++m) {
    // Unknowns r_0..r_m; one equation per power of x that can appear.
    const int top = std::max({m, deg_a + m, deg_b});
    const auto rows = static_cast<std::size_t>(top) + 1;
    const auto cols = static_cast<std::size_t>(m) + 1;
    std::vector<std::vector<BigRat>> mat(rows, std::vector<BigRat>(cols, BigRat(0)));
    std::vector<BigRat> rhs(rows, BigRat(0));
    for (int j = 0; j <= m; ++j) {
      const auto col = static_cast<std::size_t>(j);
      if (j >= 1) mat[static_cast<std::size_t>(j - 1)][col] += j;  // r'
      for (int i = 0; i <= deg_a; ++i) mat[static_cast<std::size_t>(i + j)][col] -= a.coeff(i);  // -a r
    }
    for (int e = 0; e <= deg_b; ++e) rhs[static_cast<std::size_t>(e)] = b.coeff(e);
    if (auto u = gaussian_solve(std::move(mat), std::move(rhs))) return OdeSolution{UPoly(std::move(*u))};
  }
  return NoSolution{};
}

SimplicityVerdict shamsuddin_is_simple(const ShamsuddinForm& sf) {
  const OdeVerdict v = solve_linear_ode(sf.a, sf.b);
  if (const auto* s = std::get_if<OdeSolution>(&v)) {
    return NotSimple{DarbouxWitness{BPoly::y() - BPoly::from_upoly(s->r), BPoly::from_upoly(sf.a)}};
  }
  return Simple{};
}

}  // namespace shamsuddin
