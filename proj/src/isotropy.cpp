#include "shamsuddin/isotropy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <optional>
#include <stdexcept>
#include <thread>

#include "shamsuddin/expr.hpp"
#include "shamsuddin/simplicity.hpp"

namespace shamsuddin {

bool commutes(const Derivation& d, const PolyMap& rho) {
  return substitute(d.dx, rho.f, rho.g) == apply(d, rho.f) && substitute(d.dy, rho.f, rho.g) == apply(d, rho.g);
}

bool CertificateStep::verified() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

bool IsotropyCertificate::verified() const {
  return steps.size() == 4 && std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.verified(); });
}

namespace {

bool is_zero_solution(const OdeVerdict& v) {
  const auto* s = std::get_if<OdeSolution>(&v);
  return s != nullptr && s->r.is_zero();
}

CertificateStep step_s1(const ShamsuddinForm& sf, const Derivation& d, int y_degree_checks) {
  CertificateStep step;
  step.id = "S1";
  step.claim =
      "rho(x) = x + c for a constant c: D(rho(x)) = rho(D(x)) = 1, and writing rho(x) = sum a_s(x) y^s the "
      "y^s coefficient of D(rho(x)) is a_s' + s*a*a_s, which vanishes only for a_s = 0 when s >= 1";
  const BPoly one = BPoly::constant(BigRat(1));
  step.checks.push_back({"D(x) = 1", apply(d, BPoly::x()) == one});
  step.checks.push_back({"a != 0", !sf.a.is_zero()});
  const BPoly a = BPoly::from_upoly(sf.a);
  for (int s = 1; s <= y_degree_checks; ++s) {
    const BPoly ys = BPoly::y().pow(static_cast<unsigned>(s));
    const BPoly expected = BigRat(s) * BPoly::y().pow(static_cast<unsigned>(s - 1)) * d.dy;
    step.checks.push_back({"D(y^" + std::to_string(s) + ") = " + std::to_string(s) + "*y^" + std::to_string(s - 1) +
                               "*(a*y + b), so the y^" + std::to_string(s) + " coefficient of D(u(x)*y^" +
                               std::to_string(s) + ") is u' + " + std::to_string(s) + "*a*u",
                           apply(d, ys) == expected});
    const UPoly scaled = sf.a * BigRat(-s);
    step.checks.push_back({"r' = " + format(scaled) + " * r has only the solution r = 0",
                           !scaled.is_zero() && is_zero_solution(solve_linear_ode(scaled, UPoly()))});
  }
  const OdeVerdict top = solve_linear_ode(UPoly(), UPoly::constant(BigRat(1)));
  step.checks.push_back({"r' = 1 is solved by r = x up to a constant",
                         std::holds_alternative<OdeSolution>(top) && std::get<OdeSolution>(top).r == UPoly::variable()});
  return step;
}

CertificateStep step_s2(const ShamsuddinForm& sf) {
  CertificateStep step;
  step.id = "S2";
  const int deg_a = sf.a.degree().value_or(-1);
  step.claim =
      "t = 1 and c = 0: with rho(y) of y-degree t, the y^t coefficient gives b_t' = b_t*(a(x+c) - t*a), so "
      "a(x+c) = t*a; leading coefficients force t = 1, and the x^(deg a - 1) coefficient of a(x+c) - a(x) is "
      "(deg a)*lc(a)*c, forcing c = 0";
  step.checks.push_back({"a is nonconstant (deg a = " + std::to_string(deg_a) + ")", deg_a >= 1});
  if (deg_a < 1) return step;

  // The polynomial ring k[x, c]: y stands in for the unknown shift c.
  const BPoly a = BPoly::from_upoly(sf.a);
  const BPoly shifted = substitute(a, BPoly::x() + BPoly::y(), BPoly::y());
  const BPoly diff = shifted - a;
  step.checks.push_back({"the x^" + std::to_string(deg_a) + " coefficient of a(x+c) is lc(a) = " +
                             sf.a.leading().get_str() + " for every c",
                         shifted.coefficient_of(Var::x, deg_a) == UPoly::constant(sf.a.leading())});
  const UPoly expected = UPoly::monomial(sf.a.leading() * deg_a, 1);
  step.checks.push_back({"the x^" + std::to_string(deg_a - 1) + " coefficient of a(x+c) - a(x) is " +
                             std::to_string(deg_a) + "*" + sf.a.leading().get_str() + "*c",
                         diff.coefficient_of(Var::x, deg_a - 1) == expected});
  return step;
}

CertificateStep step_s3(const ShamsuddinForm& sf, const Derivation& d) {
  CertificateStep step;
  step.id = "S3";
  step.claim =
      "rho(y) = b0(x) + b1*y with b1 constant, and comparing y-free terms of D(rho(y)) = a*rho(y) + b gives "
      "D(b0) = b0*a + b*(1 - b1)";
  const BPoly a = BPoly::from_upoly(sf.a);
  const BPoly b = BPoly::from_upoly(sf.b);
  step.checks.push_back({"D(y) - a*y = b is free of y", d.dy - a * BPoly::y() == b});
  // The residual below is affine in (b0, b1), so agreement on an affinely
  // spanning set of samples proves the reduction for all of them.
  const std::array<std::pair<BPoly, BigRat>, 4> samples{{
      {BPoly(), BigRat(0)},
      {BPoly(), BigRat(1)},
      {BPoly::constant(BigRat(1)), BigRat(0)},
      {BPoly::x(), BigRat(0)},
  }};
  bool all = true;
  for (const auto& [b0, b1] : samples) {
    const PolyMap rho{BPoly::x(), b0 + b1 * BPoly::y()};
    const BPoly lhs = apply(d, rho.g) - substitute(d.dy, rho.f, rho.g);
    const BPoly rhs = apply(d, b0) - b0 * a - (BigRat(1) - b1) * b;
    all = all && lhs == rhs;
  }
  step.checks.push_back({"D(b0 + b1*y) - rho(a*y + b) = D(b0) - b0*a - b*(1 - b1) for rho = (x, b0 + b1*y)", all});
  return step;
}

CertificateStep step_s4(const ShamsuddinForm& sf) {
  CertificateStep step;
  step.id = "S4";
  step.claim =
      "b1 = 1 and b0 = 0: if b1 != 1, b0/(1 - b1) would solve r' = a*r + b, which has no polynomial solution; "
      "then b0' = a*b0 with a != 0 forces b0 = 0, so rho = id";
  step.checks.push_back({"r' = a*r + b has no polynomial solution", !has_solution(solve_linear_ode(sf.a, sf.b))});
  for (const BigRat& lambda : {BigRat(2), BigRat(-1), make_rat(1, 3), make_rat(-7, 2)}) {
    step.checks.push_back({"r' = a*r + (" + lambda.get_str() + ")*b has no polynomial solution",
                           !has_solution(solve_linear_ode(sf.a, sf.b * lambda))});
  }
  step.checks.push_back({"r' = a*r has only r = 0", !sf.a.is_zero() && is_zero_solution(solve_linear_ode(sf.a, UPoly()))});
  step.checks.push_back({"the identity commutes with D", commutes(sf.to_derivation(), PolyMap::identity())});
  return step;
}

}  // namespace

IsotropyCertificate shamsuddin_isotropy(const ShamsuddinForm& sf, int y_degree_checks) {
  const SimplicityVerdict verdict = shamsuddin_is_simple(sf);
  if (const auto* ns = std::get_if<NotSimple>(&verdict)) throw NotSimpleError(ns->witness);

  const Derivation d = sf.to_derivation();
  IsotropyCertificate cert;
  cert.form = sf;
  cert.steps.push_back(step_s1(sf, d, y_degree_checks));
  cert.steps.push_back(step_s2(sf));
  cert.steps.push_back(step_s3(sf, d));
  cert.steps.push_back(step_s4(sf));
  for (const auto& step : cert.steps) {
    for (const auto& check : step.checks) {
      if (!check.holds) throw std::logic_error("certificate step " + step.id + " failed: " + check.description);
    }
  }
  cert.conclusion = "trivial";
  return cert;
}

// ---------------------------------------------------------------------------
// Exhaustive search.

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  return r >= kPrime ? r - kPrime : r;
}

std::optional<std::uint64_t> to_mod(const BigRat& r) {
  const BigInt p(std::to_string(kPrime), 10);
  BigInt num;
  BigInt den;
  mpz_mod(num.get_mpz_t(), r.get_num_mpz_t(), p.get_mpz_t());
  mpz_mod(den.get_mpz_t(), r.get_den_mpz_t(), p.get_mpz_t());
  if (den == 0) return std::nullopt;
  mpz_invert(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  BigInt v = num * den;
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

std::uint64_t pow_mod(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = mul_mod(r, b);
  return r;
}

struct ModTerm {
  int x;
  int y;
  std::uint64_t c;
};

std::optional<std::vector<ModTerm>> to_mod(const BPoly& p) {
  std::vector<ModTerm> out;
  for (const auto& [m, c] : p.terms()) {
    auto v = to_mod(c);
    if (!v) return std::nullopt;
    out.push_back({m.x, m.y, *v});
  }
  return out;
}

std::uint64_t eval_mod(const std::vector<ModTerm>& p, std::uint64_t x, std::uint64_t y) {
  std::uint64_t acc = 0;
  for (const auto& t : p) acc = add_mod(acc, mul_mod(t.c, mul_mod(pow_mod(x, t.x), pow_mod(y, t.y))));
  return acc;
}

constexpr std::size_t kPoints = 3;
constexpr std::array<std::pair<std::uint64_t, std::uint64_t>, kPoints> kSamplePoints{{
    {0x1b873593a1c2e4f5ULL % kPrime, 0x0cc9e2d51f3b5a77ULL % kPrime},
    {0x165667b19e3779f9ULL % kPrime, 0x27d4eb2f165667c5ULL % kPrime},
    {0x085ebca6b2ae3d27ULL % kPrime, 0x1656ab39c2b2ae35ULL % kPrime},
}};

struct Sample {
  std::array<std::uint64_t, kPoints> value;
  std::array<std::uint64_t, kPoints> dx;
  std::array<std::uint64_t, kPoints> dy;
};

struct SearchSpace {
  std::vector<Monomial> monomials;
  std::vector<BigRat> grid;
  std::uint64_t count = 0;  // candidate polynomials per component

  std::vector<std::size_t> digits(std::uint64_t index) const {
    std::vector<std::size_t> d(monomials.size());
    for (auto& v : d) {
      v = static_cast<std::size_t>(index % grid.size());
      index /= grid.size();
    }
    return d;
  }

  BPoly polynomial(std::uint64_t index) const {
    const auto d = digits(index);
    BPoly::TermMap terms;
    for (std::size_t m = 0; m < monomials.size(); ++m) {
      if (grid[d[m]] != 0) terms.emplace(monomials[m], grid[d[m]]);
    }
    return BPoly(std::move(terms));
  }
};

std::vector<Sample> sample_candidates(const SearchSpace& space, const std::vector<std::uint64_t>& grid_mod) {
  // Monomial values and partials at each point.
  const std::size_t nm = space.monomials.size();
  std::vector<std::array<std::uint64_t, kPoints>> mv(nm);
  std::vector<std::array<std::uint64_t, kPoints>> mx(nm);
  std::vector<std::array<std::uint64_t, kPoints>> my(nm);
  for (std::size_t m = 0; m < nm; ++m) {
    const auto [i, j] = space.monomials[m];
    for (std::size_t k = 0; k < kPoints; ++k) {
      const auto [px, py] = kSamplePoints[k];
      mv[m][k] = mul_mod(pow_mod(px, i), pow_mod(py, j));
      mx[m][k] = i == 0 ? 0 : mul_mod(static_cast<std::uint64_t>(i), mul_mod(pow_mod(px, i - 1), pow_mod(py, j)));
      my[m][k] = j == 0 ? 0 : mul_mod(static_cast<std::uint64_t>(j), mul_mod(pow_mod(px, i), pow_mod(py, j - 1)));
    }
  }
  std::vector<Sample> out(space.count);
  for (std::uint64_t n = 0; n < space.count; ++n) {
    const auto d = space.digits(n);
    Sample s{};
    for (std::size_t m = 0; m < nm; ++m) {
      const std::uint64_t c = grid_mod[d[m]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < kPoints; ++k) {
        s.value[k] = add_mod(s.value[k], mul_mod(c, mv[m][k]));
        s.dx[k] = add_mod(s.dx[k], mul_mod(c, mx[m][k]));
        s.dy[k] = add_mod(s.dy[k], mul_mod(c, my[m][k]));
      }
    }
    out[n] = s;
  }
  return out;
}

}  // namespace

IsotropyEnumeration brute_force_isotropy(const Derivation& d, const SearchBox& box) {
  if (box.deg_bound < 1) throw std::invalid_argument("deg_bound must be at least 1");
  if (box.grid.empty()) throw std::invalid_argument("coefficient grid must be nonempty");

  SearchSpace space;
  for (int t = 0; t <= box.deg_bound; ++t) {
    for (int x = t; x >= 0; --x) space.monomials.push_back({x, t - x});
  }
  space.grid = box.grid;
  std::sort(space.grid.begin(), space.grid.end());
  space.grid.erase(std::unique(space.grid.begin(), space.grid.end()), space.grid.end());

  const double log_pairs = 2.0 * static_cast<double>(space.monomials.size()) * std::log2(static_cast<double>(space.grid.size()));
  if (log_pairs > 63.0) throw OperationError("search box too large");
  space.count = 1;
  for (std::size_t m = 0; m < space.monomials.size(); ++m) space.count *= space.grid.size();
  const std::uint64_t pairs = space.count * space.count;
  if (pairs > box.pair_budget) throw OperationError("search box too large");

  IsotropyEnumeration result;
  result.candidate_pairs = pairs;

  std::vector<std::uint64_t> grid_mod;
  auto dx_mod = to_mod(d.dx);
  auto dy_mod = to_mod(d.dy);
  bool modular = dx_mod && dy_mod;
  for (const BigRat& c : space.grid) {
    auto v = to_mod(c);
    if (!v) {
      modular = false;
      break;
    }
    grid_mod.push_back(*v);
  }

  auto exact_accept = [&](const PolyMap& rho) {
    const BPoly j = rho.jacobian_determinant();
    return j.is_constant() && !j.is_zero() && commutes(d, rho);
  };

  std::vector<std::uint64_t> f_candidates;
  std::vector<std::uint64_t> g_candidates;
  std::vector<Sample> samples;
  std::array<std::uint64_t, kPoints> dx_at{};
  std::array<std::uint64_t, kPoints> dy_at{};
  const bool dx_constant = d.dx.is_constant();
  const bool dy_constant = d.dy.is_constant();
  if (modular) {
    samples = sample_candidates(space, grid_mod);
    for (std::size_t k = 0; k < kPoints; ++k) {
      dx_at[k] = eval_mod(*dx_mod, kSamplePoints[k].first, kSamplePoints[k].second);
      dy_at[k] = eval_mod(*dy_mod, kSamplePoints[k].first, kSamplePoints[k].second);
    }
  }
  // D(p) at the sample points, from the partials.
  auto derivative_at = [&](const Sample& s, std::size_t k) {
    return add_mod(mul_mod(dx_at[k], s.dx[k]), mul_mod(dy_at[k], s.dy[k]));
  };
  // When D(x) (resp. D(y)) is a constant, the first (resp. second)
  // commutation identity only involves f (resp. g).
  auto component_filter = [&](bool constant_image, const std::vector<ModTerm>* image, std::vector<std::uint64_t>& keep) {
    const std::uint64_t c = modular && constant_image && !image->empty() ? image->front().c : 0;
    for (std::uint64_t n = 0; n < space.count; ++n) {
      if (modular && constant_image) {
        bool ok = true;
        for (std::size_t k = 0; k < kPoints && ok; ++k) ok = derivative_at(samples[n], k) == c;
        if (!ok) continue;
      }
      keep.push_back(n);
    }
  };
  component_filter(dx_constant, modular ? &*dx_mod : nullptr, f_candidates);
  component_filter(dy_constant, modular ? &*dy_mod : nullptr, g_candidates);

  auto scan = [&](std::size_t begin, std::size_t end) {
    std::vector<PolyMap> found;
    for (std::size_t fi = begin; fi < end; ++fi) {
      const std::uint64_t fn = f_candidates[fi];
      for (const std::uint64_t gn : g_candidates) {
        if (modular) {
          const Sample& sf = samples[fn];
          const Sample& sg = samples[gn];
          bool ok = true;
          std::uint64_t jac0 = 0;
          for (std::size_t k = 0; k < kPoints && ok; ++k) {
            const std::uint64_t jac = sub_mod(mul_mod(sf.dx[k], sg.dy[k]), mul_mod(sf.dy[k], sg.dx[k]));
            if (k == 0) {
              jac0 = jac;
            } else {
              ok = jac == jac0;
            }
            if (ok && !dx_constant) ok = eval_mod(*dx_mod, sf.value[k], sg.value[k]) == derivative_at(sf, k);
            if (ok && !dy_constant) ok = eval_mod(*dy_mod, sf.value[k], sg.value[k]) == derivative_at(sg, k);
          }
          if (!ok) continue;
        }
        PolyMap rho{space.polynomial(fn), space.polynomial(gn)};
        if (exact_accept(rho)) found.push_back(std::move(rho));
      }
    }
    return found;
  };

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, f_candidates.size()));
  const std::size_t chunk = (f_candidates.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<PolyMap>>> parts;
  for (std::size_t begin = 0; begin < f_candidates.size(); begin += chunk) {
    parts.push_back(std::async(std::launch::async, scan, begin, std::min(f_candidates.size(), begin + chunk)));
  }
  for (auto& part : parts) {
    auto maps = part.get();
    result.found.insert(result.found.end(), std::make_move_iterator(maps.begin()), std::make_move_iterator(maps.end()));
  }
  std::sort(result.found.begin(), result.found.end(), [](const PolyMap& a, const PolyMap& b) { return compare(a, b) < 0; });
  return result;
}

}  // namespace shamsuddin
