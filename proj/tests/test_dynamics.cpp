#include <doctest.h>

#include "oracle.hpp"
#include "shamsuddin/dynamics.hpp"
#include "shamsuddin/expr.hpp"

using namespace shamsuddin;
using oracle::Naive;

namespace {

PolyMap M(const char* s) { return parse_map(s); }

PolyMap random_map(oracle::Gen& gen, int deg, int terms) {
  return PolyMap{oracle::to_bpoly(gen.poly(deg, terms, 3)), oracle::to_bpoly(gen.poly(deg, terms, 3))};
}

}  // namespace

TEST_CASE("validate_automorphism") {
  auto v = validate_automorphism(M("(x + y^2, y)"));
  REQUIRE(std::holds_alternative<AutomorphismCert>(v));
  const auto& cert = std::get<AutomorphismCert>(v);
  // [[1, 2y], [0, 1]]
  CHECK(cert.jacobian_det == 1 * 1 - 0 * 2);
  REQUIRE(cert.inverse.has_value());
  CHECK(*cert.inverse == M("(x - y^2, y)"));
  CHECK(cert.verify());

  v = validate_automorphism(M("(x^2, y)"));
  REQUIRE(std::holds_alternative<AutomorphismRejection>(v));
  CHECK(std::get<AutomorphismRejection>(v).jacobian_det == parse_poly("2*x"));

  v = validate_automorphism(M("(x + 1, 2*y)"));
  REQUIRE(std::holds_alternative<AutomorphismCert>(v));
  CHECK(std::get<AutomorphismCert>(v).jacobian_det == 2);
  CHECK(std::get<AutomorphismCert>(v).inverse == M("(x - 1, y/2)"));

  v = validate_automorphism(M("(x, 0)"));
  REQUIRE(std::holds_alternative<AutomorphismRejection>(v));
  CHECK(std::get<AutomorphismRejection>(v).jacobian_det.is_zero());
}

TEST_CASE("tame inverses of compositions") {
  // Henon-type map and a nested triangular composition.
  for (const char* spec : {"(y, y^2 + x)", "(x + (y + x^2)^2, y + x^2)", "(2*y + 1, -x + y^3)"}) {
    const PolyMap m = M(spec);
    const auto v = validate_automorphism(m);
    REQUIRE(std::holds_alternative<AutomorphismCert>(v));
    const auto& cert = std::get<AutomorphismCert>(v);
    REQUIRE(cert.inverse.has_value());
    CHECK(compose(m, *cert.inverse).is_identity());
    CHECK(compose(*cert.inverse, m).is_identity());
    CHECK_FALSE(cert.necessary_condition_only());
  }
  // Constant Jacobian but not built from the recognized pieces: degree pair (2, 3).
  const PolyMap odd{parse_poly("x + y^2"), parse_poly("x^3")};
  const auto v = validate_automorphism(odd);
  if (std::holds_alternative<AutomorphismCert>(v)) {
    CHECK(std::get<AutomorphismCert>(v).necessary_condition_only());
  }
}

TEST_CASE("compose") {
  const PolyMap rho = M("(x^2 + y, x*y - 3)");
  CHECK(compose(rho, PolyMap::identity()) == rho);
  CHECK(compose(PolyMap::identity(), rho) == rho);
  CHECK(compose(M("(x + 1, y)"), M("(x + 1, y)")) == M("(x + 2, y)"));
  const PolyMap h = M("(y, y^2 + x)");
  const Naive f = oracle::from_bpoly(h.f), g = oracle::from_bpoly(h.g);
  const PolyMap hh = compose(h, h);
  CHECK(oracle::same(hh.f, oracle::subst(f, f, g)));
  CHECK(oracle::same(hh.g, oracle::subst(g, f, g)));
  CHECK(hh == M("(y^2 + x, (y^2 + x)^2 + y)"));
}

TEST_CASE("degree_sequence") {
  auto est = degree_sequence(M("(x + 1, y)"), 5);
  CHECK(est.degree_sequence == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(est.bounded);
  CHECK(est.delta_estimate == 1);

  est = degree_sequence(M("(y, y^2 + x)"), 6);
  CHECK(est.degree_sequence == std::vector<int>{2, 4, 8, 16, 32, 64});
  CHECK_FALSE(est.bounded);
  CHECK(est.delta_estimate == 2);
  for (std::size_t n = 0; n < est.per_step_roots.size(); ++n) CHECK(est.per_step_roots[n] == doctest::Approx(2.0));

  est = degree_sequence(M("(x + y^2, y)"), 5);
  CHECK(est.degree_sequence == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(est.bounded);

  est = degree_sequence(M("(x^2, y)"), 1);
  CHECK(est.degree_sequence == std::vector<int>{2});
  CHECK(est.bounded);
  CHECK_THROWS_AS(degree_sequence(M("(x, y)"), 0), std::invalid_argument);
}

TEST_CASE("iteration blow-up reports the last completed step") {
  try {
    degree_sequence(M("(y, y^2 + x)"), 10, 200);
    FAIL("expected blow-up");
  } catch (const IterationBlowUp& e) {
    CHECK(e.last_completed() >= 1);
    CHECK(e.last_completed() < 10);
    CHECK(std::string(e.what()).find("iteration blow-up") != std::string::npos);
  }
}

TEST_CASE("fixed_points") {
  auto r = fixed_points(M("(x + 1, y)"));
  CHECK(r.rational_points.empty());
  CHECK(r.closure_verdict == ClosureVerdict::NoneOverClosure);

  r = fixed_points(M("(-x, -y)"));
  CHECK(r.rational_points == std::vector<std::pair<BigRat, BigRat>>{{BigRat(0), BigRat(0)}});
  CHECK(r.closure_verdict == ClosureVerdict::ExistsOverClosure);

  r = fixed_points(M("(y, x)"));
  CHECK(r.closure_verdict == ClosureVerdict::InfinitelyMany);

  CHECK_THROWS_WITH_AS(fixed_points(PolyMap::identity()), "identity map: every point fixed", OperationError);

  // y^2 + x - y = 0 and y - x = 0 give x^2 = 0; (0, 0) only.
  r = fixed_points(M("(y, y^2 + x)"));
  CHECK(r.rational_points == std::vector<std::pair<BigRat, BigRat>>{{BigRat(0), BigRat(0)}});

  // Fixed points of (x + y^2 - 2, y + x - 1) lie on y^2 = 2: irrational only.
  r = fixed_points(M("(x + y^2 - 2, y + x - 1)"));
  CHECK(r.rational_points.empty());
  CHECK(r.closure_verdict == ClosureVerdict::ExistsOverClosure);

  // x fixed everywhere, y -> y + 1 never: no fixed points at all.
  r = fixed_points(M("(x, y + 1)"));
  CHECK(r.closure_verdict == ClosureVerdict::NoneOverClosure);

  // f - x = x*(y - 1) and g - y = x*y share the factor x.
  r = fixed_points(M("(x*y, y + x*y)"));
  CHECK(r.closure_verdict == ClosureVerdict::InfinitelyMany);
}

TEST_CASE("order_detect") {
  CHECK(order_detect(M("(-x, -y)"), 10) == 2);
  CHECK(order_detect(M("(y, -x)"), 10) == 4);
  CHECK_FALSE(order_detect(M("(x + 1, y)"), 10).has_value());
  CHECK(order_detect(PolyMap::identity(), 1) == 1);
  CHECK(order_detect(M("(y, -x - y)"), 10) == 3);
  CHECK_FALSE(order_detect(M("(y, -x)"), 3).has_value());
}

TEST_CASE("property: degree of a composition is submultiplicative") {
  oracle::Gen gen(401);
  for (int i = 0; i < 300; ++i) {
    const PolyMap r = random_map(gen, 3, 4), s = random_map(gen, 3, 4);
    const auto dr = r.degree(), ds = s.degree(), drs = compose(r, s).degree();
    if (!dr || !ds || !drs) continue;
    CHECK(*drs <= *dr * *ds);
  }
}

TEST_CASE("property: rational fixed points re-verify") {
  oracle::Gen gen(403);
  int with_points = 0;
  for (int i = 0; i < 300; ++i) {
    PolyMap m = random_map(gen, 2, 3);
    // Plant a fixed point at a random rational (u, v).
    const BigRat u = gen.rat(4), v = gen.rat(4);
    m.f += BPoly::constant(u - m.f.evaluate(u, v));
    m.g += BPoly::constant(v - m.g.evaluate(u, v));
    if (m.is_identity()) continue;
    const FixedPointReport r = fixed_points(m);
    if (r.closure_verdict == ClosureVerdict::InfinitelyMany) continue;
    CHECK(std::find(r.rational_points.begin(), r.rational_points.end(), std::make_pair(u, v)) !=
          r.rational_points.end());
    CHECK(r.closure_verdict == ClosureVerdict::ExistsOverClosure);
    for (const auto& [x0, y0] : r.rational_points) {
      CHECK(m.f.evaluate(x0, y0) == x0);
      CHECK(m.g.evaluate(x0, y0) == y0);
    }
    with_points += !r.rational_points.empty();
  }
  CHECK(with_points > 200);
}

TEST_CASE("property: finite order implies periodic bounded degrees") {
  for (const char* spec : {"(-x, -y)", "(y, -x)", "(y, -x - y)", "(-x + y^2, y)", "(y, x)"}) {
    const PolyMap m = M(spec);
    const auto n = order_detect(m, 12);
    REQUIRE(n.has_value());
    const auto est = degree_sequence(m, 3 * *n);
    const auto& seq = est.degree_sequence;
    for (std::size_t k = *n; k < seq.size(); ++k) CHECK(seq[k] == seq[k - *n]);
    // The flag looks at a constant tail, so it is only forced when the period's degrees agree.
    if (std::all_of(seq.begin(), seq.begin() + *n, [&](int d) { return d == seq.front(); })) CHECK(est.bounded);
  }
}
