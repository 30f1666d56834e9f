#include <doctest.h>

#include "oracle.hpp"
#include "shamsuddin/expr.hpp"

using namespace shamsuddin;
using oracle::Naive;
using oracle::Q;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError("", {});
}

}  // namespace

TEST_CASE("parse polynomials") {
  const BPoly p = parse_poly("x^2*y - 3/2");
  CHECK(p.term_count() == 2);
  CHECK(p.coeff(2, 1) == 1);
  CHECK(p.coeff(0, 0) == BigRat(-3, 2));

  Naive xy{{{1, 0}, Q(1)}, {{0, 1}, Q(1)}};
  CHECK(oracle::same(parse_poly("(x+y)^2"), oracle::mul(xy, xy)));
  CHECK(parse_poly(" - -x") == BPoly::x());
  CHECK(parse_poly("x/2 + y/(1+1)") == BigRat(1, 2) * (BPoly::x() + BPoly::y()));
  CHECK(parse_poly("2^3*x^0") == BPoly::constant(BigRat(8)));
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("x - x").is_zero());
}

TEST_CASE("parse errors carry spans") {
  auto e = parse_failure("x^");
  CHECK(e.span() == SourceSpan{1, 2});
  CHECK(e.message().find("exponent") != std::string::npos);

  e = parse_failure("x + z");
  CHECK(e.span() == SourceSpan{4, 5});
  CHECK(e.message().find("unknown symbol") != std::string::npos);

  e = parse_failure("(x + y");
  CHECK(e.message().find("unbalanced") != std::string::npos);
  e = parse_failure("x + y)");
  CHECK(e.span() == SourceSpan{5, 6});

  e = parse_failure("x^-2");
  CHECK(e.message().find("negative exponent") != std::string::npos);
  e = parse_failure("x^(1/2)");
  CHECK(e.message().find("exponent") != std::string::npos);
  e = parse_failure("x^1.5");
  CHECK(e.span().start >= 2);

  e = parse_failure("   ");
  CHECK(e.message().find("empty") != std::string::npos);
  e = parse_failure("2x");
  CHECK(e.message().find("explicit") != std::string::npos);
  e = parse_failure("x/y");
  CHECK(e.span().end <= 3);
  e = parse_failure("x/0");
  CHECK_FALSE(e.message().empty());
}

TEST_CASE("render points at the span") {
  try {
    parse_poly("x^");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(render(e, "x^") == "missing exponent after '^' at 1..2\n  x^\n   ^");
  }
}

TEST_CASE("parse derivations") {
  const Derivation d = parse_derivation("shamsuddin a=x; b=1");
  CHECK(d.dx == BPoly::constant(BigRat(1)));
  CHECK(d.dy == parse_poly("x*y + 1"));
  const Derivation dx = parse_derivation("dx=1; dy=0");
  CHECK(dx.dx == BPoly::constant(BigRat(1)));
  CHECK(dx.dy.is_zero());
  CHECK(parse_derivation("dy = x ; dx = y;") == Derivation{BPoly::y(), BPoly::x()});
  CHECK_THROWS_WITH_AS(parse_derivation("shamsuddin a=y; b=1"), doctest::Contains("y not allowed"), ParseError);
  CHECK_THROWS_AS(parse_derivation("shamsuddin a=1; b=x*y"), ParseError);
  CHECK_THROWS_AS(parse_derivation("dx=1"), ParseError);
  CHECK_THROWS_AS(parse_derivation("dx=1; dx=2"), ParseError);
  CHECK_THROWS_AS(parse_derivation("dx=1; dy=x^"), ParseError);
}

TEST_CASE("parse maps") {
  const PolyMap m = parse_map("(x+y^2, y)");
  CHECK(m.f == parse_poly("x + y^2"));
  CHECK(m.g == BPoly::y());
  CHECK(parse_map("(x, y)").is_identity());
  CHECK_THROWS_WITH_AS(parse_map("(x)"), doctest::Contains("expected two components"), ParseError);
  CHECK_THROWS_AS(parse_map("(x, y, x)"), ParseError);
  CHECK_THROWS_AS(parse_map("x, y"), ParseError);
}

TEST_CASE("format") {
  CHECK(format(BPoly(BPoly::TermMap{{{1, 1}, BigRat(1)}, {{0, 0}, BigRat(-1)}})) == "x*y - 1");
  CHECK(format(PolyMap::identity()) == "(x, y)");
  CHECK(format(Derivation{BPoly::constant(BigRat(1)), parse_poly("x*y + 1")}) == "dx=1; dy=x*y + 1");
  CHECK(format(BPoly()) == "0");
  CHECK(format(parse_poly("-x^2*y + 1/3*y^2 - x + 2")) == "-x^2*y + 1/3*y^2 - x + 2");
  CHECK(format(parse_poly("y + x")) == "x + y");
}

TEST_CASE("property: format then parse is the identity") {
  oracle::Gen gen(7);
  for (int i = 0; i < 1000; ++i) {
    const BPoly p = oracle::to_bpoly(gen.poly(6, 8, 20));
    CHECK(parse_poly(format(p)) == p);
    const PolyMap m{p, oracle::to_bpoly(gen.poly(3, 4))};
    CHECK(parse_map(format(m)) == m);
  }
}

TEST_CASE("property: parsing random byte strings never crashes") {
  oracle::Gen gen(9);
  const std::string alphabet = "xy0123456789+-*/^() ,;=dxabshmuin\t.";
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    const int len = gen.uniform(0, 16);
    for (int k = 0; k < len; ++k) s += alphabet[gen.uniform(0, static_cast<int>(alphabet.size()) - 1)];
    try {
      (void)parse_poly(s);
    } catch (const ParseError& e) {
      CHECK_FALSE(e.message().empty());
      CHECK(e.span().start <= e.span().end);
      CHECK(e.span().end <= s.size());
    }
    try {
      (void)parse_map(s);
    } catch (const ParseError& e) {
      CHECK(e.span().end <= s.size());
    }
    try {
      (void)parse_derivation(s);
    } catch (const ParseError& e) {
      CHECK(e.span().end <= s.size());
    }
  }
}

TEST_CASE("deep nesting and huge exponents are rejected, not crashed on") {
  CHECK_THROWS_AS(parse_poly(std::string(5000, '(') + "x" + std::string(5000, ')')), ParseError);
  CHECK_THROWS_AS(parse_poly("x^100000000000000000000"), ParseError);
  CHECK_THROWS_AS(parse_poly("(x^600)*(y^600)"), ParseError);
}
