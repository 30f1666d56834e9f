#include "shamsuddin/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace shamsuddin {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Semicolon, Equals, End };

struct Token {
  Tok kind;
  SourceSpan span;
  std::string_view text;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Number, {start, i}, text.substr(start, i - start)});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({Tok::Ident, {start, i}, text.substr(start, i - start)});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semicolon; break;
      case '=': kind = Tok::Equals; break;
      default:
        throw ParseError("unknown symbol '" + std::string(1, text[i]) + "'", {start, start + 1});
    }
    ++i;
    out.push_back({kind, {start, i}, text.substr(start, 1)});
  }
  out.push_back({Tok::End, {text.size(), text.size()}, {}});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::End ? std::string("end of input") : "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at(Tok k) const { return peek().kind == k; }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) throw ParseError(std::string("expected ") + what + ", found " + describe(peek()), peek().span);
    return next();
  }

  // A polynomial expression; returns its value and span.
  std::pair<BPoly, SourceSpan> expression() {
    const SourceSpan start = peek().span;
    BPoly value = expr(0);
    return {std::move(value), {start.start, last_end_}};
  }

  [[noreturn]] void unexpected() const {
    const Token& t = peek();
    if (t.kind == Tok::RParen) throw ParseError("unbalanced parentheses: unexpected ')'", t.span);
    if (t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::LParen) {
      throw ParseError("missing operator before " + describe(t) + " (multiplication must be explicit)", t.span);
    }
    throw ParseError("unexpected " + describe(t), t.span);
  }

 private:
  static constexpr int kMaxDepth = 200;

  const Token& consume() {
    const Token& t = next();
    last_end_ = t.span.end;
    return t;
  }

  void enter(int depth, SourceSpan span) const {
    if (depth > kMaxDepth) throw ParseError("expression nested too deeply", span);
  }

  static void check_degree(const BPoly& p, SourceSpan span) {
    if (p.degree().value_or(0) > kMaxParsedDegree) throw ParseError("degree too large", span);
  }

  BPoly expr(int depth) {
    enter(depth, peek().span);
    BPoly acc = term(depth);
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const bool minus = consume().kind == Tok::Minus;
      BPoly rhs = term(depth);
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  BPoly term(int depth) {
    const std::size_t start = peek().span.start;
    BPoly acc = unary(depth);
    while (at(Tok::Star) || at(Tok::Slash)) {
      const bool divide = consume().kind == Tok::Slash;
      const std::size_t rhs_start = peek().span.start;
      BPoly rhs = unary(depth);
      const SourceSpan rhs_span{rhs_start, last_end_};
      if (divide) {
        if (!rhs.is_constant()) throw ParseError("division by a non-constant polynomial", rhs_span);
        if (rhs.is_zero()) throw ParseError("division by zero", rhs_span);
        acc *= 1 / rhs.constant_term();
      } else {
        if (acc.degree().value_or(0) + rhs.degree().value_or(0) > kMaxParsedDegree) {
          throw ParseError("degree too large", {start, last_end_});
        }
        acc = acc * rhs;
      }
    }
    return acc;
  }

  BPoly unary(int depth) {
    enter(depth, peek().span);
    if (at(Tok::Minus)) {
      consume();
      return -unary(depth + 1);
    }
    if (at(Tok::Plus)) {
      consume();
      return unary(depth + 1);
    }
    return power(depth);
  }

  BPoly power(int depth) {
    const std::size_t start = peek().span.start;
    BPoly base = primary(depth);
    if (!at(Tok::Caret)) return base;
    const Token caret = consume();
    const Token& e = peek();
    if (e.kind == Tok::Minus) throw ParseError("negative exponent", e.span);
    if (e.kind == Tok::End || e.kind == Tok::RParen || e.kind == Tok::Comma || e.kind == Tok::Semicolon ||
        e.kind == Tok::Plus || e.kind == Tok::Star || e.kind == Tok::Slash || e.kind == Tok::Caret) {
      throw ParseError("missing exponent after '^'", caret.span);
    }
    if (e.kind != Tok::Number) throw ParseError("exponent must be a nonnegative integer literal", e.span);
    consume();
    if (e.text.size() > 6 || std::stoi(std::string(e.text)) > kMaxParsedDegree) {
      throw ParseError("exponent too large", e.span);
    }
    const int exponent = std::stoi(std::string(e.text));
    if (base.degree().value_or(0) * exponent > kMaxParsedDegree) throw ParseError("degree too large", {start, last_end_});
    return base.pow(static_cast<unsigned>(exponent));
  }

  BPoly primary(int depth) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        consume();
        return BPoly::constant(BigRat(BigInt(std::string(t.text), 10)));
      }
      case Tok::Ident: {
        consume();
        if (t.text == "x") return BPoly::x();
        if (t.text == "y") return BPoly::y();
        throw ParseError("unknown symbol '" + std::string(t.text) + "'", t.span);
      }
      case Tok::LParen: {
        const Token open = consume();
        BPoly inner = expr(depth + 1);
        if (!at(Tok::RParen)) {
          if (at(Tok::End)) throw ParseError("unbalanced parentheses: missing ')'", open.span);
          unexpected();
        }
        consume();
        check_degree(inner, {open.span.start, last_end_});
        return inner;
      }
      case Tok::End:
        throw ParseError(pos_ == 0 ? "empty input" : "unexpected end of input", t.span);
      case Tok::RParen:
        throw ParseError("unbalanced parentheses: unexpected ')'", t.span);
      default:
        throw ParseError("expected a number, 'x', 'y' or '(', found " + describe(t), t.span);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_end_ = 0;
};

}  // namespace

BPoly parse_poly(std::string_view text) {
  Parser p(text);
  auto [value, span] = p.expression();
  if (!p.at(Tok::End)) p.unexpected();
  return value;
}

Derivation parse_derivation(std::string_view text) {
  Parser p(text);
  if (p.at(Tok::End)) throw ParseError("empty input", p.peek().span);

  const bool shorthand = p.at(Tok::Ident) && p.peek().text == "shamsuddin";
  if (shorthand) p.next();
  const std::string_view first_key = shorthand ? "a" : "dx";
  const std::string_view second_key = shorthand ? "b" : "dy";

  std::optional<BPoly> first;
  std::optional<BPoly> second;
  while (!p.at(Tok::End)) {
    const Token key = p.peek();
    if (key.kind != Tok::Ident || (key.text != first_key && key.text != second_key)) {
      throw ParseError("expected '" + std::string(first_key) + "=' or '" + std::string(second_key) + "=', found " +
                           describe(key),
                       key.span);
    }
    p.next();
    auto& slot = key.text == first_key ? first : second;
    if (slot) throw ParseError("duplicate '" + std::string(key.text) + "'", key.span);
    p.expect(Tok::Equals, "'='");
    auto [value, span] = p.expression();
    if (shorthand && value.involves(Var::y)) {
      throw ParseError("y not allowed in shorthand coefficient '" + std::string(key.text) + "'", span);
    }
    slot = std::move(value);
    if (p.at(Tok::Semicolon)) {
      p.next();
    } else if (!p.at(Tok::End)) {
      p.unexpected();
    }
  }
  if (!first) throw ParseError("missing '" + std::string(first_key) + "='", p.peek().span);
  if (!second) throw ParseError("missing '" + std::string(second_key) + "='", p.peek().span);

  if (shorthand) return ShamsuddinForm{*first->as_upoly(Var::x), *second->as_upoly(Var::x)}.to_derivation();
  return Derivation{std::move(*first), std::move(*second)};
}

PolyMap parse_map(std::string_view text) {
  Parser p(text);
  if (p.at(Tok::End)) throw ParseError("empty input", p.peek().span);
  const Token open = p.expect(Tok::LParen, "'('");
  auto [f, f_span] = p.expression();
  if (p.at(Tok::RParen)) throw ParseError("expected two components", {open.span.start, p.peek().span.end});
  if (p.at(Tok::End)) throw ParseError("unbalanced parentheses: missing ')'", open.span);
  p.expect(Tok::Comma, "','");
  auto [g, g_span] = p.expression();
  if (p.at(Tok::Comma)) throw ParseError("expected two components", p.peek().span);
  if (p.at(Tok::End)) throw ParseError("unbalanced parentheses: missing ')'", open.span);
  if (!p.at(Tok::RParen)) p.unexpected();
  p.next();
  if (!p.at(Tok::End)) p.unexpected();
  return PolyMap{std::move(f), std::move(g)};
}

std::string format(const BPoly& p) { return to_string(p); }

std::string format(const UPoly& p, char var) { return format_upoly(p, var); }

std::string format(const Derivation& d) { return "dx=" + format(d.dx) + "; dy=" + format(d.dy); }

std::string format(const PolyMap& m) { return "(" + format(m.f) + ", " + format(m.g) + ")"; }

std::string render(const ParseError& e, std::string_view text) {
  const SourceSpan s = e.span();
  std::string out = e.message() + " at " + std::to_string(s.start) + ".." + std::to_string(s.end) + "\n  ";
  out += text;
  out += "\n  ";
  out += std::string(s.start, ' ');
  out += std::string(std::max<std::size_t>(1, s.end - s.start), '^');
  return out;
}

}  // namespace shamsuddin
