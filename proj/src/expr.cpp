#include "ringlab/expr.hpp"

#include <cctype>

#include "ringlab/constructions.hpp"
#include "ringlab/factor.hpp"
#include "ringlab/module.hpp"

namespace ringlab::expr {

namespace {

struct Token {
  enum class Kind { ident, integer, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  size_t offset = 0;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::ident, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits(text.substr(i, j - i));
      if (digits.size() > 15)
        throw ParseError(i, "integer literal too large");
      out.push_back({Token::Kind::integer, std::move(digits), i});
      i = j;
      continue;
    }
    // "(+)" is one token (the module sum separator)
    if (c == '(' && i + 2 < text.size() && text[i + 1] == '+' && text[i + 2] == ')') {
      out.push_back({Token::Kind::symbol, "(+)", i});
      i += 3;
      continue;
    }
    if (std::string_view("/()[]*+-^,").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::end, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  AstPtr run() {
    AstPtr a = parse_expr();
    if (!at_end())
      throw ParseError(peek().offset, "expected end of input or '*', got '" +
                                          describe(peek()) + "'");
    return a;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  const Token& advance() { return toks_[pos_++]; }

  static std::string describe(const Token& t) {
    return t.kind == Token::Kind::end ? "end of input" : t.text;
  }

  bool match_sym(std::string_view s) {
    if (peek().kind == Token::Kind::symbol && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_sym(std::string_view s) const {
    return peek().kind == Token::Kind::symbol && peek().text == s;
  }
  bool peek_ident(std::string_view s) const {
    return peek().kind == Token::Kind::ident && peek().text == s;
  }

  const Token& expect_sym(std::string_view s) {
    if (!peek_sym(s))
      throw ParseError(peek().offset, "expected '" + std::string(s) + "', got '" +
                                          describe(peek()) + "'");
    return advance();
  }
  const Token& expect_ident(std::string_view s) {
    if (!peek_ident(s))
      throw ParseError(peek().offset, "expected '" + std::string(s) + "', got '" +
                                          describe(peek()) + "'");
    return advance();
  }

  int64_t expect_int(const char* what) {
    if (peek().kind != Token::Kind::integer)
      throw ParseError(peek().offset, std::string("expected ") + what + ", got '" +
                                          describe(peek()) + "'");
    const Token& t = advance();
    return std::stoll(t.text);
  }

  size_t here() const { return peek().offset; }
  size_t prev_end() const {
    const Token& t = toks_[pos_ - 1];
    return t.offset + t.text.size();
  }

  AstPtr parse_expr() {
    size_t begin = here();
    std::vector<AstPtr> factors;
    factors.push_back(parse_postfix_atom());
    while (match_sym("*")) factors.push_back(parse_postfix_atom());
    if (factors.size() == 1) return factors[0];
    auto node = std::make_shared<Ast>();
    node->kind = Ast::Kind::product;
    node->children = std::move(factors);
    node->span = {begin, prev_end()};
    return node;
  }

  AstPtr parse_postfix_atom() {
    size_t begin = here();
    AstPtr a = parse_atom();
    while (peek_sym("[")) {
      advance();
      expect_ident("x");
      expect_sym("]");
      expect_sym("/");
      expect_sym("(");
      PolyLit poly = parse_poly();
      expect_sym(")");
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::quotient;
      node->children.push_back(std::move(a));
      node->poly = std::move(poly);
      node->span = {begin, prev_end()};
      a = std::move(node);
    }
    return a;
  }

  AstPtr parse_atom() {
    size_t begin = here();
    if (peek_ident("Z")) {
      advance();
      expect_sym("/");
      int64_t n = expect_int("a modulus");
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::zmod;
      node->n = n;
      node->span = {begin, prev_end()};
      return node;
    }
    if (peek_ident("GF")) {
      advance();
      expect_sym("(");
      size_t int_off = here();
      int64_t p = expect_int("a prime");
      if (!is_prime(p))
        throw ParseError(int_off, std::to_string(p) + " is not prime");
      expect_sym(")");
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::zmod;
      node->n = p;
      node->span = {begin, prev_end()};
      return node;
    }
    if (peek_ident("triv")) {
      advance();
      expect_sym("(");
      AstPtr base = parse_expr();
      expect_sym(",");
      std::vector<ModAtom> module;
      module.push_back(parse_modatom());
      while (match_sym("(+)")) module.push_back(parse_modatom());
      expect_sym(")");
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::trivial;
      node->children.push_back(std::move(base));
      node->module = std::move(module);
      node->span = {begin, prev_end()};
      return node;
    }
    if (match_sym("(")) {
      AstPtr inner = parse_expr();
      expect_sym(")");
      return inner;
    }
    throw ParseError(here(), "expected 'Z', 'GF', 'triv', or '(', got '" +
                                 describe(peek()) + "'");
  }

  ModAtom parse_modatom() {
    ModAtom atom;
    atom.span.begin = here();
    expect_ident("self");
    if (match_sym("^")) {
      atom.kind = ModAtom::Kind::self_pow;
      atom.power = expect_int("a power");
    } else if (match_sym("/")) {
      atom.kind = ModAtom::Kind::self_quot;
      expect_sym("(");
      atom.annihilators.push_back(expect_int("an annihilator"));
      while (match_sym(",")) atom.annihilators.push_back(expect_int("an annihilator"));
      expect_sym(")");
    }
    atom.span.end = prev_end();
    return atom;
  }

  PolyLit parse_poly() {
    PolyLit poly;
    poly.span.begin = here();
    poly.terms.push_back(parse_term(false));
    while (true) {
      if (match_sym("+")) poly.terms.push_back(parse_term(false));
      else if (match_sym("-")) poly.terms.push_back(parse_term(true));
      else break;
    }
    poly.span.end = prev_end();
    return poly;
  }

  PolyTerm parse_term(bool negated) {
    PolyTerm t;
    t.negated = negated;
    t.span.begin = here();
    if (peek().kind == Token::Kind::integer) {
      t.coeff = expect_int("a coefficient");
      bool star = match_sym("*");
      if (star || peek_ident("x")) {
        expect_ident("x");
        t.exp = parse_exponent();
      } else {
        t.exp = 0;
      }
    } else if (peek_ident("x")) {
      advance();
      t.coeff = 1;
      t.exp = parse_exponent();
    } else {
      throw ParseError(here(), "expected a polynomial term, got '" +
                                   describe(peek()) + "'");
    }
    t.span.end = prev_end();
    return t;
  }

  int parse_exponent() {
    if (!match_sym("^")) return 1;
    size_t off = here();
    int64_t e = expect_int("an exponent");
    if (e > 64) throw ParseError(off, "exponent too large");
    return static_cast<int>(e);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

std::string poly_lit_text(const PolyLit& p) {
  std::string out;
  for (size_t i = 0; i < p.terms.size(); ++i) {
    const PolyTerm& t = p.terms[i];
    if (i) out += t.negated ? "-" : "+";
    if (t.exp == 0) {
      out += std::to_string(t.coeff);
    } else {
      std::string xs = t.exp == 1 ? "x" : "x^" + std::to_string(t.exp);
      out += t.coeff == 1 ? xs : std::to_string(t.coeff) + "*" + xs;
    }
  }
  return out;
}

std::string modatom_text(const ModAtom& a) {
  switch (a.kind) {
    case ModAtom::Kind::self: return "self";
    case ModAtom::Kind::self_pow: return "self^" + std::to_string(a.power);
    case ModAtom::Kind::self_quot: {
      std::string out = "self/(";
      for (size_t i = 0; i < a.annihilators.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a.annihilators[i]);
      }
      return out + ")";
    }
  }
  return "";
}

std::vector<int64_t> poly_coeffs(const PolyLit& p) {
  size_t deg = 0;
  for (const PolyTerm& t : p.terms) deg = std::max(deg, static_cast<size_t>(t.exp));
  std::vector<int64_t> out(deg + 1, 0);
  for (const PolyTerm& t : p.terms)
    out[static_cast<size_t>(t.exp)] += t.negated ? -t.coeff : t.coeff;
  return out;
}

}  // namespace

bool ast_equal(const Ast& a, const Ast& b) {
  if (a.kind != b.kind || a.n != b.n) return false;
  if (a.children.size() != b.children.size()) return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!ast_equal(*a.children[i], *b.children[i])) return false;
  if (a.poly.terms.size() != b.poly.terms.size()) return false;
  for (size_t i = 0; i < a.poly.terms.size(); ++i) {
    const PolyTerm &x = a.poly.terms[i], &y = b.poly.terms[i];
    if (x.negated != y.negated || x.coeff != y.coeff || x.exp != y.exp) return false;
  }
  if (a.module.size() != b.module.size()) return false;
  for (size_t i = 0; i < a.module.size(); ++i) {
    const ModAtom &x = a.module[i], &y = b.module[i];
    if (x.kind != y.kind || x.power != y.power || x.annihilators != y.annihilators)
      return false;
  }
  return true;
}

AstPtr parse(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty input");
  return Parser(text).run();
}

std::string unparse(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::zmod:
      return "Z/" + std::to_string(a.n);
    case Ast::Kind::product: {
      std::string out;
      for (size_t i = 0; i < a.children.size(); ++i) {
        if (i) out += " * ";
        std::string t = unparse(*a.children[i]);
        out += a.children[i]->kind == Ast::Kind::product ? "(" + t + ")" : t;
      }
      return out;
    }
    case Ast::Kind::quotient: {
      std::string bt = unparse(*a.children[0]);
      if (a.children[0]->kind == Ast::Kind::product) bt = "(" + bt + ")";
      return bt + "[x]/(" + poly_lit_text(a.poly) + ")";
    }
    case Ast::Kind::trivial: {
      std::string out = "triv(" + unparse(*a.children[0]) + ", ";
      for (size_t i = 0; i < a.module.size(); ++i) {
        if (i) out += " (+) ";
        out += modatom_text(a.module[i]);
      }
      return out + ")";
    }
  }
  return "";
}

DescPtr ast_to_descriptor(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::zmod:
      return RingDescriptor::zmod(a.n);
    case Ast::Kind::product: {
      std::vector<DescPtr> fs;
      fs.reserve(a.children.size());
      for (const auto& c : a.children) fs.push_back(ast_to_descriptor(*c));
      return RingDescriptor::product(std::move(fs));
    }
    case Ast::Kind::quotient:
      return RingDescriptor::poly_quotient(ast_to_descriptor(*a.children[0]),
                                           poly_coeffs(a.poly));
    case Ast::Kind::trivial: {
      ModuleSpec spec;
      for (const ModAtom& atom : a.module) {
        if (atom.kind == ModAtom::Kind::self_quot) {
          spec.components.push_back({atom.annihilators});
        } else {
          int64_t copies = atom.kind == ModAtom::Kind::self ? 1 : atom.power;
          for (int64_t i = 0; i < copies; ++i) spec.components.push_back({{}});
        }
      }
      return RingDescriptor::trivial_ext(ast_to_descriptor(*a.children[0]),
                                         std::move(spec));
    }
  }
  throw RingError("unknown ast kind");
}

FiniteRing elaborate(const Ast& a, size_t cap) {
  switch (a.kind) {
    case Ast::Kind::zmod:
      try {
        return make_zmod(a.n, cap);
      } catch (const RingError& e) {
        throw ElabError(a.span.begin, e.what());
      }
    case Ast::Kind::product: {
      std::vector<FiniteRing> factors;
      factors.reserve(a.children.size());
      for (const auto& c : a.children) factors.push_back(elaborate(*c, cap));
      try {
        return make_product(std::move(factors), cap);
      } catch (const RingError& e) {
        throw ElabError(a.span.begin, e.what());
      }
    }
    case Ast::Kind::quotient: {
      FiniteRing base = elaborate(*a.children[0], cap);
      try {
        return make_poly_quotient_int(base, poly_coeffs(a.poly), cap);
      } catch (const RingError& e) {
        throw ElabError(a.poly.span.begin, e.what());
      }
    }
    case Ast::Kind::trivial: {
      FiniteRing base = elaborate(*a.children[0], cap);
      for (const ModAtom& atom : a.module)
        if (atom.kind == ModAtom::Kind::self_pow && atom.power < 1)
          throw ElabError(atom.span.begin, "module power must be >= 1");
      ModuleSpec spec;
      for (const ModAtom& atom : a.module) {
        if (atom.kind == ModAtom::Kind::self_quot) {
          spec.components.push_back({atom.annihilators});
        } else {
          int64_t copies = atom.kind == ModAtom::Kind::self ? 1 : atom.power;
          for (int64_t i = 0; i < copies; ++i) spec.components.push_back({{}});
        }
      }
      try {
        FiniteModule mod = make_module(base, spec, cap);
        return make_trivial_extension(base, mod, cap);
      } catch (const RingError& e) {
        throw ElabError(a.span.begin, e.what());
      }
    }
  }
  throw RingError("unknown ast kind");
}

FiniteRing elaborate_text(std::string_view text, size_t cap) {
  return elaborate(*parse(text), cap);
}

}  // namespace ringlab::expr
