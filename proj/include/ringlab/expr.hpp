#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/descriptor.hpp"
#include "ringlab/ring.hpp"

namespace ringlab::expr {

struct Span {
  size_t begin = 0;
  size_t end = 0;
};

// Syntax error with a byte offset into the input.
class ParseError : public RingError {
 public:
  ParseError(size_t offset, const std::string& msg)
      : RingError("offset " + std::to_string(offset) + ": " + msg), offset(offset) {}
  size_t offset;
};

// Elaboration error carrying the offending node's source offset.
class ElabError : public RingError {
 public:
  ElabError(size_t offset, const std::string& msg)
      : RingError("offset " + std::to_string(offset) + ": " + msg), offset(offset) {}
  size_t offset;
};

// One polynomial term: [sign] coeff * x^exp. The sign is stored separately
// so the grammar's "term - term" form round-trips exactly; the first term
// of a polynomial is never negated.
struct PolyTerm {
  bool negated = false;
  int64_t coeff = 1;
  int exp = 0;
  Span span;
};

struct PolyLit {
  std::vector<PolyTerm> terms;
  Span span;
};

struct ModAtom {
  enum class Kind { self, self_pow, self_quot };
  Kind kind = Kind::self;
  int64_t power = 1;                   // self_pow
  std::vector<int64_t> annihilators;   // self_quot
  Span span;
};

struct Ast;
using AstPtr = std::shared_ptr<Ast>;

struct Ast {
  enum class Kind { zmod, product, quotient, trivial };
  Kind kind = Kind::zmod;
  int64_t n = 0;                  // zmod
  std::vector<AstPtr> children;   // product factors; quotient/trivial base at [0]
  PolyLit poly;                   // quotient modulus
  std::vector<ModAtom> module;    // trivial module summands
  Span span;
};

// Structural equality, spans ignored.
bool ast_equal(const Ast& a, const Ast& b);

// Recursive-descent parser for the ring DSL; throws ParseError.
AstPtr parse(std::string_view text);

// Canonical text; parse(unparse(a)) is structurally equal to a.
std::string unparse(const Ast& a);

// Pure syntax translation (no size checks).
DescPtr ast_to_descriptor(const Ast& a);

// Realizes the AST, attaching source offsets to construction errors
// (non-monic modulus, out-of-range n, size overflow); throws ElabError.
FiniteRing elaborate(const Ast& a, size_t cap = kDefaultRingCap);

// parse + elaborate.
FiniteRing elaborate_text(std::string_view text, size_t cap = kDefaultRingCap);

}  // namespace ringlab::expr
