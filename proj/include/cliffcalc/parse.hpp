#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cliffcalc/errors.hpp"
#include "cliffcalc/multivector.hpp"

namespace cliffcalc {

// Unary named operators accepted by the grammar.
enum class ExprFunc { Reverse, GradeInvolution, CliffordConjugation, ComplexConjugate, Hermitian };

// Abstract syntax for multivector expressions.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := complex | blade | '(' expr ')' | func '(' expr ')'
//   complex:= decimal | decimal? 'i'
//   blade  := 'e' digit+          (distinct indices 1..n, any order)
//   func   := 'rev'|'gi'|'cc'|'conj'|'herm'
//
// Precedence: ^ > unary minus > * > binary +/-.
struct ExprNode {
  enum class Kind { Number, Blade, Neg, Add, Sub, Mul, Pow, Func };

  Kind kind;
  Complex number{};                // Number
  std::vector<int> blade_indices;  // Blade, in written order
  std::uint64_t exponent = 0;      // Pow
  ExprFunc func{};                 // Func
  std::unique_ptr<ExprNode> lhs;
  std::unique_ptr<ExprNode> rhs;
};

struct Expression {
  Signature sig;
  std::unique_ptr<ExprNode> root;
};

// Throws ParseError (with a 0-based byte offset) on syntax errors, blade
// indices outside 1..n, repeated indices within a token, numeric overflow,
// and pathological nesting. Never crashes on arbitrary bytes.
Expression parse(std::string_view text, const Signature& sig);

// Deterministic evaluation; non-canonical blade tokens pick up their
// normalization sign through blade_mul.
Multivector evaluate(const Expression& expr, const Signature& sig);

// parse + evaluate in one step.
Multivector eval_string(std::string_view text, const Signature& sig);

// Canonical text: terms in ascending mask order, scalar term first without a
// blade token, complex coefficients parenthesized. Re-parsing the output
// reproduces the value (to rounding).
std::string to_canonical_text(const Multivector& u);

// "-3", "2i", "(1.5-0.5i)" — the scalar formatting used by canonical text.
std::string format_complex(Complex z);

}  // namespace cliffcalc
