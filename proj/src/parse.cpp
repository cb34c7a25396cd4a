#include "cliffcalc/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cliffcalc/involutions.hpp"

namespace cliffcalc {

namespace {

constexpr int kMaxNestingDepth = 200;

using NodePtr = std::unique_ptr<ExprNode>;

NodePtr make_node(ExprNode::Kind kind) {
  auto node = std::make_unique<ExprNode>();
  node->kind = kind;
  return node;
}

struct Parser {
  std::string_view text;
  Signature sig;
  std::size_t pos = 0;
  int depth = 0;

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_letter(char c) { return c >= 'a' && c <= 'z'; }

  void skip_ws() {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  struct DepthGuard {
    Parser& parser;
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth > kMaxNestingDepth) {
        parser.fail("expression nests too deeply", parser.pos);
      }
    }
    ~DepthGuard() { --parser.depth; }
  };

  NodePtr parse_expr() {
    NodePtr node = parse_term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos;
      auto parent = make_node(c == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub);
      parent->lhs = std::move(node);
      parent->rhs = parse_term();
      node = std::move(parent);
    }
    return node;
  }

  NodePtr parse_term() {
    NodePtr node = parse_factor();
    while (peek() == '*') {
      ++pos;
      auto parent = make_node(ExprNode::Kind::Mul);
      parent->lhs = std::move(node);
      parent->rhs = parse_factor();
      node = std::move(parent);
    }
    return node;
  }

  NodePtr parse_factor() {
    if (peek() == '-') {
      DepthGuard guard(*this);
      ++pos;
      auto node = make_node(ExprNode::Kind::Neg);
      node->lhs = parse_factor();
      return node;
    }
    NodePtr node = parse_atom();
    if (peek() == '^') {
      ++pos;
      auto parent = make_node(ExprNode::Kind::Pow);
      parent->exponent = parse_uint();
      parent->lhs = std::move(node);
      node = std::move(parent);
    }
    return node;
  }

  NodePtr parse_atom() {
    const char c = peek();
    const std::size_t at = pos;
    if (c == '\0') fail("unexpected end of input", pos);

    if (c == '(') {
      DepthGuard guard(*this);
      ++pos;
      NodePtr inner = parse_expr();
      if (peek() != ')') fail("expected ')'", pos);
      ++pos;
      return inner;
    }
    if (is_digit(c) || c == '.') return parse_number();
    if (is_letter(c)) return parse_word(at);
    fail(std::string("unexpected character '") + c + "'", at);
  }

  NodePtr parse_word(std::size_t at) {
    std::size_t end = pos;
    while (end < text.size() && is_letter(text[end])) ++end;
    const std::string_view word = text.substr(pos, end - pos);

    if (word == "i") {
      pos = end;
      auto node = make_node(ExprNode::Kind::Number);
      node->number = Complex{0.0, 1.0};
      return node;
    }
    if (word == "e") {
      pos = end;
      return parse_blade_indices(at);
    }

    ExprFunc func;
    if (word == "rev") {
      func = ExprFunc::Reverse;
    } else if (word == "gi") {
      func = ExprFunc::GradeInvolution;
    } else if (word == "cc") {
      func = ExprFunc::CliffordConjugation;
    } else if (word == "conj") {
      func = ExprFunc::ComplexConjugate;
    } else if (word == "herm") {
      func = ExprFunc::Hermitian;
    } else {
      fail("unknown identifier '" + std::string(word) + "'", at);
    }

    DepthGuard guard(*this);
    pos = end;
    if (peek() != '(') fail("expected '(' after '" + std::string(word) + "'", pos);
    ++pos;
    NodePtr inner = parse_expr();
    if (peek() != ')') fail("expected ')'", pos);
    ++pos;
    auto node = make_node(ExprNode::Kind::Func);
    node->func = func;
    node->lhs = std::move(inner);
    return node;
  }

  NodePtr parse_blade_indices(std::size_t blade_start) {
    if (pos >= text.size() || !is_digit(text[pos])) {
      fail("expected blade indices after 'e'", blade_start);
    }
    auto node = make_node(ExprNode::Kind::Blade);
    unsigned seen = 0;
    while (pos < text.size() && is_digit(text[pos])) {
      const int index = text[pos] - '0';
      if (index < 1 || index > sig.n()) {
        fail("blade index " + std::to_string(index) + " out of range for signature " + sig.str(),
             pos);
      }
      if (seen & (1u << (index - 1))) {
        fail("repeated index " + std::to_string(index) + " in blade token", pos);
      }
      seen |= 1u << (index - 1);
      node->blade_indices.push_back(index);
      ++pos;
    }
    return node;
  }

  NodePtr parse_number() {
    const std::size_t start = pos;
    bool any_digit = false;
    while (pos < text.size() && is_digit(text[pos])) {
      ++pos;
      any_digit = true;
    }
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      while (pos < text.size() && is_digit(text[pos])) {
        ++pos;
        any_digit = true;
      }
    }
    if (!any_digit) fail("expected number", start);

    const std::string slice(text.substr(start, pos - start));
    double value = 0.0;
    try {
      value = std::stod(slice);
    } catch (const std::exception&) {
      fail("bad number literal '" + slice + "'", start);
    }
    if (!std::isfinite(value)) fail("number literal out of range", start);

    auto node = make_node(ExprNode::Kind::Number);
    // 'i' glued straight onto a literal makes it imaginary.
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      node->number = Complex{0.0, value};
    } else {
      node->number = Complex{value, 0.0};
    }
    return node;
  }

  std::uint64_t parse_uint() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start) fail("expected unsigned integer exponent", start);
    std::uint64_t value = 0;
    const auto result = std::from_chars(text.data() + start, text.data() + pos, value);
    if (result.ec != std::errc{} || result.ptr != text.data() + pos) {
      fail("exponent out of range", start);
    }
    return value;
  }
};

Multivector eval_node(const ExprNode& node, const Signature& sig);

Multivector eval_blade(const ExprNode& node, const Signature& sig) {
  BladeMask mask = 0;
  int sign = 1;
  for (int index : node.blade_indices) {
    const auto [next_mask, s] = blade_mul(mask, BladeMask(1) << (index - 1), sig);
    mask = next_mask;
    sign *= s;
  }
  return Multivector::basis_blade(sig, mask, Complex{double(sign), 0.0});
}

Multivector eval_pow(const ExprNode& node, const Signature& sig) {
  Multivector result = Multivector::scalar(sig, Complex{1.0, 0.0});
  Multivector base = eval_node(*node.lhs, sig);
  std::uint64_t e = node.exponent;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Multivector eval_func(const ExprNode& node, const Signature& sig) {
  const Multivector inner = eval_node(*node.lhs, sig);
  switch (node.func) {
    case ExprFunc::Reverse:
      return reverse(inner);
    case ExprFunc::GradeInvolution:
      return grade_involution(inner);
    case ExprFunc::CliffordConjugation:
      return clifford_conjugation(inner);
    case ExprFunc::ComplexConjugate:
      return complex_conjugate(inner);
    case ExprFunc::Hermitian:
      return hermitian(inner);
  }
  throw std::logic_error("unreachable function kind");
}

Multivector eval_node(const ExprNode& node, const Signature& sig) {
  switch (node.kind) {
    case ExprNode::Kind::Number:
      return Multivector::scalar(sig, node.number);
    case ExprNode::Kind::Blade:
      return eval_blade(node, sig);
    case ExprNode::Kind::Neg:
      return -eval_node(*node.lhs, sig);
    case ExprNode::Kind::Add:
      return eval_node(*node.lhs, sig) + eval_node(*node.rhs, sig);
    case ExprNode::Kind::Sub:
      return eval_node(*node.lhs, sig) - eval_node(*node.rhs, sig);
    case ExprNode::Kind::Mul:
      return eval_node(*node.lhs, sig) * eval_node(*node.rhs, sig);
    case ExprNode::Kind::Pow:
      return eval_pow(node, sig);
    case ExprNode::Kind::Func:
      return eval_func(node, sig);
  }
  throw std::logic_error("unreachable node kind");
}

std::string format_real(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15f", x);
  std::string s = buffer;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

Expression parse(std::string_view text, const Signature& sig) {
  Parser parser{text, sig};
  parser.skip_ws();
  if (parser.pos == text.size()) parser.fail("empty expression", 0);
  NodePtr root = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("unexpected trailing input", parser.pos);
  return Expression{sig, std::move(root)};
}

Multivector evaluate(const Expression& expr, const Signature& sig) {
  if (expr.sig != sig) {
    throw std::invalid_argument("evaluate: expression was parsed for signature " +
                                expr.sig.str() + ", not " + sig.str());
  }
  if (!expr.root) throw std::invalid_argument("evaluate: empty expression");
  return eval_node(*expr.root, sig);
}

Multivector eval_string(std::string_view text, const Signature& sig) {
  return evaluate(parse(text, sig), sig);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_real(z.real());
  if (z.real() == 0.0) return format_real(z.imag()) + "i";
  std::string s = "(" + format_real(z.real());
  s += z.imag() < 0.0 ? "-" : "+";
  s += format_real(std::abs(z.imag())) + "i)";
  return s;
}

std::string to_canonical_text(const Multivector& u) {
  std::string out;
  for (BladeMask mask = 0; mask < BladeMask(u.coeffs.size()); ++mask) {
    const Complex c = u.coeffs[mask];
    if (c == Complex{}) continue;
    std::string term = format_complex(c);
    if (mask != 0) {
      term += "*e";
      for (int a = 1; a <= u.sig.n(); ++a) {
        if (mask & (BladeMask(1) << (a - 1))) term += char('0' + a);
      }
    }
    if (out.empty()) {
      out = std::move(term);
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace cliffcalc
