#pragma once

#include <map>
#include <memory>
#include <string>

#include "galicurve/jet.hpp"

namespace galicurve {

// Named constants available while evaluating an expression. The parameter
// name "t" and the built-in function names are reserved and may not be bound.
using Bindings = std::map<std::string, double>;

// Throws InvalidArgument for names that are empty, do not start with a
// letter, contain characters outside [A-Za-z0-9_], or are reserved.
void validate_bindings(const Bindings& b);

enum class FuncTag { Sin, Cos, Sinh, Cosh, Exp, Log, Sqrt };

const char* func_name(FuncTag f);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree over the free parameter t. Subtrees are shared;
// nothing mutates a node after construction.
struct Expr {
  enum class Kind { Number, Variable, Constant, Neg, Call, Binary };

  Kind kind = Kind::Number;
  double number = 0.0;  // Number
  std::string name;     // Constant
  FuncTag func{};       // Call
  char op = 0;          // Binary: one of + - * / ^
  ExprPtr a, b;         // Neg and Call use a; Binary uses a and b

  static ExprPtr make_number(double value);
  static ExprPtr make_variable();
  static ExprPtr make_constant(std::string name);
  static ExprPtr make_neg(ExprPtr child);
  static ExprPtr make_call(FuncTag f, ExprPtr child);
  static ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs);
};

// Recursive-descent parser for the grammar in docs/grammar.md. Precedence,
// highest first: ^ (right-associative), unary minus, * /, + - (both
// left-associative). Implicit multiplication is rejected. Errors carry the
// 0-based byte offset of the offending token.
ExprPtr parse(const std::string& src);

// Canonical text form. Parsing the result reproduces the tree node for node,
// and printing is a fixed point: print(parse(print(e))) == print(e).
std::string pretty_print(const ExprPtr& e);

bool depends_on_t(const ExprPtr& e);

double eval_scalar(const ExprPtr& e, double t, const Bindings& b,
                   double jet_epsilon = kJetEpsilon);

// Jet of the expression as a function of t at t0. Its value lane is
// bit-identical to eval_scalar: both run the same structural recursion.
Jet3 eval_jet(const ExprPtr& e, double t0, const Bindings& b,
              double jet_epsilon = kJetEpsilon);

}  // namespace galicurve
