#include "galicurve/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <utility>

#include "galicurve/num_format.hpp"

namespace galicurve {
namespace {

struct FunctionEntry {
  const char* name;
  FuncTag tag;
};

constexpr std::array<FunctionEntry, 7> kFunctions{{
    {"sin", FuncTag::Sin},
    {"cos", FuncTag::Cos},
    {"sinh", FuncTag::Sinh},
    {"cosh", FuncTag::Cosh},
    {"exp", FuncTag::Exp},
    {"log", FuncTag::Log},
    {"sqrt", FuncTag::Sqrt},
}};

std::optional<FuncTag> lookup_function(const std::string& name) {
  for (const auto& f : kFunctions)
    if (name == f.name) return f.tag;
  return std::nullopt;
}

bool valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

struct Token {
  enum class Type {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End
  };

  Type type = Type::End;
  double number = 0.0;
  std::string text;
  std::size_t offset = 0;
};

const char* token_display(const Token& t) {
  switch (t.type) {
    case Token::Type::Number: return "number";
    case Token::Type::Ident: return "identifier";
    case Token::Type::Plus: return "'+'";
    case Token::Type::Minus: return "'-'";
    case Token::Type::Star: return "'*'";
    case Token::Type::Slash: return "'/'";
    case Token::Type::Caret: return "'^'";
    case Token::Type::LParen: return "'('";
    case Token::Type::RParen: return "')'";
    case Token::Type::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) { advance(); }

  ExprPtr run() {
    if (current_.type == Token::Type::End)
      fail("an expression", current_.offset);
    ExprPtr e = additive();
    if (current_.type != Token::Type::End)
      fail("an operator or end of input", current_.offset);
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected, std::size_t offset) {
    throw Error(ErrorCode::Syntax,
                "syntax error at byte offset " + std::to_string(offset) +
                    ": got " + token_display(current_) + ", expected " + expected,
                offset);
  }

  void advance() { current_ = lex(); }

  Token lex() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    Token tok;
    tok.offset = pos_;
    if (pos_ >= src_.size()) return tok;

    const char ch = src_[pos_];
    switch (ch) {
      case '+': tok.type = Token::Type::Plus; ++pos_; return tok;
      case '-': tok.type = Token::Type::Minus; ++pos_; return tok;
      case '*': tok.type = Token::Type::Star; ++pos_; return tok;
      case '/': tok.type = Token::Type::Slash; ++pos_; return tok;
      case '^': tok.type = Token::Type::Caret; ++pos_; return tok;
      case '(': tok.type = Token::Type::LParen; ++pos_; return tok;
      case ')': tok.type = Token::Type::RParen; ++pos_; return tok;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return lex_number();
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) ||
              src_[end] == '_'))
        ++end;
      tok.type = Token::Type::Ident;
      tok.text = src_.substr(pos_, end - pos_);
      pos_ = end;
      return tok;
    }
    throw Error(ErrorCode::Syntax,
                "syntax error at byte offset " + std::to_string(pos_) +
                    ": unexpected character '" + std::string(1, ch) + "'",
                pos_);
  }

  Token lex_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t before = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      return pos_ > before;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      if (!digits())
        throw Error(ErrorCode::Syntax,
                    "syntax error at byte offset " + std::to_string(pos_) +
                        ": expected digits after decimal point",
                    pos_);
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (!digits())
        throw Error(ErrorCode::Syntax,
                    "syntax error at byte offset " + std::to_string(pos_) +
                        ": expected digits in exponent",
                    pos_);
    }
    Token tok;
    tok.type = Token::Type::Number;
    tok.offset = start;
    const char* first = src_.data() + start;
    const char* last = src_.data() + pos_;
    const auto result = std::from_chars(first, last, tok.number);
    if (result.ec != std::errc{} || result.ptr != last)
      throw Error(ErrorCode::Syntax,
                  "syntax error at byte offset " + std::to_string(start) +
                      ": malformed number literal",
                  start);
    return tok;
  }

  ExprPtr additive() {
    ExprPtr lhs = multiplicative();
    while (current_.type == Token::Type::Plus ||
           current_.type == Token::Type::Minus) {
      const char op = current_.type == Token::Type::Plus ? '+' : '-';
      advance();
      lhs = Expr::make_binary(op, std::move(lhs), multiplicative());
    }
    return lhs;
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = unary();
    while (current_.type == Token::Type::Star ||
           current_.type == Token::Type::Slash) {
      const char op = current_.type == Token::Type::Star ? '*' : '/';
      advance();
      lhs = Expr::make_binary(op, std::move(lhs), unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (current_.type == Token::Type::Minus) {
      advance();
      return Expr::make_neg(unary());
    }
    return power();
  }

  // The exponent re-enters at unary level, which makes "^" right-associative
  // and permits a negated exponent without parentheses.
  ExprPtr power() {
    ExprPtr base = primary();
    if (current_.type == Token::Type::Caret) {
      advance();
      return Expr::make_binary('^', std::move(base), unary());
    }
    return base;
  }

  ExprPtr primary() {
    switch (current_.type) {
      case Token::Type::Number: {
        const double v = current_.number;
        advance();
        return Expr::make_number(v);
      }
      case Token::Type::Ident: {
        const std::string name = current_.text;
        const std::size_t offset = current_.offset;
        advance();
        if (current_.type == Token::Type::LParen) {
          const auto tag = lookup_function(name);
          if (!tag)
            throw Error(ErrorCode::UnknownFunction,
                        "unknown function '" + name + "' at byte offset " +
                            std::to_string(offset),
                        offset);
          advance();
          ExprPtr arg = additive();
          if (current_.type != Token::Type::RParen) fail("')'", current_.offset);
          advance();
          return Expr::make_call(*tag, std::move(arg));
        }
        if (lookup_function(name))
          throw Error(ErrorCode::Syntax,
                      "syntax error at byte offset " + std::to_string(offset) +
                          ": expected '(' after function name '" + name + "'",
                      offset);
        if (name == "t") return Expr::make_variable();
        return Expr::make_constant(name);
      }
      case Token::Type::LParen: {
        advance();
        ExprPtr e = additive();
        if (current_.type != Token::Type::RParen) fail("')'", current_.offset);
        advance();
        return e;
      }
      default:
        fail("a number, identifier, or '('", current_.offset);
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  Token current_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Binary:
      if (e.op == '+' || e.op == '-') return 1;
      if (e.op == '*' || e.op == '/') return 2;
      return 4;  // '^'
    case Expr::Kind::Neg:
      return 3;
    default:
      return 5;
  }
}

void print_node(const Expr& e, std::string& out);

void print_child(const Expr& child, int min_prec, std::string& out) {
  const bool parens = precedence(child) < min_prec;
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

void print_node(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Number:
      out += format_shortest(e.number);
      return;
    case Expr::Kind::Variable:
      out += 't';
      return;
    case Expr::Kind::Constant:
      out += e.name;
      return;
    case Expr::Kind::Neg:
      out += '-';
      print_child(*e.a, 3, out);
      return;
    case Expr::Kind::Call:
      out += func_name(e.func);
      out += '(';
      print_node(*e.a, out);
      out += ')';
      return;
    case Expr::Kind::Binary: {
      const int p = precedence(e);
      if (e.op == '^') {
        // Right-associative: the left operand needs parentheses at equal
        // precedence, the right one does not.
        print_child(*e.a, p + 1, out);
        out += '^';
        print_child(*e.b, p, out);
      } else {
        // Left-associative: parenthesize a same-precedence right operand so
        // the reparse rebuilds the identical tree.
        print_child(*e.a, p, out);
        out += e.op;
        print_child(*e.b, p + 1, out);
      }
      return;
    }
  }
}

}  // namespace

const char* func_name(FuncTag f) {
  switch (f) {
    case FuncTag::Sin: return "sin";
    case FuncTag::Cos: return "cos";
    case FuncTag::Sinh: return "sinh";
    case FuncTag::Cosh: return "cosh";
    case FuncTag::Exp: return "exp";
    case FuncTag::Log: return "log";
    case FuncTag::Sqrt: return "sqrt";
  }
  return "?";
}

ExprPtr Expr::make_number(double value) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->number = value;
  return e;
}

ExprPtr Expr::make_variable() {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Variable;
  return e;
}

ExprPtr Expr::make_constant(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Constant;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::make_neg(ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->a = std::move(child);
  return e;
}

ExprPtr Expr::make_call(FuncTag f, ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Call;
  e->func = f;
  e->a = std::move(child);
  return e;
}

ExprPtr Expr::make_binary(char op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Binary;
  e->op = op;
  e->a = std::move(lhs);
  e->b = std::move(rhs);
  return e;
}

ExprPtr parse(const std::string& src) {
  Parser parser(src);
  return parser.run();
}

std::string pretty_print(const ExprPtr& e) {
  if (!e) raise(ErrorCode::InvalidArgument, "cannot print a null expression");
  std::string out;
  print_node(*e, out);
  return out;
}

bool depends_on_t(const ExprPtr& e) {
  if (!e) return false;
  switch (e->kind) {
    case Expr::Kind::Variable: return true;
    case Expr::Kind::Number:
    case Expr::Kind::Constant: return false;
    case Expr::Kind::Neg:
    case Expr::Kind::Call: return depends_on_t(e->a);
    case Expr::Kind::Binary: return depends_on_t(e->a) || depends_on_t(e->b);
  }
  return false;
}

void validate_bindings(const Bindings& b) {
  for (const auto& [name, value] : b) {
    if (!valid_identifier(name))
      raise(ErrorCode::InvalidArgument,
            "invalid constant name '" + name +
                "': must start with a letter and use [A-Za-z0-9_]");
    if (name == "t")
      raise(ErrorCode::InvalidArgument,
            "'t' is the curve parameter and cannot be bound as a constant");
    if (lookup_function(name))
      raise(ErrorCode::InvalidArgument,
            "'" + name + "' is a reserved function name");
    if (!std::isfinite(value))
      raise(ErrorCode::InvalidArgument,
            "constant '" + name + "' must be finite");
  }
}

}  // namespace galicurve
