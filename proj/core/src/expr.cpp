#include "surfpen/expr.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "surfpen/error.hpp"

namespace surfpen {

struct Expr::Node {
  Kind kind = Kind::number;
  double value = 0.0;
  Var var = Var::s;
  Func func = Func::sin;
  Expr lhs{Empty{}};
  Expr rhs{Empty{}};
};

namespace {

constexpr double kDivisionFloor = 1e-300;
constexpr double kTanPoleDistance = 1e-9;

bool is_number(const Expr& e, double v) {
  return e.kind() == Expr::Kind::number && e.value() == v;
}

bool is_number(const Expr& e) { return e.kind() == Expr::Kind::number; }

double apply(Func f, double x) {
  switch (f) {
    case Func::sin:
      return std::sin(x);
    case Func::cos:
      return std::cos(x);
    case Func::tan:
      if (std::abs(std::cos(x)) < kTanPoleDistance) {
        throw DomainError("tan evaluated at a pole (argument " + std::to_string(x) + ")");
      }
      return std::tan(x);
    case Func::exp:
      return std::exp(x);
    case Func::ln:
      if (!(x > 0.0)) throw DomainError("ln of non-positive value " + std::to_string(x));
      return std::log(x);
    case Func::sqrt:
      if (x < 0.0) throw DomainError("sqrt of negative value " + std::to_string(x));
      return std::sqrt(x);
  }
  throw std::logic_error("unknown function");
}

double raise(double base, double exponent) {
  if (base < 0.0 && exponent != std::floor(exponent)) {
    throw DomainError("negative base raised to a non-integer power");
  }
  if (base == 0.0 && exponent < 0.0) throw DomainError("zero raised to a negative power");
  return std::pow(base, exponent);
}

double divide(double num, double den) {
  if (std::abs(den) < kDivisionFloor) throw DomainError("division by zero");
  return num / den;
}

}  // namespace

// A single shared literal zero backs every default-constructed Expr.
Expr::Expr() {
  static const auto zero = std::make_shared<const Node>();
  node_ = zero;
}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::number(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::number;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  n->var = v;
  return Expr(std::move(n));
}

Expr Expr::call(Func f, Expr arg) {
  if (is_number(arg)) {
    try {
      return number(apply(f, arg.value()));
    } catch (const DomainError&) {
      // left unfolded: the error surfaces at evaluation time
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::call;
  n->func = f;
  n->lhs = std::move(arg);
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, double exponent) {
  if (exponent == 0.0) return number(1.0);
  if (exponent == 1.0) return base;
  if (is_number(base)) {
    try {
      return number(raise(base.value(), exponent));
    } catch (const DomainError&) {
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::power;
  n->value = exponent;
  n->lhs = std::move(base);
  return Expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) {
  if (is_number(a) && is_number(b)) return Expr::number(a.value() + b.value());
  if (is_number(a, 0.0)) return b;
  if (is_number(b, 0.0)) return a;
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::add;
  n->lhs = a;
  n->rhs = b;
  return Expr(std::move(n));
}

Expr operator-(const Expr& a, const Expr& b) {
  if (is_number(a) && is_number(b)) return Expr::number(a.value() - b.value());
  if (is_number(b, 0.0)) return a;
  if (is_number(a, 0.0)) return -b;
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::subtract;
  n->lhs = a;
  n->rhs = b;
  return Expr(std::move(n));
}

Expr operator*(const Expr& a, const Expr& b) {
  if (is_number(a) && is_number(b)) return Expr::number(a.value() * b.value());
  if (is_number(a, 0.0) || is_number(b, 0.0)) return Expr::number(0.0);
  if (is_number(a, 1.0)) return b;
  if (is_number(b, 1.0)) return a;
  if (is_number(a, -1.0)) return -b;
  if (is_number(b, -1.0)) return -a;
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::multiply;
  n->lhs = a;
  n->rhs = b;
  return Expr(std::move(n));
}

Expr operator/(const Expr& a, const Expr& b) {
  if (is_number(a) && is_number(b) && std::abs(b.value()) >= kDivisionFloor) {
    return Expr::number(a.value() / b.value());
  }
  if (is_number(b, 1.0)) return a;
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::divide;
  n->lhs = a;
  n->rhs = b;
  return Expr(std::move(n));
}

Expr operator-(const Expr& a) {
  if (is_number(a)) return Expr::number(-a.value());
  if (a.kind() == Expr::Kind::negate) return a.lhs();
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::negate;
  n->lhs = a;
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::value() const { return node_->value; }
Var Expr::var() const { return node_->var; }
Func Expr::func() const { return node_->func; }
const Expr& Expr::lhs() const { return node_->lhs; }
const Expr& Expr::rhs() const { return node_->rhs; }

double Expr::eval(double s, double t) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::number:
      return n.value;
    case Kind::variable:
      return n.var == Var::s ? s : t;
    case Kind::negate:
      return -n.lhs.eval(s, t);
    case Kind::add:
      return n.lhs.eval(s, t) + n.rhs.eval(s, t);
    case Kind::subtract:
      return n.lhs.eval(s, t) - n.rhs.eval(s, t);
    case Kind::multiply:
      return n.lhs.eval(s, t) * n.rhs.eval(s, t);
    case Kind::divide:
      return divide(n.lhs.eval(s, t), n.rhs.eval(s, t));
    case Kind::power:
      return raise(n.lhs.eval(s, t), n.value);
    case Kind::call:
      return apply(n.func, n.lhs.eval(s, t));
  }
  throw std::logic_error("unknown expression kind");
}

Expr Expr::derivative(Var v) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::number:
      return number(0.0);
    case Kind::variable:
      return number(n.var == v ? 1.0 : 0.0);
    case Kind::negate:
      return -n.lhs.derivative(v);
    case Kind::add:
      return n.lhs.derivative(v) + n.rhs.derivative(v);
    case Kind::subtract:
      return n.lhs.derivative(v) - n.rhs.derivative(v);
    case Kind::multiply:
      return n.lhs.derivative(v) * n.rhs + n.lhs * n.rhs.derivative(v);
    case Kind::divide: {
      const Expr du = n.lhs.derivative(v);
      const Expr dw = n.rhs.derivative(v);
      if (is_number(dw, 0.0)) return du / n.rhs;
      return (du * n.rhs - n.lhs * dw) / power(n.rhs, 2.0);
    }
    case Kind::power:
      return number(n.value) * power(n.lhs, n.value - 1.0) * n.lhs.derivative(v);
    case Kind::call: {
      const Expr& u = n.lhs;
      const Expr du = u.derivative(v);
      if (is_number(du, 0.0)) return number(0.0);
      switch (n.func) {
        case Func::sin:
          return call(Func::cos, u) * du;
        case Func::cos:
          return -(call(Func::sin, u) * du);
        case Func::tan:
          return (number(1.0) + power(call(Func::tan, u), 2.0)) * du;
        case Func::exp:
          return call(Func::exp, u) * du;
        case Func::ln:
          return du / u;
        case Func::sqrt:
          return du / (number(2.0) * call(Func::sqrt, u));
      }
    }
  }
  throw std::logic_error("unknown expression kind");
}

bool Expr::depends_on(Var v) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::number:
      return false;
    case Kind::variable:
      return n.var == v;
    case Kind::negate:
    case Kind::power:
    case Kind::call:
      return n.lhs.depends_on(v);
    default:
      return n.lhs.depends_on(v) || n.rhs.depends_on(v);
  }
}

std::optional<double> Expr::constant_value() const {
  if (depends_on(Var::s) || depends_on(Var::t)) return std::nullopt;
  try {
    return eval(0.0, 0.0);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::string_view to_string(Func f) {
  switch (f) {
    case Func::sin:
      return "sin";
    case Func::cos:
      return "cos";
    case Func::tan:
      return "tan";
    case Func::exp:
      return "exp";
    case Func::ln:
      return "ln";
    case Func::sqrt:
      return "sqrt";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string format_number(double v) {
  if (v == std::numbers::pi) return "pi";
  if (v == std::numbers::e) return "e";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), end);
}

// Binding strength used to decide where parentheses are needed.
int precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::add:
    case Expr::Kind::subtract:
      return 1;
    case Expr::Kind::multiply:
    case Expr::Kind::divide:
      return 2;
    case Expr::Kind::negate:
      return 3;
    case Expr::Kind::power:
      return 4;
    case Expr::Kind::number:
      return e.value() < 0.0 || std::signbit(e.value()) ? 3 : 5;
    default:
      return 5;
  }
}

void print(const Expr& e, std::string& out);

void print_operand(const Expr& e, bool parens, std::string& out) {
  if (parens) out += '(';
  print(e, out);
  if (parens) out += ')';
}

void print(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::number:
      out += format_number(e.value());
      return;
    case Expr::Kind::variable:
      out += e.var() == Var::s ? 's' : 't';
      return;
    case Expr::Kind::negate:
      out += '-';
      print_operand(e.lhs(), precedence(e.lhs()) < 3, out);
      return;
    case Expr::Kind::add:
    case Expr::Kind::subtract:
      print_operand(e.lhs(), false, out);
      out += e.kind() == Expr::Kind::add ? " + " : " - ";
      print_operand(e.rhs(), precedence(e.rhs()) <= 1, out);
      return;
    case Expr::Kind::multiply:
    case Expr::Kind::divide:
      print_operand(e.lhs(), precedence(e.lhs()) < 2, out);
      out += e.kind() == Expr::Kind::multiply ? "*" : "/";
      print_operand(e.rhs(), precedence(e.rhs()) <= 2, out);
      return;
    case Expr::Kind::power:
      print_operand(e.lhs(), precedence(e.lhs()) < 5, out);
      out += '^';
      out += format_number(e.value());
      return;
    case Expr::Kind::call:
      out += to_string(e.func());
      out += '(';
      print(e.lhs(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Expr e = parse_expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = lhs + parse_term();
      } else if (accept('-')) {
        lhs = lhs - parse_term();
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = lhs * parse_unary();
      } else if (accept('/')) {
        lhs = lhs / parse_unary();
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return -parse_unary();
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t exponent_at = pos_;
    const Expr exponent = parse_unary();
    if (exponent.depends_on(Var::s) || exponent.depends_on(Var::t)) {
      throw ParseError("non-constant exponent", exponent_at);
    }
    const auto value = exponent.constant_value();
    if (!value) throw ParseError("exponent is not a finite constant", exponent_at);
    return Expr::power(base, *value);
  }

  Expr parse_primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (!at_end() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    // An exponent marker only counts when digits follow; "2*e" keeps e as the constant.
    if (!at_end() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        digits();
      }
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || end != text_.data() + pos_) throw ParseError("malformed number", start);
    return Expr::number(value);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "s") return Expr::variable(Var::s);
    if (name == "t") return Expr::variable(Var::t);
    if (name == "pi") return Expr::number(std::numbers::pi);
    if (name == "e") return Expr::number(std::numbers::e);

    static constexpr std::array<Func, 6> kFuncs{Func::sin, Func::cos, Func::tan,
                                                Func::exp, Func::ln,  Func::sqrt};
    for (Func f : kFuncs) {
      if (name == to_string(f)) {
        if (!accept('(')) throw ParseError("expected '(' after " + std::string(name), pos_);
        Expr arg = parse_expr();
        if (!accept(')')) throw ParseError("expected ')'", pos_);
        return Expr::call(f, std::move(arg));
      }
    }
    throw ParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace surfpen
