#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace surfpen {

enum class Var { s, t };

enum class Func { sin, cos, tan, exp, ln, sqrt };

/// Immutable scalar expression over the surface parameters (s, t).
///
/// Nodes are shared, so copies are cheap and an Expr may be evaluated from
/// several threads at once. Building an Expr through the operators below
/// folds literal arithmetic (0 + x -> x, 2 * 3 -> 6, ...); nothing else is
/// simplified.
class Expr {
 public:
  enum class Kind { number, variable, negate, add, subtract, multiply, divide, power, call };

  /// The literal 0.
  Expr();

  static Expr number(double value);
  static Expr variable(Var v);
  static Expr call(Func f, Expr arg);
  /// `base ^ exponent` with a constant exponent.
  static Expr power(Expr base, double exponent);

  Kind kind() const;
  /// Literal value for number nodes, exponent for power nodes.
  double value() const;
  Var var() const;
  Func func() const;
  /// Operand of unary nodes and left operand of binary nodes.
  const Expr& lhs() const;
  const Expr& rhs() const;

  /// Throws DomainError outside the domain of any sub-expression.
  double eval(double s, double t) const;

  /// Exact partial derivative with respect to `v`.
  Expr derivative(Var v) const;

  bool depends_on(Var v) const;
  std::optional<double> constant_value() const;

  /// Text that parses back to an equivalent expression.
  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

 private:
  struct Node;
  struct Empty {};
  explicit Expr(Empty) {}
  explicit Expr(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

/// Parses the expression language:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' exponent)?
///   primary := number | 's' | 't' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
///
/// with func one of sin, cos, tan, exp, ln, sqrt. The exponent must not
/// depend on s or t. Throws ParseError carrying the byte offset.
Expr parse(std::string_view text);

inline double eval(const Expr& e, double s, double t) { return e.eval(s, t); }
inline Expr differentiate(const Expr& e, Var v) { return e.derivative(v); }

std::string_view to_string(Func f);

}  // namespace surfpen
