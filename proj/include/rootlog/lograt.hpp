#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rootlog/interval.hpp"
#include "rootlog/rational_function.hpp"

namespace rootlog {

/// Exact real constant q + sum r_j*log(gamma_j), q and gamma_j in one number
/// field, r_j rational, gamma_j > 1 and pairwise distinct.
class LogConst {
 public:
  LogConst() = default;
  explicit LogConst(const FieldElem& q) : q_(q) {}
  static LogConst log_of(const FieldElem& gamma);

  const FieldElem& algebraic_part() const { return q_; }
  const std::vector<std::pair<Rational, FieldElem>>& logs() const { return logs_; }

  void add_log(const Rational& r, const FieldElem& gamma);
  LogConst operator-() const;
  friend LogConst operator+(const LogConst& a, const LogConst& b);
  friend LogConst operator-(const LogConst& a, const LogConst& b) { return a + (-b); }
  friend LogConst operator*(const Rational& s, const LogConst& a);
  LogConst& operator+=(const LogConst& b) { return *this = *this + b; }

  /// Exact: the log part is either identically zero (the gammas multiply to
  /// 1 after clearing denominators) or transcendental, so a nonzero algebraic
  /// part can never cancel it.
  bool is_zero() const;
  /// Exact sign; interval refinement terminates because the value is known nonzero.
  int sign() const;
  Interval enclose(long prec) const;
  std::string to_string() const;

 private:
  FieldElem q_;
  std::vector<std::pair<Rational, FieldElem>> logs_;
};

struct Limit {
  enum Kind { Finite, PlusInfinity, MinusInfinity };
  Kind kind = Finite;
  LogConst value;

  bool is_zero() const { return kind == Finite && value.is_zero(); }
  int sign() const { return kind == PlusInfinity ? 1 : kind == MinusInfinity ? -1 : value.sign(); }
  std::string to_string() const;
};

struct LogTerm {
  Poly mult;          // polynomial multiplier in n
  FRatFunc arg;       // eventually positive argument
  Integer valid_from; // arg(n) > 0 for all integers n >= valid_from
};

/// sum mult_i(n)*log(arg_i(n)) + rational(n), with n a real variable.
class LogRatExpr {
 public:
  LogRatExpr() = default;
  explicit LogRatExpr(const FRatFunc& rational) : rational_(rational) {}

  /// Adds mult*log(arg); throws unless arg is eventually positive.
  void add_log(const Poly& mult, const FRatFunc& arg);
  void add_rational(const FRatFunc& r) { rational_ += r; }

  const std::vector<LogTerm>& terms() const { return terms_; }
  const FRatFunc& rational() const { return rational_; }
  bool is_rational() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && rational_.is_zero(); }
  /// -1 when there are no log terms.
  int max_multiplier_degree() const;
  /// Every log argument is positive from here on (and no pole of the rational part lies beyond it).
  Integer valid_from() const;

  LogRatExpr derivative() const;
  LogRatExpr derivative(int order) const;
  /// e(n + k).
  LogRatExpr shift(long k) const;

  LogRatExpr operator-() const;
  friend LogRatExpr operator+(const LogRatExpr& a, const LogRatExpr& b);
  friend LogRatExpr operator-(const LogRatExpr& a, const LogRatExpr& b) { return a + (-b); }
  friend LogRatExpr operator*(const Rational& s, const LogRatExpr& a);
  LogRatExpr& operator+=(const LogRatExpr& b) { return *this = *this + b; }

  /// Certified enclosure of e(n) at a rational point n >= valid_from().
  Interval eval(const Rational& n, long prec) const;
  /// Limit as n -> infinity, decided exactly from the asymptotic expansion.
  Limit limit() const;

  std::string to_string(const std::string& var = "n") const;

 private:
  void add_term(const Poly& mult, const FRatFunc& arg, const Integer& valid_from);
  std::vector<LogTerm> terms_;
  FRatFunc rational_;
};

}  // namespace rootlog
