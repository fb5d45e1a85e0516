#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "pfh/qt_poly.hpp"

namespace pfh {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// An element of Q(q,t) in canonical reduced form.
///
/// Invariants: num and den are polynomials (nonnegative exponents), den != 0,
/// gcd(num, den) = 1 over Q[q,t], the integer contents of num and den are
/// coprime and den has a positive leading coefficient (lex, q > t). Zero is
/// 0/1. Two equal fractions therefore have identical representations.
class QTFraction {
 public:
  QTFraction() : den_(1) {}
  QTFraction(long c) : num_(c), den_(1) {}  // NOLINT: scalars convert implicitly
  explicit QTFraction(const mpz_class& c) : num_(c), den_(1) {}
  explicit QTFraction(const mpq_class& c);
  /// Accepts Laurent polynomials; normalizes.
  explicit QTFraction(const QTPoly& p);

  /// Normalizes num/den (Laurent input allowed). Throws DivisionByZero.
  static QTFraction fromParts(const QTPoly& num, const QTPoly& den);
  static QTFraction monomial(int dq, int dt, long c = 1);
  static QTFraction q() { return monomial(1, 0); }
  static QTFraction t() { return monomial(0, 1); }

  const QTPoly& num() const { return num_; }
  const QTPoly& den() const { return den_; }

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  bool isPolynomial() const { return den_.isOne(); }

  QTFraction operator-() const;
  QTFraction& operator+=(const QTFraction& o);
  QTFraction& operator-=(const QTFraction& o);
  QTFraction& operator*=(const QTFraction& o);
  QTFraction& operator/=(const QTFraction& o);
  friend QTFraction operator+(QTFraction a, const QTFraction& b) { return a += b; }
  friend QTFraction operator-(QTFraction a, const QTFraction& b) { return a -= b; }
  friend QTFraction operator*(QTFraction a, const QTFraction& b) { return a *= b; }
  friend QTFraction operator/(QTFraction a, const QTFraction& b) { return a /= b; }

  /// Throws DivisionByZero on zero.
  QTFraction inverse() const;
  /// Nullopt on zero; the non-throwing form of inverse().
  std::optional<QTFraction> tryInverse() const;
  QTFraction pow(int e) const;

  /// Substitution q -> 1/q, t -> 1/t; an involutive field automorphism.
  QTFraction bar() const;
  /// Substitution q -> q^r, t -> t^r (r >= 1), the plethystic Adams operation.
  QTFraction adams(int r) const;

  /// Exact value at (q0, t0); nullopt when the point is a pole.
  std::optional<mpq_class> evalAt(const mpq_class& q0, const mpq_class& t0) const;

  /// Canonical text: "num" when den == 1, otherwise "(num)/(den)".
  std::string toString() const;
  /// Parses expressions over q, t, integers, + - * / ^ and parentheses.
  static QTFraction parse(const std::string& text);

  bool operator==(const QTFraction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QTFraction& o) const { return !(*this == o); }
  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }

 private:
  QTFraction(QTPoly num, QTPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  /// Content and sign normalization for parts already known to be coprime.
  static QTFraction finish(QTPoly num, QTPoly den);

  QTPoly num_;
  QTPoly den_;
};

std::ostream& operator<<(std::ostream& os, const QTFraction& f);

}  // namespace pfh

template <>
struct std::hash<pfh::QTFraction> {
  std::size_t operator()(const pfh::QTFraction& f) const { return f.hash(); }
};
