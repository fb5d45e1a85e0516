#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pfh {

/// One term c * q^dq * t^dt of a Laurent polynomial in q, t.
struct Term {
  int dq = 0;
  int dt = 0;
  mpz_class c;
};

/// Sparse Laurent polynomial in q, t with integer coefficients.
///
/// Terms are kept strictly decreasing in (dq, dt) (lexicographic, q > t) and
/// never carry a zero coefficient, so equal polynomials have identical term
/// vectors. Rational scalars live in QTFraction, which clears denominators.
class QTPoly {
 public:
  QTPoly() = default;
  explicit QTPoly(long c);
  explicit QTPoly(const mpz_class& c);

  static QTPoly monomial(const mpz_class& c, int dq, int dt);
  static QTPoly q() { return monomial(1, 1, 0); }
  static QTPoly t() { return monomial(1, 0, 1); }
  /// Combines like terms and sorts; input may be in any order.
  static QTPoly fromTerms(std::vector<Term> terms);

  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  bool isConstant() const;
  bool isMonomial() const { return terms_.size() == 1; }
  /// True when all exponents are nonnegative.
  bool isPolynomial() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  const mpz_class& leadingCoeff() const { return terms_.front().c; }

  int minDq() const;
  int maxDq() const;
  int minDt() const;
  int maxDt() const;

  QTPoly operator-() const;
  QTPoly& operator+=(const QTPoly& o);
  QTPoly& operator-=(const QTPoly& o);
  QTPoly& operator*=(const QTPoly& o);
  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b);

  QTPoly scaled(const mpz_class& c) const;
  /// Multiplies by q^dq t^dt.
  QTPoly shifted(int dq, int dt) const;
  QTPoly pow(unsigned e) const;

  /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
  mpz_class content() const;
  QTPoly divexactScalar(const mpz_class& c) const;

  /// Exact quotient self / d, or nullopt when d does not divide self in
  /// Z[q^{+-1}, t^{+-1}] with the same monomial support pattern. Both
  /// operands must be polynomials (nonnegative exponents).
  std::optional<QTPoly> divideExact(const QTPoly& d) const;

  /// f(1/q, 1/t).
  QTPoly invertVariables() const;
  /// f(q^r, t^r).
  QTPoly powerSubstitute(int r) const;

  /// Exact evaluation; nullopt if a negative power of zero appears.
  std::optional<mpq_class> eval(const mpq_class& q0, const mpq_class& t0) const;

  /// Canonical text form, e.g. "q^2*t - 3*q + 1".
  std::string toString() const;

  bool operator==(const QTPoly& o) const;
  bool operator!=(const QTPoly& o) const { return !(*this == o); }
  /// Total order used for map keys (not algebraic).
  bool operator<(const QTPoly& o) const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

/// Primitive gcd with positive leading coefficient. Operands must be
/// polynomials (nonnegative exponents); monomial factors are included.
/// gcd(0, 0) is 0.
QTPoly gcd(const QTPoly& a, const QTPoly& b);

namespace detail {
/// Heuristic (evaluation/interpolation) gcd of monomial-free primitive
/// polynomials; nullopt when the heuristic gives up.
std::optional<QTPoly> gcdHeuristic(const QTPoly& a, const QTPoly& b);
/// Primitive polynomial remainder sequence over Z[t][q]; always succeeds.
QTPoly gcdPrs(const QTPoly& a, const QTPoly& b);
/// Normalizes sign (positive leading coefficient) and removes content.
QTPoly primitiveNormalized(const QTPoly& p);
}  // namespace detail

}  // namespace pfh
