#pragma once

#include <map>
#include <string>

#include "pfh/character.hpp"
#include "pfh/qt_fraction.hpp"
#include "pfh/shapes.hpp"

namespace pfh {

/// Symmetric function over Q(q,t), stored in the power-sum basis p_lambda.
class SymFunc {
 public:
  SymFunc() = default;
  SymFunc(const QTFraction& c) { add({}, c); }  // NOLINT: scalars are degree-0 symmetric functions
  static SymFunc p(const Partition& lam, const QTFraction& c = QTFraction(1));
  static SymFunc e(int j);
  static SymFunc h(int j);
  static SymFunc schur(const Partition& lam);

  const std::map<Partition, QTFraction>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  void add(const Partition& lam, const QTFraction& c);

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  SymFunc scaled(const QTFraction& c) const;

  /// F[X A]: p_r -> A(q^r, t^r) p_r.
  SymFunc plethysm(const Character& a) const;

  /// Schur coefficients (homogeneous pieces merged), keyed by partition.
  std::map<Partition, QTFraction> toSchur() const;
  static SymFunc fromSchur(const std::map<Partition, QTFraction>& s);
  /// Schur expansion in canonical text form, e.g. "s[2] + (q)*s[1,1]".
  std::string toString() const;

  bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }

 private:
  std::map<Partition, QTFraction> terms_;
};

/// z_lambda = prod_i i^{m_i} m_i!.
mpz_class zee(const Partition& lam);
/// chi^lam(rho) by Murnaghan-Nakayama.
long characterValue(const Partition& lam, const Partition& rho);

}  // namespace pfh
