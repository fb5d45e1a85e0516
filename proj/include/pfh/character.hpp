#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "pfh/qt_fraction.hpp"

namespace pfh {

/// Raised by lambdaStar when the trivial monomial occurs (fixed point not isolated).
struct NonIsolatedFixedPoint : std::domain_error {
  using std::domain_error::domain_error;
};

/// A virtual torus character: integer multiplicities on Laurent monomials q^a t^b.
class Character {
 public:
  using Key = std::pair<int, int>;  // (dq, dt)

  Character() = default;
  static Character monomial(int dq, int dt, long mult = 1);

  const std::map<Key, long>& terms() const { return terms_; }
  long at(int dq, int dt) const;
  bool isZero() const { return terms_.empty(); }
  /// Sum of multiplicities (the rank of the virtual representation).
  long total() const;
  bool allNonnegative() const;

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  Character operator-() const;
  friend Character operator*(const Character& a, const Character& b);
  Character scaled(long c) const;
  /// Multiplies every monomial by q^dq t^dt.
  Character shifted(int dq, int dt) const;
  /// q -> 1/q, t -> 1/t.
  Character dual() const;
  /// m -> m^r.
  Character adams(int r) const;

  /// The Laurent polynomial sum of mult * monomial.
  QTPoly toPoly() const;
  /// Monomials listed in the QTPoly term order, e.g. "{q^2:1, q:2, t:-1}".
  std::string toString() const;

  bool operator==(const Character& o) const { return terms_ == o.terms_; }
  bool operator!=(const Character& o) const { return terms_ != o.terms_; }

 private:
  void add(Key k, long m);
  std::map<Key, long> terms_;
};

/// prod_m (1 - m)^{c_m}. Throws NonIsolatedFixedPoint when c_1 != 0.
QTFraction lambdaStar(const Character& c);

/// e_i[c] as a plethystic evaluation of the character (Newton identities on p_r[c] = adams(r)).
QTFraction plethysticE(const Character& c, int i);

}  // namespace pfh
