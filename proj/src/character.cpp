#include "pfh/character.hpp"

#include <vector>

namespace pfh {

Character Character::monomial(int dq, int dt, long mult) {
  Character c;
  c.add({dq, dt}, mult);
  return c;
}

void Character::add(Key k, long m) {
  if (m == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, m);
  } else if ((it->second += m) == 0) {
    terms_.erase(it);
  }
}

long Character::at(int dq, int dt) const {
  auto it = terms_.find({dq, dt});
  return it == terms_.end() ? 0 : it->second;
}

long Character::total() const {
  long s = 0;
  for (auto& [k, m] : terms_) s += m;
  return s;
}

bool Character::allNonnegative() const {
  for (auto& [k, m] : terms_)
    if (m < 0) return false;
  return true;
}

Character& Character::operator+=(const Character& o) {
  for (auto& [k, m] : o.terms_) add(k, m);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (auto& [k, m] : o.terms_) add(k, -m);
  return *this;
}

Character Character::operator-() const { return scaled(-1); }

Character operator*(const Character& a, const Character& b) {
  Character r;
  for (auto& [ka, ma] : a.terms_)
    for (auto& [kb, mb] : b.terms_) r.add({ka.first + kb.first, ka.second + kb.second}, ma * mb);
  return r;
}

Character Character::scaled(long c) const {
  Character r;
  if (c == 0) return r;
  for (auto& [k, m] : terms_) r.terms_.emplace(k, m * c);
  return r;
}

Character Character::shifted(int dq, int dt) const {
  Character r;
  for (auto& [k, m] : terms_) r.terms_.emplace(Key{k.first + dq, k.second + dt}, m);
  return r;
}

Character Character::dual() const {
  Character r;
  for (auto& [k, m] : terms_) r.terms_.emplace(Key{-k.first, -k.second}, m);
  return r;
}

Character Character::adams(int r) const {
  Character out;
  for (auto& [k, m] : terms_) out.terms_.emplace(Key{k.first * r, k.second * r}, m);
  return out;
}

QTPoly Character::toPoly() const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (auto& [k, m] : terms_) ts.push_back({k.first, k.second, mpz_class(m)});
  return QTPoly::fromTerms(std::move(ts));
}

std::string Character::toString() const {
  std::string out = "{";
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out += ", ";
    first = false;
    out += QTPoly::monomial(1, it->first.first, it->first.second).toString();
    out += ":" + std::to_string(it->second);
  }
  return out + "}";
}

QTFraction lambdaStar(const Character& c) {
  QTPoly num(1), den(1);
  for (auto& [k, m] : c.terms()) {
    if (k.first == 0 && k.second == 0)
      throw NonIsolatedFixedPoint("lambdaStar: trivial weight with multiplicity " + std::to_string(m));
    QTPoly f = QTPoly(1) - QTPoly::monomial(1, k.first, k.second);
    if (m > 0) num *= f.pow(unsigned(m));
    else den *= f.pow(unsigned(-m));
  }
  // factors like (1-q) and (1-1/q) cancel, so this goes through the gcd
  return QTFraction::fromParts(num, den);
}

QTFraction plethysticE(const Character& c, int i) {
  if (i < 0) return QTFraction();
  // i e_i = sum_{r=1}^{i} (-1)^{r-1} p_r e_{i-r}
  std::vector<QTFraction> p(i + 1), e(i + 1);
  for (int r = 1; r <= i; ++r) p[r] = QTFraction(c.adams(r).toPoly());
  e[0] = QTFraction(1);
  for (int n = 1; n <= i; ++n) {
    QTFraction s;
    for (int r = 1; r <= n; ++r) {
      QTFraction term = p[r] * e[n - r];
      if (r % 2 == 1) s += term;
      else s -= term;
    }
    e[n] = s / QTFraction(long(n));
  }
  return e[i];
}

}  // namespace pfh
