#include "pfh/symfunc.hpp"

#include <mutex>
#include <set>

namespace pfh {

namespace {

Partition merged(const Partition& a, const Partition& b) {
  Partition r = a;
  r.insert(r.end(), b.begin(), b.end());
  std::sort(r.rbegin(), r.rend());
  return r;
}

// Laurent polynomial value of a character at (q^r, t^r)
QTFraction adamsValue(const Character& a, int r) { return QTFraction(a.adams(r).toPoly()); }

}  // namespace

void SymFunc::add(const Partition& lam, const QTFraction& c) {
  if (c.isZero()) return;
  auto [it, fresh] = terms_.emplace(lam, c);
  if (fresh) return;
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

SymFunc SymFunc::p(const Partition& lam, const QTFraction& c) {
  SymFunc f;
  f.add(sortParts(lam), c);
  return f;
}

SymFunc SymFunc::e(int j) {
  SymFunc f;
  for (auto& rho : partitions(j)) {
    QTFraction c(mpq_class(1, zee(rho)));
    f.add(rho, (j - int(rho.size())) % 2 ? -c : c);
  }
  return f;
}

SymFunc SymFunc::h(int j) {
  SymFunc f;
  for (auto& rho : partitions(j)) f.add(rho, QTFraction(mpq_class(1, zee(rho))));
  return f;
}

SymFunc SymFunc::schur(const Partition& lam) {
  SymFunc f;
  for (auto& rho : partitions(size(lam)))
    f.add(rho, QTFraction(mpq_class(characterValue(lam, rho), zee(rho))));
  return f;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (auto& [l, c] : o.terms_) add(l, -c);
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc r;
  for (auto& [la, ca] : a.terms_)
    for (auto& [lb, cb] : b.terms_) r.add(merged(la, lb), ca * cb);
  return r;
}

SymFunc SymFunc::scaled(const QTFraction& c) const {
  SymFunc r;
  if (c.isZero()) return r;
  for (auto& [l, x] : terms_) r.terms_.emplace(l, x * c);
  return r;
}

SymFunc SymFunc::plethysm(const Character& a) const {
  SymFunc r;
  std::map<int, QTFraction> ar;
  for (auto& [lam, c] : terms_) {
    QTFraction f = c;
    for (int part : lam) {
      auto it = ar.find(part);
      if (it == ar.end()) it = ar.emplace(part, adamsValue(a, part)).first;
      f *= it->second;
    }
    r.add(lam, f);
  }
  return r;
}

std::map<Partition, QTFraction> SymFunc::toSchur() const {
  // p_rho = sum_lam chi^lam(rho) s_lam
  std::map<Partition, QTFraction> out;
  for (auto& [rho, c] : terms_)
    for (auto& lam : partitions(size(rho))) {
      long x = characterValue(lam, rho);
      if (!x) continue;
      auto& slot = out[lam];
      slot += c * QTFraction(x);
      if (slot.isZero()) out.erase(lam);
    }
  return out;
}

SymFunc SymFunc::fromSchur(const std::map<Partition, QTFraction>& s) {
  SymFunc f;
  for (auto& [lam, c] : s) f += schur(lam).scaled(c);
  return f;
}

std::string SymFunc::toString() const {
  auto s = toSchur();
  if (s.empty()) return "0";
  std::string out;
  // larger partitions first within a degree, lower degrees first
  std::vector<std::pair<Partition, QTFraction>> v(s.begin(), s.end());
  std::stable_sort(v.begin(), v.end(), [](auto& a, auto& b) {
    if (size(a.first) != size(b.first)) return size(a.first) < size(b.first);
    return a.first > b.first;
  });
  for (auto& [lam, c] : v) {
    std::string name = "s[";
    for (std::size_t i = 0; i < lam.size(); ++i) name += (i ? "," : "") + std::to_string(lam[i]);
    name += "]";
    if (!out.empty()) out += " + ";
    out += c.isOne() ? name : "(" + c.toString() + ")*" + name;
  }
  return out;
}

mpz_class zee(const Partition& lam) {
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int x : lam) ++mult[x];
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

long characterValue(const Partition& lam, const Partition& rho) {
  if (size(lam) != size(rho)) throw std::invalid_argument("characterValue: size mismatch");
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, long> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find({lam, rho});
    if (it != memo.end()) return it->second;
  }
  long val;
  if (rho.empty()) {
    val = 1;
  } else {
    // beta numbers; strip off a rim hook of length r = rho[0]
    int r = rho[0];
    Partition rest(rho.begin() + 1, rho.end());
    int len = int(lam.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lam[i] + (len - 1 - i);
    std::set<int> beads(beta.begin(), beta.end());
    val = 0;
    for (int b : beta) {
      int to = b - r;
      if (to < 0 || beads.count(to)) continue;
      int between = 0;
      for (int x : beads) between += x > to && x < b;
      std::vector<int> nb;
      for (int x : beads) nb.push_back(x == b ? to : x);
      std::sort(nb.rbegin(), nb.rend());
      Partition mu;
      for (int i = 0; i < len; ++i) mu.push_back(nb[i] - (len - 1 - i));
      val += (between % 2 ? -1 : 1) * characterValue(sortParts(mu), rest);
    }
  }
  std::lock_guard lock(mu);
  memo.emplace(std::pair{lam, rho}, val);
  return val;
}

}  // namespace pfh
