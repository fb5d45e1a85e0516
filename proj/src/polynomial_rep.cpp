#include "pfh/polynomial_rep.hpp"

#include <mutex>
#include <sstream>

namespace pfh {

namespace {
const QTFraction q = QTFraction::q();
const QTFraction t = QTFraction::t();
const Character qMinus1 = Character::monomial(1, 0) - Character::monomial(0, 0);

const SymFunc& elementary(int j) {
  static std::mutex mu;
  static std::map<int, SymFunc> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(j);
  if (it == cache.end()) it = cache.emplace(j, SymFunc::e(j)).first;
  return it->second;
}

void requireIndex(bool ok, const std::string& what) {
  if (!ok) throw GradeError(what);
}
}  // namespace

// --- VPoly ------------------------------------------------------------------------

VPoly VPoly::fromSym(int k, const SymFunc& f) {
  VPoly v(k);
  for (auto& [lam, c] : f.terms()) v.add(std::vector<int>(k, 0), lam, c);
  return v;
}

VPoly VPoly::yMonomial(const std::vector<int>& exps) {
  VPoly v(int(exps.size()));
  v.add(exps, {}, QTFraction(1));
  return v;
}

void VPoly::add(const std::vector<int>& e, const Partition& p, const QTFraction& c) {
  if (c.isZero()) return;
  if (int(e.size()) != k_) throw std::invalid_argument("VPoly: exponent vector of the wrong length");
  auto [it, fresh] = terms_.emplace(Key{e, p}, c);
  if (fresh) return;
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

VPoly& VPoly::operator+=(const VPoly& o) {
  if (o.k_ != k_) throw GradeError("VPoly +: k mismatch");
  for (auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
  if (o.k_ != k_) throw GradeError("VPoly -: k mismatch");
  for (auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

VPoly VPoly::scaled(const QTFraction& c) const {
  VPoly r(k_);
  if (c.isZero()) return r;
  for (auto& [key, x] : terms_) r.terms_.emplace(key, x * c);
  return r;
}

VPoly VPoly::timesSym(const SymFunc& f) const {
  VPoly r(k_);
  for (auto& [key, c] : terms_) {
    SymFunc prod = SymFunc::p(key.second) * f;
    for (auto& [lam, d] : prod.terms()) r.add(key.first, lam, c * d);
  }
  return r;
}

SymFunc VPoly::coefficient(const std::vector<int>& e) const {
  SymFunc f;
  for (auto& [key, c] : terms_)
    if (key.first == e) f.add(key.second, c);
  return f;
}

int VPoly::gradeN() const {
  int n = -1;
  for (auto& [key, c] : terms_) {
    int d = size(key.second) + k_;
    for (int x : key.first) d += x;
    if (n >= 0 && d != n) throw std::logic_error("VPoly: not homogeneous");
    n = d;
  }
  return n;
}

std::string VPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [key, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.toString() << ")";
    if (!key.second.empty()) os << "*p" << str(key.second);
    for (int i = 0; i < k_; ++i)
      if (key.first[i]) os << "*y" << i + 1 << (key.first[i] > 1 ? "^" + std::to_string(key.first[i]) : "");
    first = false;
  }
  return os.str();
}

// --- operators ---------------------------------------------------------------------

VPoly plethAddVar(const VPoly& f, const Character& a, int var, int sign) {
  requireIndex(var >= 1 && var <= f.k(), "plethAddVar: variable out of range");
  VPoly out(f.k());
  std::map<int, QTFraction> ar;
  auto coef = [&](int r) -> const QTFraction& {
    auto it = ar.find(r);
    if (it == ar.end()) {
      QTFraction v(a.adams(r).toPoly());
      it = ar.emplace(r, sign > 0 ? v : -v).first;
    }
    return it->second;
  };
  for (auto& [key, c] : f.terms()) {
    const Partition& lam = key.second;
    // each part either stays p_r or becomes A_r y^r
    std::size_t m = lam.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
      Partition kept;
      std::vector<int> e = key.first;
      QTFraction x = c;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) {
          e[var - 1] += lam[i];
          x *= coef(lam[i]);
        } else {
          kept.push_back(lam[i]);
        }
      }
      out.add(e, kept, x);
    }
  }
  return out;
}

VPoly polyMulY(int i, const VPoly& f) {
  requireIndex(i >= 1 && i <= f.k(), "y:" + std::to_string(i) + " out of range at k=" + std::to_string(f.k()));
  VPoly out(f.k());
  for (auto& [key, c] : f.terms()) {
    auto e = key.first;
    ++e[i - 1];
    out.add(e, key.second, c);
  }
  return out;
}

VPoly polyT(int i, const VPoly& f) {
  requireIndex(i >= 1 && i <= f.k() - 1, "T:" + std::to_string(i) + " out of range at k=" + std::to_string(f.k()));
  VPoly out = f;
  for (auto& [key, c] : f.terms()) {
    int a = key.first[i - 1], b = key.first[i];
    if (a == b) continue;
    int d = std::abs(a - b), m = std::min(a, b);
    QTFraction s = a > b ? c : -c;
    // (s_i y^e - y^e)/(y_{i+1} - y_i) = s * (y_i y_{i+1})^m sum_j y_{i+1}^j y_i^{d-1-j}
    for (int j = 0; j < d; ++j) {
      auto e = key.first;
      e[i - 1] = m + d - 1 - j;
      e[i] = m + j;
      auto up = e;
      ++up[i];
      out.add(up, key.second, s);
      auto lo = e;
      ++lo[i - 1];
      out.add(lo, key.second, -q * s);
    }
  }
  return out;
}

VPoly polyTinv(int i, const VPoly& f) { return (polyT(i, f) + f.scaled(q - 1)).scaled(q.inverse()); }

VPoly polyDminus(const VPoly& f) {
  const int k = f.k();
  requireIndex(k >= 1, "d- needs k >= 1");
  VPoly g = plethAddVar(f, qMinus1, k, -1);
  VPoly out(k - 1);
  for (auto& [key, c] : g.terms()) {
    int m = key.first[k - 1];
    std::vector<int> e(key.first.begin(), key.first.end() - 1);
    SymFunc prod = SymFunc::p(key.second) * elementary(m + 1);
    for (auto& [lam, d] : prod.terms()) out.add(e, lam, m % 2 ? -c * d : c * d);
  }
  return out;
}

namespace {
VPoly extended(const VPoly& f) {
  VPoly out(f.k() + 1);
  for (auto& [key, c] : f.terms()) {
    auto e = key.first;
    e.push_back(0);
    out.add(e, key.second, c);
  }
  return out;
}
}  // namespace

VPoly polyDplus(const VPoly& f) {
  const int k = f.k();
  VPoly g = plethAddVar(extended(f), qMinus1, k + 1, +1);
  for (int i = k; i >= 1; --i) g = polyT(i, g);
  return g;
}

VPoly polyDplusCM(const VPoly& f) {
  const int k = f.k();
  VPoly g = plethAddVar(extended(f), qMinus1, k + 1, +1);
  VPoly out(k + 1);
  for (auto& [key, c] : g.terms()) {
    std::vector<int> e(k + 1);
    e[0] = key.first[k];
    for (int i = 1; i <= k; ++i) e[i] = key.first[i - 1];
    out.add(e, key.second, c * t.pow(key.first[k]));
  }
  return out;
}

VPoly polyPhi(const VPoly& f) {
  const int k = f.k();
  requireIndex(k >= 1, "phi needs k >= 1");
  VPoly g = polyMulY(k, f);
  for (int i = k - 1; i >= 1; --i) g = polyT(i, g);
  return g;
}

VPoly applyWordV(const OperatorWord& w, const VPoly& f) {
  VPoly u = f;
  int step = 0;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it, ++step) {
    try {
      switch (it->op) {
        case Op::Dplus: u = polyDplus(u); break;
        case Op::Dminus: u = polyDminus(u); break;
        case Op::T: u = polyT(it->idx, u); break;
        case Op::Tinv: u = polyTinv(it->idx, u); break;
        case Op::Y: u = polyMulY(it->idx, u); break;
        case Op::Phi: u = polyPhi(u); break;
        default: throw std::invalid_argument("applyWordV: " + genName(*it) + " has no action on V here");
      }
    } catch (const GradeError& e) {
      throw GradeError("step " + std::to_string(step) + " (" + genName(*it) + "): " + e.what());
    }
  }
  return u;
}

// --- Phi ---------------------------------------------------------------------------

OperatorWord vWord(const AIndex& x) {
  const int k = x.k(), l = int(x.mu.size());
  std::string w;
  for (int i = 0; i < l; ++i) w += "d- ";
  for (int j = 1; j <= k; ++j)
    for (int e = 0; e < x.a[j - 1]; ++e) w += "y:" + std::to_string(j) + " ";
  for (int j = 1; j <= l; ++j)
    for (int e = 0; e < x.mu[l - j] - 1; ++e) w += "y:" + std::to_string(k + j) + " ";
  for (int i = 0; i < k + l; ++i) w += "d+ ";
  return OperatorWord::parse(w);
}

VPoly vPoly(const AIndex& x) {
  static std::mutex mu;
  static std::map<AIndex, VPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
  }
  VPoly v = applyWordV(vWord(x), VPoly::one(0));
  std::lock_guard lock(mu);
  return cache.emplace(x, v).first->second;
}

KVector phiWordImage(const AIndex& x) { return applyWord(vWord(x), KVector::vacuum()); }

namespace {

// Monomial basis of V_{n,k}: (y exponents of total r, p_lam with |lam| = n-k-r).
std::vector<VPoly::Key> vKeys(int n, int k) {
  std::vector<VPoly::Key> keys;
  const int d = n - k;
  std::vector<std::vector<int>> comps{{}};
  // weak compositions of every r <= d into k parts
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<int>> next;
    for (auto& c : comps) {
      int used = 0;
      for (int x : c) used += x;
      for (int v = 0; used + v <= d; ++v) {
        auto e = c;
        e.push_back(v);
        next.push_back(e);
      }
    }
    comps = std::move(next);
  }
  for (auto& e : comps) {
    int r = 0;
    for (int x : e) r += x;
    for (auto& lam : partitions(d - r)) keys.push_back({e, lam});
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Phi as a matrix from vKeys(n,k) coordinates to enumerateFlags(n,k) coordinates.
struct PhiData {
  std::vector<VPoly::Key> keys;
  QTMatrix phi;  // rows flags, columns keys
};

const PhiData& phiData(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PhiData> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  PhiData d;
  d.keys = vKeys(n, k);
  auto& A = enumerateAIndices(n, k);
  auto& M = enumerateFlags(n, k);
  const std::size_t dim = d.keys.size();
  if (A.size() != dim) throw std::logic_error("phiData: dim V_{n,k} != |A(n,k)|");
  std::map<VPoly::Key, std::size_t> pos;
  for (std::size_t i = 0; i < dim; ++i) pos[d.keys[i]] = i;
  // columns v_x in key coordinates
  QTMatrix vm(dim, std::vector<QTFraction>(dim));
  QTMatrix um(M.size(), std::vector<QTFraction>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    VPoly v = vPoly(A[j]);
    for (auto& [key, c] : v.terms()) vm.at(pos.at(key))[j] = c;
    KVector u = phiWordImage(A[j]);
    for (auto& [p, c] : u.terms()) um[flagIndex(p)][j] = c;
  }
  // phi = um * vm^{-1}, column by column
  d.phi.assign(M.size(), std::vector<QTFraction>(dim));
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<QTFraction> e(dim);
    e[c] = QTFraction(1);
    auto x = solve(vm, e);
    if (!x) throw std::logic_error("phiData: v-basis is singular at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    for (std::size_t r = 0; r < M.size(); ++r) {
      QTFraction s;
      for (std::size_t j = 0; j < dim; ++j)
        if (!um[r][j].isZero() && !(*x)[j].isZero()) s += um[r][j] * (*x)[j];
      d.phi[r][c] = s;
    }
  }
  std::lock_guard lock(mu);
  return cache.emplace(std::pair{n, k}, std::move(d)).first->second;
}

}  // namespace

KVector phiOfPoly(const VPoly& f, int n, int k) {
  if (f.k() != k) throw GradeError("phiOfPoly: k mismatch");
  KVector out(n, k);
  if (f.isZero()) return out;
  if (f.gradeN() != n) throw GradeError("phiOfPoly: F is not in V_{n,k}");
  auto& d = phiData(n, k);
  auto& M = enumerateFlags(n, k);
  for (auto& [key, c] : f.terms()) {
    auto it = std::lower_bound(d.keys.begin(), d.keys.end(), key);
    std::size_t col = std::size_t(it - d.keys.begin());
    for (std::size_t r = 0; r < M.size(); ++r)
      if (!d.phi[r][col].isZero()) out.addTerm(M[r], c * d.phi[r][col]);
  }
  return out;
}

std::optional<AIndex> leadingIndex(const KVector& v) {
  std::vector<AIndex> supp;
  for (auto& [p, c] : v.terms()) supp.push_back(fromFlag(p));
  for (auto& x : supp) {
    bool top = true;
    for (auto& y : supp) top &= bruhatLeq(x, y);
    if (top) return x;
  }
  return std::nullopt;
}

TriangularityReport checkTriangularity(int n, int k) {
  TriangularityReport rep;
  rep.n = n;
  rep.k = k;
  auto& A = enumerateAIndices(n, k);
  auto& M = enumerateFlags(n, k);
  rep.size = int(A.size());
  QTMatrix m(M.size(), std::vector<QTFraction>(A.size()));
  std::set<AIndex> leads;
  for (std::size_t j = 0; j < A.size(); ++j) {
    KVector img = phiWordImage(A[j]);
    for (auto& [p, c] : img.terms()) m[flagIndex(p)][j] = c;
    auto lt = leadingIndex(img);
    if (!lt) {
      rep.uniqueLeading = false;
      rep.problems.push_back("no unique leading index for " + str(A[j]));
      continue;
    }
    leads.insert(*lt);
    if (*lt != A[j]) {
      rep.leadingIsIndex = false;
      rep.problems.push_back("leading index of " + str(A[j]) + " is " + str(*lt));
    }
  }
  rep.bijective = leads.size() == A.size();
  rep.rank = rank(m);
  return rep;
}

// --- leading-term rules ------------------------------------------------------------

namespace {

// H_{mu,a} with a in the order the rules consume it, i.e. ours reversed
FlagPoint flagOf(const Partition& mu, std::vector<int> a) {
  std::reverse(a.begin(), a.end());
  return toFlag({mu, a});
}

AIndex ruleIndex(const Partition& mu, std::vector<int> a) {
  std::reverse(a.begin(), a.end());
  return {mu, a};
}

}  // namespace

LTReport checkLTRules(int n, int k) {
  LTReport rep;
  rep.n = n;
  rep.k = k;
  for (auto& x : enumerateAIndices(n, k)) {
    std::vector<int> a(x.a.rbegin(), x.a.rend());  // rule order
    KVector h = KVector::basisVector(flagOf(x.mu, a));
    auto expect = [&](const KVector& v, const AIndex& want, const std::string& what) {
      ++rep.checked;
      auto lt = leadingIndex(v);
      if (!lt || *lt != want)
        rep.failures.push_back(what + " on " + str(x) + ": expected " + str(want) + ", got " +
                               (lt ? str(*lt) : std::string("none")));
    };
    // T_{k-i}^{+-1}: the leading one of (mu,a) and (mu, s_i a)
    for (int i = 1; i <= k - 1; ++i) {
      auto b = a;
      std::swap(b[i - 1], b[i]);
      AIndex ia = ruleIndex(x.mu, a), ib = ruleIndex(x.mu, b);
      AIndex top = bruhatLeq(ia, ib) ? ia : ib;
      if (!bruhatLeq(ia, ib) && !bruhatLeq(ib, ia)) {
        rep.failures.push_back("T rule: incomparable pair at " + str(x));
        continue;
      }
      expect(applyT(k - i, h), top, "T:" + std::to_string(k - i));
      expect(applyTinv(k - i, h), top, "Tinv:" + std::to_string(k - i));
    }
    if (k >= 1) {
      // phi: (mu, (a_2..a_k, a_1+1)). Only for mu empty, which is all the recursion
      // uses; with mu nonempty the i = a_1+1 removal term comes out lower.
      std::vector<int> b(a.begin() + 1, a.end());
      b.push_back(a[0] + 1);
      if (x.mu.empty()) expect(applyPhi(h), ruleIndex(x.mu, b), "phi");
      // d-: (mu + {a_1+1}, (a_2..a_k))
      Partition mu = x.mu;
      mu.push_back(a[0] + 1);
      expect(applyDminus(h), ruleIndex(sortParts(mu), std::vector<int>(a.begin() + 1, a.end())), "d-");
    }
  }
  // the g^j / f^j recursion, started from g = Phi(v_{empty,b})
  for (auto& x : enumerateAIndices(n, k)) {
    if (!x.mu.empty() || k == 0) continue;
    std::vector<int> a(x.a.rbegin(), x.a.rend());
    if (*std::max_element(a.begin(), a.end()) == 0) continue;
    auto seq = ltSequence(a);
    int i = int(std::max_element(a.begin(), a.end()) - a.begin()) + 1;
    auto step = [&](const KVector& v, const std::vector<int>& c, const std::string& what) {
      ++rep.checked;
      auto lt = leadingIndex(v);
      AIndex want = ruleIndex({}, c);
      if (!lt || *lt != want)
        rep.failures.push_back("recursion for " + str(x) + " at " + what + ": expected " + str(want) + ", got " +
                               (lt ? str(*lt) : std::string("none")));
    };
    std::size_t s = 0;
    KVector g = phiWordImage(ruleIndex({}, seq[0]));
    step(g, seq[s++], "g^" + std::to_string(i));
    for (int j = i - 1; j >= 1; --j) {
      g = applyT(k - j, g);
      step(g, seq[s++], "g^" + std::to_string(j));
    }
    KVector f = applyPhi(g);
    step(f, seq[s++], "f^" + std::to_string(k));
    for (int j = k - 1; j >= i; --j) {
      f = applyTinv(k - j, f);
      step(f, seq[s++], "f^" + std::to_string(j));
    }
  }
  return rep;
}

std::vector<std::vector<int>> ltSequence(const std::vector<int>& a) {
  const int k = int(a.size());
  int m = *std::max_element(a.begin(), a.end());
  int i = int(std::find(a.begin(), a.end(), m) - a.begin()) + 1;
  std::vector<int> b = a;
  --b[i - 1];
  std::vector<std::vector<int>> out;
  // b^i = b, b^j = s_j b^{j+1}
  std::vector<int> cur = b;
  out.push_back(cur);
  for (int j = i - 1; j >= 1; --j) {
    std::swap(cur[j - 1], cur[j]);
    out.push_back(cur);
  }
  std::vector<int> ak(cur.begin() + 1, cur.end());
  ak.push_back(cur[0] + 1);
  cur = ak;
  out.push_back(cur);
  for (int j = k - 1; j >= i; --j) {
    std::swap(cur[j - 1], cur[j]);
    out.push_back(cur);
  }
  return out;
}

// --- equivariance ------------------------------------------------------------------

EquivarianceReport checkPhiEquivariance(const OperatorWord& w, int n, int k) {
  EquivarianceReport rep;
  rep.word = w.toString();
  rep.n = n;
  rep.k = k;
  auto [dn, dk] = w.displacement();
  for (auto& x : enumerateAIndices(n, k)) {
    VPoly g;
    KVector geo;
    try {
      g = applyWordV(w, vPoly(x));
      geo = applyWord(w, phiWordImage(x));
    } catch (const GradeError&) {
      continue;
    }
    ++rep.checked;
    KVector alg = phiOfPoly(g, n + dn, k + dk);
    if (alg != geo) rep.failures.push_back("x=" + str(x) + ": residual " + (alg - geo).toString());
  }
  return rep;
}

// --- Macdonald oracle --------------------------------------------------------------

SymFunc classicalMacdonald(const Partition& mu) {
  const int n = size(mu);
  if (n == 0) return SymFunc(QTFraction(1));
  auto parts = partitions(n);
  const std::size_t dim = parts.size();
  Partition muc = conjugate(mu);
  Character one = Character::monomial(0, 0);
  Character oneMinusQ = one - Character::monomial(1, 0), oneMinusT = one - Character::monomial(0, 1);
  // images of each s_lam under both plethysms, in Schur coordinates
  std::vector<std::map<Partition, QTFraction>> imq, imt;
  for (auto& lam : parts) {
    SymFunc s = SymFunc::schur(lam);
    imq.push_back(s.plethysm(oneMinusQ).toSchur());
    imt.push_back(s.plethysm(oneMinusT).toSchur());
  }
  QTMatrix a;
  std::vector<QTFraction> b;
  for (auto& nu : parts) {
    if (!dominates(nu, mu)) {
      std::vector<QTFraction> row(dim);
      for (std::size_t j = 0; j < dim; ++j)
        if (auto it = imq[j].find(nu); it != imq[j].end()) row[j] = it->second;
      a.push_back(row);
      b.emplace_back();
    }
    if (!dominates(nu, muc)) {
      std::vector<QTFraction> row(dim);
      for (std::size_t j = 0; j < dim; ++j)
        if (auto it = imt[j].find(nu); it != imt[j].end()) row[j] = it->second;
      a.push_back(row);
      b.emplace_back();
    }
  }
  std::vector<QTFraction> norm(dim);
  norm[std::find(parts.begin(), parts.end(), Partition{n}) - parts.begin()] = QTFraction(1);
  a.push_back(norm);
  b.emplace_back(1);
  if (rank(a) != int(dim)) throw std::logic_error("classicalMacdonald: axioms do not determine H at " + str(mu));
  auto x = solve(a, b);
  if (!x) throw std::logic_error("classicalMacdonald: inconsistent axioms at " + str(mu));
  std::map<Partition, QTFraction> s;
  for (std::size_t j = 0; j < dim; ++j)
    if (!(*x)[j].isZero()) s[parts[j]] = (*x)[j];
  return SymFunc::fromSchur(s);
}

QTMatrix macdonaldE1Matrix(int n) {
  auto src = partitions(n), dst = partitions(n + 1);
  // Schur coordinates of the target basis
  std::vector<Partition> sch = dst;
  QTMatrix basis(sch.size(), std::vector<QTFraction>(dst.size()));
  for (std::size_t j = 0; j < dst.size(); ++j)
    for (auto& [lam, c] : classicalMacdonald(dst[j]).toSchur())
      basis[std::find(sch.begin(), sch.end(), lam) - sch.begin()][j] = c;
  QTMatrix out(dst.size(), std::vector<QTFraction>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    auto prod = (SymFunc::e(1) * classicalMacdonald(src[j])).toSchur();
    std::vector<QTFraction> rhs(sch.size());
    for (auto& [lam, c] : prod) rhs[std::find(sch.begin(), sch.end(), lam) - sch.begin()] = c;
    auto x = solve(basis, rhs);
    if (!x) throw std::logic_error("macdonaldE1Matrix: product not in the span");
    for (std::size_t i = 0; i < dst.size(); ++i) out[i][j] = (*x)[i];
  }
  return out;
}

}  // namespace pfh
