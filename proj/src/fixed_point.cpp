#include "pfh/fixed_point.hpp"

#include <atomic>
#include <cctype>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>
#include <tuple>

namespace pfh {

std::string basisName(Basis b) {
  switch (b) {
    case Basis::H: return "H";
    case Basis::I: return "I";
    case Basis::Idual: return "Idual";
  }
  return "?";
}

Basis parseBasis(const std::string& s) {
  if (s == "H") return Basis::H;
  if (s == "I") return Basis::I;
  if (s == "Idual" || s == "I'") return Basis::Idual;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

// --- KVector ----------------------------------------------------------------

KVector KVector::basisVector(const FlagPoint& p, Basis b) {
  if (!isValidFlag(p)) throw std::invalid_argument("basisVector: invalid flag " + str(p));
  KVector v(p.n(), p.k(), b);
  v.terms_.emplace(p, QTFraction(1));
  return v;
}

QTFraction KVector::coeff(const FlagPoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? QTFraction() : it->second;
}

void KVector::addTerm(const FlagPoint& p, const QTFraction& c) {
  if (c.isZero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (p.n() != n_ || p.k() != k_) throw GradeError("addTerm: flag " + str(p) + " has the wrong grade");
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

KVector& KVector::operator+=(const KVector& o) {
  if (o.n_ != n_ || o.k_ != k_) throw GradeError("KVector +: grade mismatch");
  if (o.basis_ != basis_) throw std::invalid_argument("KVector +: basis mismatch");
  for (auto& [p, c] : o.terms_) addTerm(p, c);
  return *this;
}

KVector& KVector::operator-=(const KVector& o) {
  if (o.n_ != n_ || o.k_ != k_) throw GradeError("KVector -: grade mismatch");
  if (o.basis_ != basis_) throw std::invalid_argument("KVector -: basis mismatch");
  for (auto& [p, c] : o.terms_) addTerm(p, -c);
  return *this;
}

KVector KVector::scaled(const QTFraction& c) const {
  KVector r(n_, k_, basis_);
  if (c.isZero()) return r;
  for (auto& [p, x] : terms_) r.terms_.emplace(p, x * c);
  return r;
}

bool KVector::operator==(const KVector& o) const {
  return n_ == o.n_ && k_ == o.k_ && basis_ == o.basis_ && terms_ == o.terms_;
}

std::string KVector::toString() const {
  std::ostringstream os;
  os << "U(" << n_ << "," << k_ << ")[" << basisName(basis_) << "]{";
  bool first = true;
  for (auto& [p, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.toString() << ")*" << str(p);
    first = false;
  }
  if (first) os << "0";
  return os.str() + "}";
}

// --- switches and caches ----------------------------------------------------

namespace {

std::atomic<bool> gTestMode{false};
std::atomic<Fault> gFault{Fault::None};

using ImageKey = std::tuple<int, int, FlagPoint>;  // op, index, source
std::mutex gCacheMutex;
std::map<ImageKey, KVector> gImages;
std::map<std::pair<Partition, Partition>, QTFraction> gPieri;
std::map<FlagPoint, QTFraction> gLambdaStar;

const QTFraction kQ = QTFraction::q();
const QTFraction kT = QTFraction::t();

}  // namespace

void setTestMode(bool on) { gTestMode = on; }
bool testMode() { return gTestMode; }

void setFault(Fault f) {
  gFault = f;
  clearOperatorCaches();
}
Fault currentFault() { return gFault; }

void clearOperatorCaches() {
  std::lock_guard lock(gCacheMutex);
  gImages.clear();
  gPieri.clear();
  gLambdaStar.clear();
}

// --- Pieri coefficients -----------------------------------------------------

namespace {

QTFraction pieriProduct(const Partition& big, const Partition& small) {
  Cell x = addedCell(big, small);
  QTFraction num(1), den(1);
  for (auto s : cells(small)) {
    if (s.r != x.r && s.c != x.c) continue;
    auto [am, lm] = armLeg(small, s);
    auto [al, ll] = armLeg(big, s);
    if (s.r == x.r) {
      num *= kQ.pow(am) - kT.pow(lm + 1);
      den *= kQ.pow(al) - kT.pow(ll + 1);
    } else {
      num *= kQ.pow(am + 1) - kT.pow(lm);
      den *= kQ.pow(al + 1) - kT.pow(ll);
    }
  }
  return num / den;
}

}  // namespace

QTFraction pieriViaLambdaStar(const Partition& lamPlus, const Partition& lam) {
  Cell x = addedCell(lamPlus, lam);
  Character xi = Character::monomial(-x.c, -x.r);
  Character qm1 = Character::monomial(1, 0) - Character::monomial(0, 0);
  Character tm1 = Character::monomial(0, 1) - Character::monomial(0, 0);
  // combine first so the trivial weight cancels
  Character c = -xi + tm1 * qm1 * charB(lam) * xi + Character::monomial(0, 0);
  return QTFraction::monomial(-x.c, -x.r) * lambdaStar(c);
}

QTFraction pieri(const Partition& lamPlus, const Partition& lam) {
  auto key = std::pair{lamPlus, lam};
  {
    std::lock_guard lock(gCacheMutex);
    auto it = gPieri.find(key);
    if (it != gPieri.end()) return it->second;
  }
  QTFraction d = pieriProduct(lamPlus, lam);
  if (testMode() && d != pieriViaLambdaStar(lamPlus, lam))
    throw std::logic_error("pieri: product formula disagrees with Lambda* formula at " + str(lamPlus));
  if (gFault == Fault::Pieri && addedCell(lamPlus, lam).r == 0) {
    // q -> q+1 in the coefficient of a first-row box
    d *= (kQ + 1) / kQ;
  }
  std::lock_guard lock(gCacheMutex);
  gPieri.emplace(key, d);
  return d;
}

QTFraction hToIFactor(const Partition& lam) {
  QTFraction f = QTFraction::monomial(nOf(conjugate(lam)), nOf(lam));
  return size(lam) % 2 ? -f : f;
}

QTFraction iToIdualFactor(const FlagPoint& p) {
  {
    std::lock_guard lock(gCacheMutex);
    auto it = gLambdaStar.find(p);
    if (it != gLambdaStar.end()) return it->second;
  }
  QTFraction f = lambdaStar(cotangentFlag(p));
  std::lock_guard lock(gCacheMutex);
  gLambdaStar.emplace(p, f);
  return f;
}

// --- per-basis-vector images (H basis) ----------------------------------------

namespace {

void requireIndex(bool ok, const std::string& what) {
  if (!ok) throw GradeError(what);
}

KVector imageT(int m, const FlagPoint& p) {
  KVector out(p.n(), p.k());
  QTFraction wm = p.w(m), wm1 = p.w(m + 1);
  QTFraction qd = gFault == Fault::T ? kQ : kQ - 1;
  out.addTerm(p, qd * wm1 / (wm - wm1));
  FlagPoint s = p;
  std::swap(s.order[m - 1], s.order[m]);
  bool adjacent = wm == kQ * wm1;
  if (adjacent == isValidFlag(s)) throw std::logic_error("applyT: swap validity disagrees with adjacency at " + str(p));
  if (!adjacent) out.addTerm(s, (wm - kQ * wm1) / (wm - wm1));
  return out;
}

// Product over the strip cells for a new box x: prod (x - t w_i)/(x - qt w_i), i in [0, upto).
QTFraction stripFactor(const FlagPoint& p, const QTFraction& x, int upto) {
  QTFraction f(1);
  for (int i = 1; i <= upto; ++i) {
    QTFraction wi = p.w(i);
    f *= (x - kT * wi) / (x - kQ * kT * wi);
  }
  return f;
}

// Target flag lambda+x with x prepended to the first `keep` removed cells.
// Returns false when the target is not a fixed point; then a numerator factor
// x - t w_i must vanish, which is asserted.
bool prependTarget(const FlagPoint& p, Cell x, int keep, FlagPoint& target) {
  target.lambda = addCell(p.lambda, x);
  target.order.assign(1, x);
  target.order.insert(target.order.end(), p.order.begin(), p.order.begin() + keep);
  if (isValidFlag(target)) return true;
  for (int i = 0; i < keep; ++i)
    if (p.order[i].c == x.c && p.order[i].r + 1 == x.r) return false;
  throw std::logic_error("d+: invalid target without a vanishing factor at " + str(p));
}

KVector imageDplus(const FlagPoint& p) {
  const int k = p.k();
  KVector out(p.n() + 1, k + 1);
  QTFraction qk = kQ.pow(k);
  for (auto x : addableCells(p.lambda)) {
    FlagPoint target;
    if (!prependTarget(p, x, k, target)) continue;
    QTFraction xv = chiValue(x);
    QTFraction c = qk * pieri(target.lambda, p.lambda) * stripFactor(p, xv, k);
    if (gFault == Fault::Dplus && x.r == 0) c *= (kQ + 1) / kQ;
    out.addTerm(target, c);
  }
  return out;
}

// The I-basis form, -q^k sum x d prod(...) I.
KVector imageDplusI(const FlagPoint& p) {
  const int k = p.k();
  KVector out(p.n() + 1, k + 1, Basis::I);
  QTFraction qk = kQ.pow(k);
  for (auto x : addableCells(p.lambda)) {
    FlagPoint target;
    if (!prependTarget(p, x, k, target)) continue;
    QTFraction xv = chiValue(x);
    out.addTerm(target, -qk * xv * pieri(target.lambda, p.lambda) * stripFactor(p, xv, k));
  }
  return out;
}

KVector imagePhi(const FlagPoint& p) {
  const int k = p.k();
  KVector out(p.n() + 1, k);
  QTFraction pre = -kQ.pow(k - 1);
  QTFraction y = p.w(k);
  for (auto x : addableCells(p.lambda)) {
    FlagPoint target;
    if (!prependTarget(p, x, k - 1, target)) continue;
    QTFraction xv = chiValue(x);
    out.addTerm(target, pre * pieri(target.lambda, p.lambda) * xv / (xv - kQ * kT * y) * stripFactor(p, xv, k - 1));
  }
  return out;
}

KVector imageDminus(const FlagPoint& p) {
  FlagPoint s = p;
  s.order.pop_back();
  return KVector::basisVector(s);
}

template <class F>
KVector applyLinear(const KVector& v, int tn, int tk, F image) {
  KVector out(tn, tk, Basis::H);
  for (auto& [p, c] : v.terms()) {
    const KVector& img = image(p);
    for (auto& [t, d] : img.terms()) out.addTerm(t, c * d);
  }
  return out;
}

template <class F>
KVector cachedLinear(Op op, int idx, const KVector& v, int tn, int tk, F compute) {
  return applyLinear(v, tn, tk, [&](const FlagPoint& p) -> const KVector& {
    ImageKey key{int(op), idx, p};
    {
      std::lock_guard lock(gCacheMutex);
      auto it = gImages.find(key);
      if (it != gImages.end()) return it->second;
    }
    KVector img = compute(p);
    std::lock_guard lock(gCacheMutex);
    return gImages.emplace(key, std::move(img)).first->second;
  });
}

// Runs f on the H-basis form of v and converts back.
template <class F>
KVector viaH(const KVector& v, F f) {
  if (v.basis() == Basis::H) return f(v);
  return convertBasis(f(convertBasis(v, Basis::H)), v.basis());
}

void requireHorI(const KVector& v, const char* what) {
  if (v.basis() == Basis::Idual) throw std::invalid_argument(std::string(what) + ": needs the H or I basis");
}

KVector hOnly(const KVector& v) { return v.basis() == Basis::H ? v : v.withBasis(Basis::H); }

}  // namespace

// --- public generator actions -------------------------------------------------

KVector applyT(int m, const KVector& v) {
  requireHorI(v, "applyT");
  requireIndex(m >= 1 && m <= v.k() - 1, "T:" + std::to_string(m) + " out of range at k=" + std::to_string(v.k()));
  // same formula in H and I
  return cachedLinear(Op::T, m, hOnly(v), v.n(), v.k(), [m](const FlagPoint& p) { return imageT(m, p); })
      .withBasis(v.basis());
}

KVector applyTinv(int m, const KVector& v) {
  KVector tv = applyT(m, v);
  return (tv + v.scaled(kQ - 1)).scaled(kQ.inverse());
}

KVector applyZ(int j, const KVector& v) {
  requireHorI(v, "applyZ");
  requireIndex(j >= 1 && j <= v.k(), "z:" + std::to_string(j) + " out of range at k=" + std::to_string(v.k()));
  return v.mapCoeffs([j](const FlagPoint& p, const QTFraction& c) { return c * p.w(j); });
}

KVector applyDminus(const KVector& v) {
  requireHorI(v, "applyDminus");
  requireIndex(v.k() >= 1, "d- needs k >= 1");
  return cachedLinear(Op::Dminus, 0, hOnly(v), v.n(), v.k() - 1, imageDminus).withBasis(v.basis());
}

KVector applyDplus(const KVector& v) {
  requireHorI(v, "applyDplus");
  if (v.basis() == Basis::I) {
    KVector out = cachedLinear(Op::Dplus, 1, hOnly(v), v.n() + 1, v.k() + 1, imageDplusI).withBasis(Basis::I);
    if (testMode()) {
      KVector viaHForm = convertBasis(applyDplus(convertBasis(v, Basis::H)), Basis::I);
      if (viaHForm != out) throw std::logic_error("applyDplus: I-basis form disagrees with H-basis form");
    }
    return out;
  }
  return cachedLinear(Op::Dplus, 0, v, v.n() + 1, v.k() + 1, imageDplus);
}

KVector applyPhi(const KVector& v) {
  requireIndex(v.k() >= 1, "phi needs k >= 1");
  return viaH(v, [](const KVector& h) {
    return cachedLinear(Op::Phi, 0, h, h.n() + 1, h.k(), [](const FlagPoint& p) {
      KVector img = imagePhi(p);
      if (testMode()) {
        KVector e = KVector::basisVector(p);
        KVector comm = applyDplus(applyDminus(e)) - applyDminus(applyDplus(e));
        if (comm.scaled((kQ - 1).inverse()) != img)
          throw std::logic_error("applyPhi: closed form disagrees with the commutator at " + str(p));
      }
      return img;
    });
  });
}

KVector applyY(int i, const KVector& v) {
  const int k = v.k();
  requireIndex(i >= 1 && i <= k, "y:" + std::to_string(i) + " out of range at k=" + std::to_string(k));
  return viaH(v, [i, k](const KVector& h) {
    return cachedLinear(Op::Y, i, h, h.n() + 1, k, [i, k](const FlagPoint& p) {
      KVector u = KVector::basisVector(p);
      for (int j = i; j <= k - 1; ++j) u = applyT(j, u);
      u = applyPhi(u);
      for (int j = 1; j <= i - 1; ++j) u = applyTinv(j, u);
      return u.scaled(kQ.pow(i - k));
    });
  });
}

KVector applyDplusStar(const KVector& v) {
  return viaH(v, [](const KVector& h) { return applyZ(1, applyDplus(h)).scaled(kQ.pow(-h.k())); });
}

KVector applyBetaZ(int i, const KVector& v) {
  const int k = v.k();
  requireIndex(i >= 1 && i <= k, "bz:" + std::to_string(i) + " out of range at k=" + std::to_string(k));
  return viaH(v, [i](const KVector& h) {
    return cachedLinear(Op::BetaZ, i, h, h.n() + 1, h.k(), [i](const FlagPoint& p) {
      KVector u = applyZ(i, KVector::basisVector(p));
      for (int j = i - 1; j >= 1; --j) u = applyTinv(j, u);
      u = applyY(1, u);
      for (int j = 1; j <= i - 1; ++j) u = applyT(j, u);
      return u.scaled(-kQ * kT);
    });
  });
}

KVector applyN(const KVector& v) {
  if (v.basis() != Basis::H) throw std::invalid_argument("applyN: needs the H basis");
  return v.mapCoeffs([](const FlagPoint&, const QTFraction& c) { return c.bar(); });
}

KVector applySD(const KVector& v) {
  if (v.basis() != Basis::I) throw std::invalid_argument("applySD: needs the I basis");
  return v.mapCoeffs([](const FlagPoint&, const QTFraction& c) { return c.bar(); });
}

KVector applyStar(const KVector& v) {
  if (v.basis() != Basis::Idual) throw std::invalid_argument("applyStar: needs the I' basis");
  return v.mapCoeffs([](const FlagPoint&, const QTFraction& c) { return c.bar(); });
}

KVector convertBasis(const KVector& v, Basis to) {
  if (v.basis() == to) return v;
  if (v.basis() == Basis::Idual) {
    KVector i = v.mapCoeffs([](const FlagPoint& p, const QTFraction& c) { return c / iToIdualFactor(p); });
    return convertBasis(i.withBasis(Basis::I), to);
  }
  if (v.basis() == Basis::H) {
    KVector i = v.mapCoeffs([](const FlagPoint& p, const QTFraction& c) { return c * hToIFactor(p.lambda); });
    return convertBasis(i.withBasis(Basis::I), to);
  }
  // from I
  if (to == Basis::H)
    return v.mapCoeffs([](const FlagPoint& p, const QTFraction& c) { return c / hToIFactor(p.lambda); })
        .withBasis(Basis::H);
  return v.mapCoeffs([](const FlagPoint& p, const QTFraction& c) { return c * iToIdualFactor(p); })
      .withBasis(Basis::Idual);
}

// --- words ------------------------------------------------------------------

std::string genName(const Gen& g) {
  auto ix = [&](const char* s) { return std::string(s) + ":" + std::to_string(g.idx); };
  switch (g.op) {
    case Op::Dplus: return "d+";
    case Op::Dminus: return "d-";
    case Op::T: return ix("T");
    case Op::Tinv: return ix("Tinv");
    case Op::Z: return ix("z");
    case Op::Y: return ix("y");
    case Op::Phi: return "phi";
    case Op::DplusStar: return "d*+";
    case Op::BetaZ: return ix("bz");
    case Op::N: return "N";
    case Op::SD: return "SD";
    case Op::Star: return "star";
  }
  return "?";
}

std::string OperatorWord::toString() const {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? " " : "") + genName(gens[i]);
  return s;
}

OperatorWord OperatorWord::parse(const std::string& text) {
  OperatorWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string tok = text.substr(start, pos - start);
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("word parse error at position " + std::to_string(start) + " ('" + tok + "'): " + why);
    };
    static const std::regex tokRe(R"(^(d\+|d-|d\*\+|dplusStar|phi|N|SD|star|Tinv|T|z|y|bz)(?::?(\d+)|\((\d+)\))?$)");
    static const std::map<std::string, Op> ops{
        {"d+", Op::Dplus}, {"d-", Op::Dminus}, {"d*+", Op::DplusStar}, {"dplusStar", Op::DplusStar},
        {"phi", Op::Phi},  {"N", Op::N},       {"SD", Op::SD},         {"star", Op::Star},
        {"Tinv", Op::Tinv}, {"T", Op::T},      {"z", Op::Z},           {"y", Op::Y},
        {"bz", Op::BetaZ}};
    static const std::set<Op> indexed{Op::T, Op::Tinv, Op::Z, Op::Y, Op::BetaZ};
    // unicode minus sign is accepted in d−
    if (tok == "d\u2212") tok = "d-";
    std::smatch m;
    if (!std::regex_match(tok, m, tokRe)) fail("unknown symbol");
    Op op = ops.at(m[1].str());
    std::string num = m[2].matched ? m[2].str() : m[3].str();
    bool needs = indexed.count(op) > 0;
    if (needs && num.empty()) fail("missing index");
    if (!needs && !num.empty()) fail("unexpected index");
    int idx = needs ? std::stoi(num) : 0;
    if (needs && idx < 1) fail("index must be positive");
    w.gens.push_back({op, idx});
  }
  return w;
}

std::pair<int, int> OperatorWord::displacement() const {
  int dn = 0, dk = 0;
  for (auto& g : gens) {
    switch (g.op) {
      case Op::Dplus:
      case Op::DplusStar: ++dn, ++dk; break;
      case Op::Dminus: --dk; break;
      case Op::Y:
      case Op::Phi:
      case Op::BetaZ: ++dn; break;
      default: break;
    }
  }
  return {dn, dk};
}

OperatorWord OperatorWord::operator*(const OperatorWord& o) const {
  OperatorWord w = *this;
  w.gens.insert(w.gens.end(), o.gens.begin(), o.gens.end());
  return w;
}

KVector applyGen(const Gen& g, const KVector& v) {
  switch (g.op) {
    case Op::Dplus: return applyDplus(v);
    case Op::Dminus: return applyDminus(v);
    case Op::T: return applyT(g.idx, v);
    case Op::Tinv: return applyTinv(g.idx, v);
    case Op::Z: return applyZ(g.idx, v);
    case Op::Y: return applyY(g.idx, v);
    case Op::Phi: return applyPhi(v);
    case Op::DplusStar: return applyDplusStar(v);
    case Op::BetaZ: return applyBetaZ(g.idx, v);
    case Op::N: return applyN(v);
    case Op::SD: return applySD(v);
    case Op::Star: return applyStar(v);
  }
  throw std::logic_error("applyGen: unknown op");
}

KVector applyWord(const OperatorWord& w, const KVector& v) {
  KVector u = v;
  int step = 0;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it, ++step) {
    try {
      u = applyGen(*it, u);
    } catch (const GradeError& e) {
      throw GradeError("step " + std::to_string(step) + " (" + genName(*it) + ") at grade (" + std::to_string(u.n()) +
                       "," + std::to_string(u.k()) + "): " + e.what());
    }
  }
  return u;
}

OperatorMatrix operatorMatrix(const OperatorWord& w, int n, int k, Basis b) {
  auto [dn, dk] = w.displacement();
  OperatorMatrix m{n, k, n + dn, k + dk, {}};
  if (m.targetK < 0 || m.targetK > m.targetN) throw GradeError("operatorMatrix: word leaves the admissible grades");
  auto& src = enumerateFlags(n, k);
  auto& dst = enumerateFlags(m.targetN, m.targetK);
  m.rows.assign(dst.size(), std::vector<QTFraction>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    KVector img = applyWord(w, convertBasis(KVector::basisVector(src[j]), b));
    if (img.basis() != b) img = convertBasis(img, b);
    for (auto& [p, c] : img.terms()) m.rows[flagIndex(p)][j] = c;
  }
  return m;
}

}  // namespace pfh
