#include "pfh/shapes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pfh {

// --- partitions -----------------------------------------------------------

bool isPartition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  Partition c(p[0], 0);
  for (int row : p)
    for (int j = 0; j < row; ++j) ++c[j];
  return c;
}

int nOf(const Partition& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += int(i) * p[i];
  return s;
}

bool contains(const Partition& p, Cell s) {
  return s.r >= 0 && s.c >= 0 && s.r < int(p.size()) && s.c < p[s.r];
}

std::vector<Cell> cells(const Partition& p) {
  std::vector<Cell> out;
  for (int r = 0; r < int(p.size()); ++r)
    for (int c = 0; c < p[r]; ++c) out.push_back({r, c});
  return out;
}

std::vector<Cell> addableCells(const Partition& p) {
  std::vector<Cell> out;
  for (int r = 0; r <= int(p.size()); ++r) {
    int len = r < int(p.size()) ? p[r] : 0;
    if (r == 0 || p[r - 1] > len) out.push_back({r, len});
  }
  return out;
}

std::vector<Cell> removableCells(const Partition& p) {
  std::vector<Cell> out;
  for (int r = 0; r < int(p.size()); ++r)
    if (r + 1 == int(p.size()) || p[r + 1] < p[r]) out.push_back({r, p[r] - 1});
  return out;
}

Partition addCell(const Partition& p, Cell s) {
  Partition q = p;
  if (s.r == int(q.size())) q.push_back(0);
  if (s.r > int(q.size()) || q[s.r] != s.c) throw std::invalid_argument("addCell: cell not addable");
  ++q[s.r];
  if (!isPartition(q)) throw std::invalid_argument("addCell: cell not addable");
  return q;
}

Partition removeCell(const Partition& p, Cell s) {
  if (s.r >= int(p.size()) || p[s.r] != s.c + 1) throw std::invalid_argument("removeCell: cell not removable");
  Partition q = p;
  --q[s.r];
  if (q[s.r] == 0) q.pop_back();
  if (!isPartition(q)) throw std::invalid_argument("removeCell: cell not removable");
  return q;
}

namespace {
void partitionsRec(int n, int maxPart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxPart); p >= 1; --p) {
    cur.push_back(p);
    partitionsRec(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitionsRec(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Cell addedCell(const Partition& big, const Partition& small) {
  if (size(big) != size(small) + 1) throw std::invalid_argument("addedCell: sizes differ by more than one");
  for (auto x : addableCells(small))
    if (addCell(small, x) == big) return x;
  throw std::invalid_argument("addedCell: not a one-cell extension");
}

bool dominates(const Partition& a, const Partition& b) {
  if (size(a) != size(b)) throw std::invalid_argument("dominates: sizes differ");
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

Partition sortParts(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  while (!v.empty() && v.back() == 0) v.pop_back();
  if (!v.empty() && v.back() < 0) throw std::invalid_argument("sortParts: negative entry");
  return v;
}

std::string str(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

Character chi(Cell s) { return Character::monomial(s.c, s.r); }
QTFraction chiValue(Cell s) { return QTFraction::monomial(s.c, s.r); }

std::pair<int, int> armLeg(const Partition& p, Cell s) {
  if (!contains(p, s)) throw std::out_of_range("armLeg: cell outside partition");
  int leg = 0;
  while (s.r + leg + 1 < int(p.size()) && p[s.r + leg + 1] > s.c) ++leg;
  return {p[s.r] - s.c - 1, leg};
}

Character charB(const Partition& p) {
  Character b;
  for (auto s : cells(p)) b += chi(s);
  return b;
}

Character cotangentHilb(const Partition& p) {
  Character direct;
  for (auto s : cells(p)) {
    auto [a, l] = armLeg(p, s);
    direct += Character::monomial(a + 1, -l);
    direct += Character::monomial(-a, l + 1);
  }
  Character b = charB(p), bs = b.dual();
  Character qm1 = Character::monomial(1, 0) - Character::monomial(0, 0);
  Character tm1 = Character::monomial(0, 1) - Character::monomial(0, 0);
  Character closed = b.shifted(1, 1) + bs - qm1 * tm1 * b * bs;
  if (closed != direct) throw std::logic_error("cotangentHilb: arm/leg sum disagrees with closed form at " + str(p));
  return direct;
}

// --- flags ----------------------------------------------------------------

std::vector<Partition> FlagPoint::chain() const {
  std::vector<Partition> ch{lambda};
  for (auto s : order) ch.push_back(removeCell(ch.back(), s));
  return ch;
}

Partition FlagPoint::smallest() const {
  Partition p = lambda;
  for (auto s : order) p = removeCell(p, s);
  return p;
}

bool isValidFlag(const FlagPoint& p) {
  if (!isPartition(p.lambda)) return false;
  Partition cur = p.lambda;
  std::set<int> cols;
  for (auto s : p.order) {
    if (s.r >= int(cur.size()) || cur[s.r] != s.c + 1) return false;
    if (s.r + 1 < int(cur.size()) && cur[s.r + 1] == cur[s.r]) return false;
    --cur[s.r];
    if (cur[s.r] == 0) cur.pop_back();
    if (!cols.insert(s.c).second) return false;
  }
  return true;
}

std::string str(const FlagPoint& p) {
  std::string s = "{" + str(p.lambda) + ";";
  for (std::size_t i = 0; i < p.order.size(); ++i)
    s += (i ? "," : "") + std::string("(") + std::to_string(p.order[i].r) + "," + std::to_string(p.order[i].c) + ")";
  return s + "}";
}

Character cotangentFlag(const FlagPoint& p) {
  Partition small = p.smallest();
  Character bs = charB(small), bl = charB(p.lambda).dual();
  Character qm1 = Character::monomial(1, 0) - Character::monomial(0, 0);
  Character tm1 = Character::monomial(0, 1) - Character::monomial(0, 0);
  Character out = bs.shifted(1, 1) + bl - tm1 * qm1 * bs * bl;
  Character ws;
  for (int i = 0; i < p.k(); ++i)
    for (int j = 0; j <= i; ++j)
      ws += Character::monomial(p.order[i].c - p.order[j].c, p.order[i].r - p.order[j].r);
  out += qm1 * ws;
  if (!out.allNonnegative()) throw std::logic_error("cotangentFlag: negative multiplicity at " + str(p));
  return out;
}

Partition interleave(const FlagPoint& p) {
  auto ch = p.chain();
  std::vector<int> rows;
  std::size_t len = p.lambda.size();
  for (std::size_t r = 0; r < len; ++r)
    for (auto& lam : ch) rows.push_back(r < lam.size() ? lam[r] : 0);
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i] > rows[i - 1]) throw std::invalid_argument("interleave: not weakly decreasing, invalid flag " + str(p));
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

Character cotangentViaInterleave(const FlagPoint& p) {
  int m = p.k() + 1;
  Character out;
  const Character hilb = cotangentHilb(interleave(p));
  for (auto& [key, mult] : hilb.terms()) {
    int dt = key.second;
    if (((dt % m) + m) % m == 0) out += Character::monomial(key.first, dt / m, mult);
  }
  return out;
}

Character tangentTheta(const FlagPoint& p) {
  const int k = p.k();
  auto ch = p.chain();
  const Partition& small = ch[k];
  // arm in lambda^{(n-k+j)}
  auto arm = [&](Cell s, int j) { return ch[k - j][s.r] - s.c - 1; };
  Character out = Character::monomial(1, 0, k);
  for (auto s : cells(small)) {
    int l = armLeg(small, s).second;
    int label = 0;
    for (int j = 0; j < k; ++j)
      if (p.order[j].c == s.c && p.order[j].r > s.r) label = j + 1;
    if (label == 0) {
      out += Character::monomial(arm(s, 0) + 1, -l);
      out += Character::monomial(-arm(s, k), l + 1);
    } else {
      int i = k + 1 - label;  // labels count removals from the small end
      out += Character::monomial(arm(s, i) + 1, -l - 1);
      out += Character::monomial(-arm(s, i - 1), l + 1);
    }
  }
  return out;
}

namespace {

void flagsRec(const Partition& cur, int left, FlagPoint& fp, std::set<int>& cols, std::vector<FlagPoint>& out) {
  if (left == 0) {
    out.push_back(fp);
    return;
  }
  for (auto s : removableCells(cur)) {
    if (cols.count(s.c)) continue;
    cols.insert(s.c);
    fp.order.push_back(s);
    flagsRec(removeCell(cur, s), left - 1, fp, cols, out);
    fp.order.pop_back();
    cols.erase(s.c);
  }
}

std::mutex gEnumMutex;

}  // namespace

const std::vector<FlagPoint>& enumerateFlags(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("enumerateFlags: need 0 <= k <= n");
  static std::map<std::pair<int, int>, std::vector<FlagPoint>> cache;
  std::lock_guard lock(gEnumMutex);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  std::vector<FlagPoint> out;
  for (auto& lam : partitions(n)) {
    FlagPoint fp{lam, {}};
    std::set<int> cols;
    flagsRec(lam, k, fp, cols, out);
  }
  std::sort(out.begin(), out.end());
  return cache.emplace(std::pair{n, k}, std::move(out)).first->second;
}

std::size_t flagIndex(const FlagPoint& p) {
  auto& all = enumerateFlags(p.n(), p.k());
  auto it = std::lower_bound(all.begin(), all.end(), p);
  if (it == all.end() || *it != p) throw std::invalid_argument("flagIndex: not a valid flag " + str(p));
  return std::size_t(it - all.begin());
}

// --- A(n,k) ---------------------------------------------------------------

int AIndex::sum() const { return std::accumulate(a.begin(), a.end(), 0); }

std::string str(const AIndex& x) {
  std::string s = "(" + str(x.mu) + ",(";
  for (std::size_t i = 0; i < x.a.size(); ++i) s += (i ? "," : "") + std::to_string(x.a[i]);
  return s + "))";
}

namespace {
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

const std::vector<AIndex>& enumerateAIndices(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("enumerateAIndices: need 0 <= k <= n");
  static std::map<std::pair<int, int>, std::vector<AIndex>> cache;
  std::lock_guard lock(gEnumMutex);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  std::vector<AIndex> out;
  for (int m = 0; m <= n - k; ++m) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(n - k - m, k, cur, comps);
    for (auto& mu : partitions(m))
      for (auto& a : comps) out.push_back({mu, a});
  }
  std::sort(out.begin(), out.end());
  return cache.emplace(std::pair{n, k}, std::move(out)).first->second;
}

FlagPoint toFlag(const AIndex& x) {
  if (!isPartition(x.mu)) throw std::invalid_argument("toFlag: mu is not a partition");
  for (int v : x.a)
    if (v < 0) throw std::invalid_argument("toFlag: negative entry in a");
  const int k = x.k();
  std::vector<Partition> ch;
  for (int i = 0; i <= k; ++i) {
    std::vector<int> v(x.mu.begin(), x.mu.end());
    for (int j = 0; j < k; ++j) v.push_back(j < i ? x.a[j] : x.a[j] + 1);
    ch.push_back(conjugate(sortParts(v)));
  }
  FlagPoint p{ch[0], {}};
  for (int i = 0; i < k; ++i) p.order.push_back(addedCell(ch[i], ch[i + 1]));
  if (!isValidFlag(p)) throw std::logic_error("toFlag: produced an invalid flag for " + str(x));
  return p;
}

AIndex fromFlag(const FlagPoint& p) {
  if (!isValidFlag(p)) throw std::invalid_argument("fromFlag: invalid flag " + str(p));
  AIndex x;
  // the j-th removed cell shortens a column from a_j+1 to a_j
  for (auto s : p.order) x.a.push_back(s.r);
  std::multiset<int> cols;
  for (int c : conjugate(p.smallest())) cols.insert(c);
  for (int v : x.a) {
    if (v == 0) continue;
    auto it = cols.find(v);
    if (it == cols.end()) throw std::logic_error("fromFlag: inconsistent chain at " + str(p));
    cols.erase(it);
  }
  x.mu = sortParts(std::vector<int>(cols.begin(), cols.end()));
  return x;
}

// --- Bruhat-type order ----------------------------------------------------

std::vector<int> alphaVector(const AIndex& x, int l) {
  if (l < int(x.mu.size())) throw std::invalid_argument("alphaVector: l too small");
  std::vector<int> al(l - x.mu.size(), 0);
  for (auto it = x.mu.rbegin(); it != x.mu.rend(); ++it) al.push_back(*it);
  for (int j = x.k() - 1; j >= 0; --j) al.push_back(x.a[j] + 1);
  return al;
}

AIndex fromAlpha(const std::vector<int>& alpha, int k) {
  const int l = int(alpha.size()) - k;
  AIndex x;
  for (int j = 1; j <= k; ++j) x.a.push_back(alpha[l + k - j] - 1);
  x.mu = sortParts(std::vector<int>(alpha.begin(), alpha.begin() + l));
  return x;
}

std::set<AIndex> bruhatMoves(const AIndex& x, int l) {
  const int k = x.k();
  const auto al = alphaVector(x, l);
  const int m = int(al.size());
  std::set<AIndex> out;
  auto emit = [&](std::vector<int> v) {
    for (int j = m - k; j < m; ++j)
      if (v[j] <= 0) return;
    AIndex y = fromAlpha(v, k);
    if (y != x) out.insert(std::move(y));
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i < j && al[i] > al[j]) {
        auto v = al;
        std::swap(v[i], v[j]);
        emit(std::move(v));
      }
      if (i != j && al[i] < al[j] - 1) {
        auto v = al;
        v[i] = al[j] - 1;
        v[j] = al[i] + 1;
        emit(std::move(v));
      }
    }
  return out;
}

namespace {

std::set<AIndex> reach(const AIndex& x, int l) {
  std::set<AIndex> seen{x};
  std::deque<AIndex> todo{x};
  while (!todo.empty()) {
    AIndex cur = std::move(todo.front());
    todo.pop_front();
    for (auto& y : bruhatMoves(cur, l))
      if (seen.insert(y).second) todo.push_back(y);
  }
  return seen;
}

std::mutex gBruhatMutex;

}  // namespace

const std::set<AIndex>& bruhatUpSet(const AIndex& x) {
  static std::map<AIndex, std::set<AIndex>> cache;
  {
    std::lock_guard lock(gBruhatMutex);
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
  }
  const int l = x.n() - x.k() + 1;
  auto up = reach(x, l);
  if (reach(x, l + 1) != up) throw std::logic_error("bruhatUpSet: result depends on l at " + str(x));
  std::lock_guard lock(gBruhatMutex);
  return cache.emplace(x, std::move(up)).first->second;
}

bool bruhatLeq(const AIndex& x, const AIndex& y) {
  if (x.n() != y.n() || x.k() != y.k()) throw std::invalid_argument("bruhatLeq: indices from different A(n,k)");
  return bruhatUpSet(x).count(y) > 0;
}

}  // namespace pfh
