#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfh/fixed_point.hpp"
#include "pfh/linalg.hpp"
#include "pfh/symfunc.hpp"

namespace pfh {

/// Element of V_k = Lambda (x) Q(q,t)[y_1..y_k]: coefficients on p_lambda y^e.
class VPoly {
 public:
  using Key = std::pair<std::vector<int>, Partition>;  // (y exponents, power-sum index)

  explicit VPoly(int k = 0) : k_(k) {}
  static VPoly one(int k) { return fromSym(k, SymFunc(QTFraction(1))); }
  static VPoly fromSym(int k, const SymFunc& f);
  static VPoly yMonomial(const std::vector<int>& exps);

  int k() const { return k_; }
  const std::map<Key, QTFraction>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  void add(const std::vector<int>& e, const Partition& p, const QTFraction& c);

  VPoly& operator+=(const VPoly& o);
  VPoly& operator-=(const VPoly& o);
  friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
  friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
  VPoly scaled(const QTFraction& c) const;
  /// Multiplies by a y-free symmetric function.
  VPoly timesSym(const SymFunc& f) const;

  /// The symmetric-function coefficient of y^e.
  SymFunc coefficient(const std::vector<int>& e) const;
  /// n = (symmetric degree) + (y degree) + k; throws unless homogeneous.
  int gradeN() const;

  bool operator==(const VPoly& o) const { return k_ == o.k_ && terms_ == o.terms_; }
  std::string toString() const;

 private:
  int k_;
  std::map<Key, QTFraction> terms_;
};

/// F[X + sign * A y_var]: p_r -> p_r + sign * A(q^r, t^r) y_var^r. The alphabet
/// A is a character, so A = q - 1 gives (q^r - 1), not (q-1)^r.
VPoly plethAddVar(const VPoly& f, const Character& a, int var, int sign);

VPoly polyMulY(int i, const VPoly& f);
/// F + (y_{i+1} - q y_i)(s_i F - F)/(y_{i+1} - y_i); fixes symmetric F.
VPoly polyT(int i, const VPoly& f);
VPoly polyTinv(int i, const VPoly& f);
/// -Res_{y_k} F[X - (q-1) y_k] pExp[-X/y_k].
VPoly polyDminus(const VPoly& f);
/// T_1 ... T_k (F[X + (q-1) y_{k+1}]).
VPoly polyDplus(const VPoly& f);
/// gamma F[X + (q-1) y_{k+1}], gamma(y_i) = y_{i+1}, gamma(y_{k+1}) = t y_1.
VPoly polyDplusCM(const VPoly& f);
/// T_1 ... T_{k-1} y_k.
VPoly polyPhi(const VPoly& f);

/// Words over d+ d- T Tinv y phi act on V; any other symbol throws.
VPoly applyWordV(const OperatorWord& w, const VPoly& f);

// --- the map Phi ----------------------------------------------------------------

/// d_-^l y_1^{a_1} .. y_k^{a_k} y_{k+1}^{mu_l - 1} .. y_{k+l}^{mu_1 - 1} d_+^{k+l}.
/// Our a runs opposite to the order d- and phi consume it, hence a_j on y_j.
OperatorWord vWord(const AIndex& x);
/// vWord applied to 1 in V_0.
VPoly vPoly(const AIndex& x);
/// vWord applied to the vacuum.
KVector phiWordImage(const AIndex& x);

/// Phi(F) for F in V_{n,k}: coordinates in the v-basis, mapped to U. Throws
/// if F is not in the span (which would contradict the basis property).
KVector phiOfPoly(const VPoly& f, int n, int k);

struct TriangularityReport {
  int n = 0, k = 0;
  int size = 0;
  int rank = 0;
  bool uniqueLeading = true;    // every image has one extremal support index
  bool bijective = true;        // leading index map is onto A(n,k)
  bool leadingIsIndex = true;   // and sends (mu,a) to itself
  std::vector<std::string> problems;
  bool pass() const { return rank == size && uniqueLeading && bijective && leadingIsIndex; }
};
TriangularityReport checkTriangularity(int n, int k);

/// The support index (via fromFlag) lying <=_bru every other support index, if any.
/// The moves climb toward smaller dominance, so this is the dominance-largest term.
std::optional<AIndex> leadingIndex(const KVector& v);

struct LTReport {
  int n = 0, k = 0;
  int checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};
/// The leading-term rules for T^{+-1} and d- on every H_{mu,a} of U_{n,k}, the phi rule
/// for mu empty, and the g^j / f^j recursion for every (empty, a). The a of the rules is
/// ours reversed.
LTReport checkLTRules(int n, int k);
/// The compositions b^i..b^1, a^k..a^i of the recursion for a (all mu empty);
/// i is the first position of max(a) and b^i is a with that entry lowered by one.
std::vector<std::vector<int>> ltSequence(const std::vector<int>& a);

struct EquivarianceReport {
  std::string word;
  int n = 0, k = 0;
  int checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};
/// For every x in A(n,k): Phi(w v_x) computed in V equals w Phi(v_x) computed in U.
/// Grade errors (w not applicable at k) count as vacuous.
EquivarianceReport checkPhiEquivariance(const OperatorWord& w, int n, int k);

/// Modified Macdonald polynomial from the triangularity axioms:
/// H[X(1-q)] in span{s_lam : lam >= mu}, H[X(1-t)] in span{s_lam : lam >= mu'}, <H, s_n> = 1.
SymFunc classicalMacdonald(const Partition& mu);
/// c with e_1 H_mu = sum_lam c_{lam,mu} H_lam; rows partitions(n+1), columns partitions(n).
QTMatrix macdonaldE1Matrix(int n);

}  // namespace pfh
