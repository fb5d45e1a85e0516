#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfh/qt_fraction.hpp"
#include "pfh/shapes.hpp"

namespace pfh {

/// Bad generator index or grade for the vector it is applied to.
struct GradeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Basis { H, I, Idual };
std::string basisName(Basis b);
Basis parseBasis(const std::string& s);

/// Element of K(PFH_{n,n-k}) in the fixed point basis of the given kind.
class KVector {
 public:
  KVector(int n = 0, int k = 0, Basis b = Basis::H) : n_(n), k_(k), basis_(b) {}
  static KVector basisVector(const FlagPoint& p, Basis b = Basis::H);
  /// H_{empty} in U_{0,0}.
  static KVector vacuum() { return basisVector(FlagPoint{}); }

  int n() const { return n_; }
  int k() const { return k_; }
  Basis basis() const { return basis_; }
  const std::map<FlagPoint, QTFraction>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  QTFraction coeff(const FlagPoint& p) const;

  void addTerm(const FlagPoint& p, const QTFraction& c);
  KVector& operator+=(const KVector& o);
  KVector& operator-=(const KVector& o);
  friend KVector operator+(KVector a, const KVector& b) { return a += b; }
  friend KVector operator-(KVector a, const KVector& b) { return a -= b; }
  KVector scaled(const QTFraction& c) const;
  /// Applies f to every coefficient (dropping zeros).
  template <class F>
  KVector mapCoeffs(F f) const {
    KVector r(n_, k_, basis_);
    for (auto& [p, c] : terms_) r.addTerm(p, f(p, c));
    return r;
  }
  KVector withBasis(Basis b) const {
    KVector r = *this;
    r.basis_ = b;
    return r;
  }

  bool operator==(const KVector& o) const;
  std::string toString() const;

 private:
  int n_, k_;
  Basis basis_;
  std::map<FlagPoint, QTFraction> terms_;
};

// --- global switches --------------------------------------------------------

/// Test mode turns on redundant cross-checks inside operators.
void setTestMode(bool on);
bool testMode();

/// Deliberate corruptions for harness mutation tests.
enum class Fault { None, T, Dplus, Pieri };
void setFault(Fault f);
Fault currentFault();
/// Drops every memoized operator image and Pieri value.
void clearOperatorCaches();

// --- coefficients -----------------------------------------------------------

/// d_{lamPlus, lam} from the arm/leg product formula.
QTFraction pieri(const Partition& lamPlus, const Partition& lam);
/// x^{-1} Lambda^*(-x^{-1} + (t-1)(q-1) B_lam x^{-1} + 1).
QTFraction pieriViaLambdaStar(const Partition& lamPlus, const Partition& lam);

/// (-1)^{|lam|} q^{n(lam')} t^{n(lam)}, so that H = c * I.
QTFraction hToIFactor(const Partition& lam);
/// Lambda^*(cotangent character at p); I = factor * I'.
QTFraction iToIdualFactor(const FlagPoint& p);

// --- generators -------------------------------------------------------------

KVector applyT(int m, const KVector& v);
KVector applyTinv(int m, const KVector& v);
KVector applyZ(int j, const KVector& v);
KVector applyDminus(const KVector& v);
/// H-basis product form; I-basis vectors use the I-basis form directly.
KVector applyDplus(const KVector& v);
KVector applyPhi(const KVector& v);
KVector applyY(int i, const KVector& v);
/// q^{-k} z_1 d_+.
KVector applyDplusStar(const KVector& v);
/// -qt T_{i-1}..T_1 y_1 T_1^{-1}..T_{i-1}^{-1} z_i, the image of z_i under beta.
KVector applyBetaZ(int i, const KVector& v);
/// Coefficient-wise bar in the H basis.
KVector applyN(const KVector& v);
/// Coefficient-wise bar in the I basis.
KVector applySD(const KVector& v);
/// Coefficient-wise bar in the I' basis.
KVector applyStar(const KVector& v);

KVector convertBasis(const KVector& v, Basis to);

// --- words ------------------------------------------------------------------

enum class Op { Dplus, Dminus, T, Tinv, Z, Y, Phi, DplusStar, BetaZ, N, SD, Star };

struct Gen {
  Op op;
  int idx = 0;
  bool operator==(const Gen&) const = default;
  bool operator<(const Gen& o) const { return op != o.op ? op < o.op : idx < o.idx; }
};
std::string genName(const Gen& g);

/// Written order; the last symbol acts first.
struct OperatorWord {
  std::vector<Gen> gens;
  std::string toString() const;
  /// Tokens: d+ d- T:i Tinv:i z:i y:i phi d*+ bz:i N SD star. Indices may also
  /// be written T1 or T(1).
  static OperatorWord parse(const std::string& text);
  /// (dn, dk) of the whole word.
  std::pair<int, int> displacement() const;
  OperatorWord operator*(const OperatorWord& o) const;
};

KVector applyGen(const Gen& g, const KVector& v);
/// Rightmost symbol first. GradeError names the failing step.
KVector applyWord(const OperatorWord& w, const KVector& v);

/// Dense matrix of a word on U_{n,k} in the H basis. Columns follow
/// enumerateFlags(n,k), rows the flags of the target grade.
struct OperatorMatrix {
  int n, k, targetN, targetK;
  std::vector<std::vector<QTFraction>> rows;
};
OperatorMatrix operatorMatrix(const OperatorWord& w, int n, int k, Basis b = Basis::H);

}  // namespace pfh
