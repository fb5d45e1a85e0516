#include "pfh/elliptic_hall.hpp"

#include <numeric>

namespace pfh {

namespace {
const QTFraction q = QTFraction::q();
const QTFraction t = QTFraction::t();

std::string repeat(const std::string& tok, int times) {
  std::string s;
  for (int i = 0; i < times; ++i) s += tok + " ";
  return s;
}
}  // namespace

Staircase staircase(int m, int n) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1)
    throw std::invalid_argument("staircase: need coprime m, n >= 1, got (" + std::to_string(m) + "," +
                                std::to_string(n) + ")");
  Staircase s{m, n, {}};
  for (int i = 1; i <= n; ++i) s.S.push_back(m * i / n - m * (i - 1) / n);
  return s;
}

KVector applyP1k(int k, const KVector& v) {
  if (v.k() != 0) throw GradeError("P_{1,k} acts on k = 0 only");
  if (v.basis() != Basis::H) throw std::invalid_argument("P_{1,k}: needs the H basis");
  KVector u = applyDplus(v);
  for (int i = 0; i < k; ++i) u = applyZ(1, u);
  return applyDminus(u).scaled(((q - 1) * (1 - t)).inverse());
}

OperatorWord pmnWord(int m, int n) {
  Staircase s = staircase(m, n);
  std::string w = "d- ";
  for (int i = n; i >= 1; --i) {
    w += repeat("z:1", s.S[i - 1]);
    if (i > 1) w += "y:1 ";
  }
  return OperatorWord::parse(w + "d+");
}

OperatorWord pmnWordLiteral(int m, int n) {
  Staircase s = staircase(m, n);
  std::string w = "d- ";
  for (int i = n; i >= 1; --i) w += repeat("z:1", s.S[i - 1]) + "y:1 ";
  return OperatorWord::parse(w + "d+");
}

std::vector<std::vector<Cell>> standardTableaux(const Partition& lam) {
  if (lam.empty()) return {{}};
  std::vector<std::vector<Cell>> out;
  // the largest label sits in a removable cell
  for (auto c : removableCells(lam))
    for (auto tab : standardTableaux(removeCell(lam, c))) {
      tab.push_back(c);
      out.push_back(std::move(tab));
    }
  std::sort(out.begin(), out.end());
  return out;
}

QTFraction omega(const QTFraction& x) { return (1 - x) * (1 - q * t * x) / ((1 - q * x) * (1 - t * x)); }

QTFraction omegaProduct(const std::vector<Cell>& earlier, Cell box) {
  Character one = Character::monomial(0, 0);
  Character qt1 = (Character::monomial(1, 0) - one) * (Character::monomial(0, 1) - one);
  Character c = one - Character::monomial(-box.c, -box.r);
  for (auto s : earlier) c += qt1 * Character::monomial(s.c - box.c, s.r - box.r);
  return QTFraction::monomial(-box.c, -box.r) * lambdaStar(c);
}

QTFraction tableauPmn(int m, int n, const Partition& lam) {
  Staircase s = staircase(m, n);
  if (size(lam) != n) throw std::invalid_argument("tableauPmn: |lambda| must equal n");
  QTFraction total;
  for (auto& tab : standardTableaux(lam)) {
    QTFraction term(1);  // box 1 is (0,0), w_1 = 1
    std::vector<Cell> earlier{tab[0]};
    for (int j = 2; j <= n; ++j) {
      Cell b = tab[j - 1];
      QTFraction wj = chiValue(b), wprev = chiValue(tab[j - 2]);
      term *= -omegaProduct(earlier, b) * wj.pow(s.S[j - 1] + 1) / (wj - q * t * wprev);
      earlier.push_back(b);
    }
    total += term;
  }
  return total;
}

KVector tableauPmnVector(int m, int n) {
  KVector v(n, 0);
  for (auto& lam : partitions(n)) v.addTerm(FlagPoint{lam, {}}, tableauPmn(m, n, lam));
  return v;
}

KVector pmnOnVacuum(int m, int n) { return applyWord(pmnWord(m, n), KVector::vacuum()); }

}  // namespace pfh
