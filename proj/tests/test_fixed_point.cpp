#include "doctest.h"
#include "pfh/fixed_point.hpp"

using namespace pfh;

namespace {

const QTFraction q = QTFraction::q();
const QTFraction t = QTFraction::t();

FlagPoint F(Partition lam, std::vector<Cell> order) { return {std::move(lam), std::move(order)}; }
KVector H(Partition lam, std::vector<Cell> order) { return KVector::basisVector(F(std::move(lam), std::move(order))); }

struct TestModeOn {
  TestModeOn() { setTestMode(true); }
  ~TestModeOn() { setTestMode(false); }
};

KVector word(const std::string& w, const KVector& v) { return applyWord(OperatorWord::parse(w), v); }

// every basis vector of U_{n,k}
template <class F>
void forBasis(int n, int k, F f) {
  for (auto& p : enumerateFlags(n, k)) f(KVector::basisVector(p));
}

}  // namespace

TEST_CASE("pieri values") {
  CHECK(pieri({1}, {}) == QTFraction(1));
  CHECK(pieri({2}, {1}) == (1 - t) / (q - t));
  CHECK(pieri({1, 1}, {1}) == (q - 1) / (q - t));
  CHECK(pieriViaLambdaStar({1}, {}) == QTFraction(1));
  CHECK(pieriViaLambdaStar({2}, {1}) == (1 - t) / (q - t));
  CHECK_THROWS(pieri({3}, {1}));
}

TEST_CASE("pieri: both formulas agree, duality, summation identities") {
  Character one = Character::monomial(0, 0);
  Character qm1 = Character::monomial(1, 0) - one;
  Character tm1 = Character::monomial(0, 1) - one;
  for (int n = 0; n <= 6; ++n)
    for (auto& lam : partitions(n)) {
      std::vector<QTFraction> sums(5);
      for (auto x : addableCells(lam)) {
        Partition big = addCell(lam, x);
        QTFraction d = pieri(big, lam);
        CHECK(d == pieriViaLambdaStar(big, lam));
        QTFraction xv = chiValue(x);
        CHECK(d.bar() == xv * d);
        for (int i = 0; i <= 4; ++i) sums[i] += d * xv.pow(i + 1);
      }
      Character arg = -one + qm1 * tm1 * charB(lam);
      CHECK(sums[0] == QTFraction(1));
      for (int i = 0; i <= 4; ++i) {
        QTFraction rhs = plethysticE(arg, i);
        CHECK(sums[i] == (i % 2 ? -rhs : rhs));
      }
    }
}

TEST_CASE("T action") {
  CHECK(applyT(1, H({2}, {{0, 1}, {0, 0}})) == H({2}, {{0, 1}, {0, 0}}));
  KVector v = H({2, 1}, {{0, 1}, {1, 0}});
  KVector expect = v.scaled((q - 1) * t / (q - t)) + H({2, 1}, {{1, 0}, {0, 1}}).scaled((q - q * t) / (q - t));
  CHECK(applyT(1, v) == expect);
  forBasis(3, 2, [](const KVector& e) {
    KVector u = applyT(1, e);
    KVector r = applyT(1, u) + u.scaled(q - 1) - e.scaled(q);  // (T-1)(T+q)
    CHECK(r.isZero());
  });
  CHECK_THROWS_AS(applyT(2, v), GradeError);
  CHECK_THROWS_AS(applyT(0, v), GradeError);
}

TEST_CASE("T inverse") {
  KVector v = H({2, 1}, {{0, 1}, {1, 0}});
  CHECK(applyTinv(1, applyT(1, v)) == v);
  CHECK(applyT(1, applyTinv(1, v)) == v);
  CHECK(applyTinv(1, H({2}, {{0, 1}, {0, 0}})) == H({2}, {{0, 1}, {0, 0}}));
  forBasis(4, 2, [](const KVector& e) {
    CHECK((applyTinv(1, e).scaled(q) - applyT(1, e) - e.scaled(q - 1)).isZero());
  });
}

TEST_CASE("z action") {
  KVector v = H({2}, {{0, 1}, {0, 0}});
  CHECK(applyZ(1, v) == v.scaled(q));
  CHECK(applyZ(2, v) == v);
  forBasis(3, 2, [](const KVector& e) { CHECK(applyZ(1, applyZ(2, e)) == applyZ(2, applyZ(1, e))); });
  CHECK_THROWS_AS(applyZ(1, H({1}, {})), GradeError);
}

TEST_CASE("d- action") {
  CHECK(applyDminus(H({2}, {{0, 1}, {0, 0}})) == H({2}, {{0, 1}}));
  CHECK(applyDminus(H({1}, {{0, 0}})) == H({1}, {}));
  forBasis(4, 2, [](const KVector& e) { CHECK(word("d- d- T:1", e) == word("d- d-", e)); });
  CHECK_THROWS_AS(applyDminus(H({1}, {})), GradeError);
}

TEST_CASE("d+ action") {
  TestModeOn tm;
  CHECK(applyDplus(KVector::vacuum()) == H({1}, {{0, 0}}));
  CHECK(applyDplus(H({1}, {{0, 0}})) == H({2}, {{0, 1}, {0, 0}}));
  KVector expect = H({2}, {{0, 1}}).scaled((1 - t) / (q - t)) + H({1, 1}, {{1, 0}}).scaled((q - 1) / (q - t));
  CHECK(applyDplus(H({1}, {})) == expect);
  // I-basis form (test mode compares with the H form)
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      forBasis(n, k, [](const KVector& e) {
        KVector out = applyDplus(convertBasis(e, Basis::I));
        CHECK(out == convertBasis(applyDplus(e), Basis::I));
        for (auto& [p, c] : out.terms()) CHECK(isValidFlag(p));
      });
}

TEST_CASE("phi action") {
  TestModeOn tm;
  KVector expect = (H({1, 1}, {{1, 0}}) - H({2}, {{0, 1}})).scaled((q - t).inverse());
  CHECK(applyPhi(H({1}, {{0, 0}})) == expect);
  CHECK(applyY(1, H({1}, {{0, 0}})) == expect);
  forBasis(3, 1, [](const KVector& e) {
    CHECK(applyPhi(e).scaled(q - 1) == word("d+ d-", e) - word("d- d+", e));
  });
  forBasis(4, 2, [](const KVector& e) { CHECK(word("phi d-", e).scaled(q) == word("d- phi T:1", e)); });
  forBasis(4, 2, [](const KVector& e) { CHECK(word("T:1 y:2 T:1", e) == word("y:1", e).scaled(q)); });
  CHECK_THROWS_AS(applyPhi(H({1}, {})), GradeError);
}

TEST_CASE("d+* action") {
  CHECK(applyDplusStar(KVector::vacuum()) == H({1}, {{0, 0}}));
  CHECK(applyDplusStar(H({1}, {{0, 0}})) == H({2}, {{0, 1}, {0, 0}}));
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      forBasis(n, k, [](const KVector& e) { CHECK(word("T:1 d*+ d*+", e) == word("d*+ d*+", e)); });
}

TEST_CASE("N, SD, star") {
  KVector v = H({2}, {{0, 1}}).scaled(q + t * t) + H({1, 1}, {{1, 0}}).scaled((q - 1) / (t + 3));
  CHECK(applyN(v) == H({2}, {{0, 1}}).scaled(q.inverse() + t.pow(-2)) +
                         H({1, 1}, {{1, 0}}).scaled((q.inverse() - 1) / (t.inverse() + 3)));
  CHECK(applyN(applyN(v)) == v);
  KVector vi = convertBasis(v, Basis::I);
  CHECK(applySD(applySD(vi)) == vi);
  KVector vd = convertBasis(v, Basis::Idual);
  CHECK(applyStar(applyStar(vd)) == vd);
  CHECK_THROWS_AS(applyN(vi), std::invalid_argument);
  CHECK_THROWS_AS(applySD(v), std::invalid_argument);
  CHECK_THROWS_AS(applyStar(vi), std::invalid_argument);
  forBasis(3, 1, [](const KVector& e) {
    KVector f = e.scaled((q * q - t) / (1 + q * t));
    CHECK(applyN(applyN(f)) == f);
  });
  forBasis(2, 1, [](const KVector& e) {
    CHECK(word("N d+ N", e) == word("z:1 d+", e).scaled(q.pow(-e.k())));
    CHECK(word("N d- N", e) == word("d-", e));
  });
  forBasis(3, 2, [](const KVector& e) { CHECK(word("N T:1 N", e) == word("Tinv:1", e)); });
  // N = L SD L^{-1}, L multiplying I_lam by q^{n(lam')} t^{n(lam)}
  auto L = [](const KVector& x, int sign) {
    return x.mapCoeffs([sign](const FlagPoint& p, const QTFraction& c) {
      return c * QTFraction::monomial(sign * nOf(conjugate(p.lambda)), sign * nOf(p.lambda));
    });
  };
  for (int n = 0; n <= 4; ++n)
    forBasis(n, 1 % (n + 1), [&](const KVector& e) {
      KVector f = e.scaled((q - 2 * t) / (q + t * t));
      KVector viaSD = convertBasis(L(applySD(L(convertBasis(f, Basis::I), -1)), 1), Basis::H);
      CHECK(viaSD == applyN(f));
    });
}

TEST_CASE("basis conversion") {
  CHECK(convertBasis(H({1}, {}), Basis::I) == H({1}, {}).withBasis(Basis::I).scaled(-1));
  KVector i1 = KVector::basisVector(F({1}, {}), Basis::I);
  // I = Lambda^* I', so the coordinate is multiplied
  CHECK(convertBasis(i1, Basis::Idual) == i1.withBasis(Basis::Idual).scaled((1 - q) * (1 - t)));
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      forBasis(n, k, [](const KVector& e) {
        KVector f = e.scaled(q - 3 * t);
        for (Basis a : {Basis::H, Basis::I, Basis::Idual})
          for (Basis b : {Basis::H, Basis::I, Basis::Idual}) {
            KVector x = convertBasis(f, a);
            CHECK(convertBasis(convertBasis(x, b), a) == x);
          }
      });
}

TEST_CASE("operators in other bases agree with the H basis") {
  // T, z, d-, d+ act natively on H and I only
  auto check = [](const char* w, std::initializer_list<Basis> bases) {
    forBasis(3, 2, [&](const KVector& e) {
      KVector h = word(w, e);
      for (Basis b : bases) CHECK(convertBasis(word(w, convertBasis(e, b)), Basis::H) == h);
    });
  };
  for (const char* w : {"T:1", "z:2", "d-", "d+"}) check(w, {Basis::I});
  for (const char* w : {"phi", "y:1", "y:2", "d*+", "bz:2"}) check(w, {Basis::I, Basis::Idual});
  CHECK_THROWS_AS(applyT(1, convertBasis(H({2}, {{0, 1}, {0, 0}}), Basis::Idual)), std::invalid_argument);
}

TEST_CASE("C symmetry of the d+ squared coefficient") {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= std::min(n, 2); ++k)
      for (auto& p : enumerateFlags(n, k)) {
        KVector img = applyDplus(applyDplus(KVector::basisVector(p)));
        auto adds = addableCells(p.lambda);
        for (auto x : adds)
          for (auto y : adds) {
            if (!(x < y)) continue;
            FlagPoint a = p, b = p;
            a.lambda = b.lambda = addCell(addCell(p.lambda, x), y);
            a.order.insert(a.order.begin(), {y, x});
            b.order.insert(b.order.begin(), {x, y});
            if (!isValidFlag(a) || !isValidFlag(b)) continue;
            QTFraction xv = chiValue(x), yv = chiValue(y);
            QTFraction ca = img.coeff(a) * (yv - q * xv) / (yv - xv);
            QTFraction cb = img.coeff(b) * (xv - q * yv) / (xv - yv);
            CHECK(ca == cb);
          }
      }
}

TEST_CASE("words and matrices") {
  KVector v = H({2, 1}, {{0, 1}, {1, 0}});
  CHECK(word("", v) == v);
  auto w = OperatorWord::parse("d- d+ T1 T(1) Tinv:2 z:1 y:1 phi d*+ dplusStar bz:1 N SD star");
  CHECK(w.gens.size() == 14);
  CHECK(w.gens[2] == Gen{Op::T, 1});
  CHECK(OperatorWord::parse("d- d+ T:1").toString() == "d- d+ T:1");
  CHECK_THROWS_AS(OperatorWord::parse("d+ q"), std::invalid_argument);
  CHECK_THROWS_AS(OperatorWord::parse("T"), std::invalid_argument);
  CHECK_THROWS_AS(OperatorWord::parse("phi:2"), std::invalid_argument);
  CHECK(OperatorWord::parse("d+ d+ d- phi").displacement() == std::pair{3, 1});
  try {
    word("d- d-", H({1}, {{0, 0}}));
    FAIL("expected a grade error");
  } catch (const GradeError& e) {
    CHECK(std::string(e.what()).find("step 1 (d-)") != std::string::npos);
  }
  // d- d+ on U_{n,0} is multiplication by e_1 in the modified Macdonald basis
  for (int n = 0; n <= 4; ++n) {
    auto m = operatorMatrix(OperatorWord::parse("d- d+"), n, 0);
    auto& src = enumerateFlags(n, 0);
    auto& dst = enumerateFlags(n + 1, 0);
    for (std::size_t j = 0; j < src.size(); ++j)
      for (std::size_t i = 0; i < dst.size(); ++i) {
        bool adj = false;
        for (auto x : addableCells(src[j].lambda)) adj |= addCell(src[j].lambda, x) == dst[i].lambda;
        CHECK(m.rows[i][j] == (adj ? pieri(dst[i].lambda, src[j].lambda) : QTFraction()));
      }
  }
  auto a = operatorMatrix(OperatorWord::parse("T:1 T:2 T:1"), 5, 3);
  auto b = operatorMatrix(OperatorWord::parse("T:2 T:1 T:2"), 5, 3);
  CHECK(a.rows == b.rows);
  CHECK_THROWS_AS(operatorMatrix(OperatorWord::parse("d- d-"), 2, 1), GradeError);
}

TEST_CASE("faults change the operators") {
  KVector v = H({2, 1}, {{0, 1}, {1, 0}});
  KVector good = applyT(1, v);
  setFault(Fault::T);
  CHECK(applyT(1, v) != good);
  setFault(Fault::None);
  CHECK(applyT(1, v) == good);
  KVector d = applyDplus(H({1}, {}));
  setFault(Fault::Dplus);
  CHECK(applyDplus(H({1}, {})) != d);
  setFault(Fault::Pieri);
  CHECK(pieri({2}, {1}) != (1 - t) / (q - t));
  setFault(Fault::None);
  CHECK(applyDplus(H({1}, {})) == d);
}
