#include <numeric>

#include "doctest.h"
#include "pfh/elliptic_hall.hpp"

using namespace pfh;

namespace {
const QTFraction q = QTFraction::q();
const QTFraction t = QTFraction::t();
}  // namespace

TEST_CASE("staircase") {
  CHECK(staircase(3, 2).S == std::vector<int>{1, 2});
  CHECK(staircase(1, 3).S == std::vector<int>{0, 0, 1});
  CHECK(staircase(2, 1).S == std::vector<int>{2});
  CHECK_THROWS_AS(staircase(2, 4), std::invalid_argument);
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; n <= 7; ++n) {
      if (std::gcd(m, n) != 1) continue;
      auto s = staircase(m, n);
      int sum = 0;
      for (int x : s.S) {
        CHECK(x >= 0);
        sum += x;
      }
      CHECK(sum == m);
    }
}

TEST_CASE("P_{1,k}") {
  KVector one = KVector::basisVector({{1}, {}});
  QTFraction c = ((q - 1) * (1 - t)).inverse();
  for (int k = 0; k <= 3; ++k) CHECK(applyP1k(k, KVector::vacuum()) == one.scaled(c));
  CHECK_THROWS_AS(applyP1k(0, KVector::basisVector({{1}, {{0, 0}}})), GradeError);
  // (q-1)(1-t) P_{1,0} is the e_1 Pieri matrix
  for (int n = 0; n <= 4; ++n)
    for (auto& lam : partitions(n)) {
      KVector img = applyP1k(0, KVector::basisVector({lam, {}})).scaled((q - 1) * (1 - t));
      KVector expect(n + 1, 0);
      for (auto x : addableCells(lam)) expect.addTerm({addCell(lam, x), {}}, pieri(addCell(lam, x), lam));
      CHECK(img == expect);
    }
}

TEST_CASE("P_{m,n} words") {
  CHECK(pmnWord(3, 1).toString() == "d- z:1 z:1 z:1 d+");
  CHECK(pmnWord(1, 2).toString() == "d- z:1 y:1 d+");
  CHECK(pmnWord(2, 3).toString() == "d- z:1 y:1 z:1 y:1 d+");
  for (int n = 1; n <= 4; ++n) {
    CHECK(pmnWord(1, n).displacement() == std::pair{n, 0});
    CHECK(pmnWordLiteral(1, n).displacement() == std::pair{n + 1, 0});
  }
  CHECK(pmnOnVacuum(1, 2).n() == 2);
}

TEST_CASE("tableaux") {
  CHECK(standardTableaux({2, 1}).size() == 2);
  CHECK(standardTableaux({3, 2}).size() == 5);
  CHECK(standardTableaux({}).size() == 1);
  for (auto& tab : standardTableaux({3, 2, 1})) {
    Partition p;
    for (auto c : tab) {
      CHECK(std::find(addableCells(p).begin(), addableCells(p).end(), c) != addableCells(p).end());
      p = addCell(p, c);
    }
  }
}

TEST_CASE("regularized omega product is the Pieri coefficient") {
  CHECK(omega(QTFraction(2)) == (1 - 2) * (1 - 2 * q * t) / ((1 - 2 * q) * (1 - 2 * t)));
  for (int n = 1; n <= 5; ++n)
    for (auto& lam : partitions(n))
      for (auto& tab : standardTableaux(lam)) {
        std::vector<Cell> earlier(tab.begin(), tab.end() - 1);
        Partition small = removeCell(lam, tab.back());
        CHECK(omegaProduct(earlier, tab.back()) == pieri(lam, small));
      }
}

TEST_CASE("tableau formula equals the operator word") {
  for (int m = 1; m <= 5; ++m) CHECK(tableauPmnVector(m, 1) == pmnOnVacuum(m, 1));
  CHECK(tableauPmnVector(1, 2) == pmnOnVacuum(1, 2));
  CHECK(tableauPmnVector(2, 3) == pmnOnVacuum(2, 3));
  CHECK(tableauPmnVector(3, 2) == pmnOnVacuum(3, 2));
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 5; ++m)
      if (std::gcd(m, n) == 1) CHECK(tableauPmnVector(m, n) == pmnOnVacuum(m, n));
}
