#pragma once

#include <vector>

#include "pfh/fixed_point.hpp"

namespace pfh {

struct Staircase {
  int m = 0, n = 0;
  std::vector<int> S;  // S[i-1] = floor(m i/n) - floor(m (i-1)/n)
};
/// Throws std::invalid_argument unless m, n >= 1 are coprime.
Staircase staircase(int m, int n);

/// (d_- z_1^k d_+)/((q-1)(1-t)) on an H-basis vector of grade (n,0).
KVector applyP1k(int k, const KVector& v);

/// d_- z_1^{S_n} y_1 z_1^{S_{n-1}} ... y_1 z_1^{S_1} d_+ : n-1 factors y_1,
/// so the word adds exactly n boxes.
OperatorWord pmnWord(int m, int n);
/// The displayed string with n factors y_1; it adds n+1 boxes.
OperatorWord pmnWordLiteral(int m, int n);

/// Standard tableaux of shape lam, as the cells in label order.
std::vector<std::vector<Cell>> standardTableaux(const Partition& lam);

/// (1-x)(1-qtx)/((1-qx)(1-tx)).
QTFraction omega(const QTFraction& x);
/// prod_{i<j} omega(w_i/w_j) for the new box j on top of the earlier boxes,
/// regularized as w_j^{-1} Lambda^*(1 - w_j^{-1} + (q-1)(t-1) sum_i w_i/w_j).
QTFraction omegaProduct(const std::vector<Cell>& earlier, Cell box);

/// Coefficient of H_lam in P_{m,n} H_empty from the tableau product formula.
QTFraction tableauPmn(int m, int n, const Partition& lam);
/// sum_lam tableauPmn(m,n,lam) H_lam.
KVector tableauPmnVector(int m, int n);
/// pmnWord applied to the vacuum.
KVector pmnOnVacuum(int m, int n);

}  // namespace pfh
