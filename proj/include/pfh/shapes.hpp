#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pfh/character.hpp"
#include "pfh/qt_fraction.hpp"

namespace pfh {

/// Weakly decreasing positive parts. Plain vector; see isPartition().
using Partition = std::vector<int>;

/// Cell in row r, column c (both from 0). chi = q^c t^r.
struct Cell {
  int r = 0;
  int c = 0;
  auto operator<=>(const Cell&) const = default;
};

bool isPartition(const Partition& p);
int size(const Partition& p);
Partition conjugate(const Partition& p);
/// sum (i-1) lambda_i.
int nOf(const Partition& p);
bool contains(const Partition& p, Cell s);
std::vector<Cell> cells(const Partition& p);
std::vector<Cell> addableCells(const Partition& p);
std::vector<Cell> removableCells(const Partition& p);
Partition addCell(const Partition& p, Cell s);
Partition removeCell(const Partition& p, Cell s);
/// All partitions of n, lexicographically increasing.
std::vector<Partition> partitions(int n);
/// The cell in which two partitions differ; throws unless `big` = `small` + one cell.
Cell addedCell(const Partition& big, const Partition& small);
/// a >= b in dominance order (equal sizes required).
bool dominates(const Partition& a, const Partition& b);
/// Sorts decreasing and drops zeros.
Partition sortParts(std::vector<int> v);
std::string str(const Partition& p);

Character chi(Cell s);
QTFraction chiValue(Cell s);

/// (arm, leg) of s in p; throws std::out_of_range when s is not in p.
std::pair<int, int> armLeg(const Partition& p, Cell s);
Character charB(const Partition& p);

/// Cotangent character of Hilb^n at the monomial ideal of p. The arm/leg
/// sum and the closed form in B are both computed and compared.
Character cotangentHilb(const Partition& p);

/// A torus fixed point of the parabolic flag Hilbert scheme: lambda plus
/// the ordered removed cells. Ordered by (lambda, order).
struct FlagPoint {
  Partition lambda;
  std::vector<Cell> order;

  int n() const { return size(lambda); }
  int k() const { return int(order.size()); }
  /// chain()[j] is lambda^{(n-j)}, j = 0..k.
  std::vector<Partition> chain() const;
  Partition smallest() const;
  /// chi of the j-th removed cell, 1-based.
  QTFraction w(int j) const { return chiValue(order.at(j - 1)); }
  auto operator<=>(const FlagPoint&) const = default;
};

/// Removal order valid and the removed cells form a horizontal strip.
bool isValidFlag(const FlagPoint& p);
std::string str(const FlagPoint& p);

Character cotangentFlag(const FlagPoint& p);
Partition interleave(const FlagPoint& p);
Character cotangentViaInterleave(const FlagPoint& p);
/// The theta sum kq + sum theta(cell). With the label and leg conventions
/// fixed in the implementation this equals cotangentFlag(p), not its dual.
Character tangentTheta(const FlagPoint& p);

/// M(n,k) in deterministic order. Cached.
const std::vector<FlagPoint>& enumerateFlags(int n, int k);
/// Position of p in enumerateFlags(p.n(), p.k()); throws if absent.
std::size_t flagIndex(const FlagPoint& p);

struct AIndex {
  Partition mu;
  std::vector<int> a;
  int n() const { return size(mu) + sum() + int(a.size()); }
  int k() const { return int(a.size()); }
  int sum() const;
  auto operator<=>(const AIndex&) const = default;
};
std::string str(const AIndex& x);

/// A(n,k), sorted by (mu, a). Cached.
const std::vector<AIndex>& enumerateAIndices(int n, int k);

/// lambda^{(n-i)} = sort(mu, a_1..a_i, a_{i+1}+1..a_k+1)'.
FlagPoint toFlag(const AIndex& x);
AIndex fromFlag(const FlagPoint& p);

/// alpha = (mu_l, ..., mu_1; a_k+1, ..., a_1+1), zero padded to l leading slots.
/// The mu block comes first; with a-block first triangularity fails.
std::vector<int> alphaVector(const AIndex& x, int l);
AIndex fromAlpha(const std::vector<int>& alpha, int k);
/// One-move successors of x (moves 1 and 2 with re-sorting; moves that
/// would make an a-slot zero are rejected).
std::set<AIndex> bruhatMoves(const AIndex& x, int l);
/// y reachable from x by the moves (reflexive). x, y must share (n,k).
bool bruhatLeq(const AIndex& x, const AIndex& y);
/// The up-set of x, computed with l = n-k+1 and checked against l+1.
const std::set<AIndex>& bruhatUpSet(const AIndex& x);

}  // namespace pfh
