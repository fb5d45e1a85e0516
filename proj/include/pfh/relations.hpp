#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfh/fixed_point.hpp"
#include "pfh/json_io.hpp"

namespace pfh {

/// c * word.
struct WordTerm {
  QTFraction coeff;
  OperatorWord word;
};

/// Formal Q(q,t)-combination of words.
struct WordPoly {
  std::vector<WordTerm> terms;

  WordPoly() = default;
  /// A single word with coefficient 1.
  explicit WordPoly(const std::string& word);
  static WordPoly identity() { return WordPoly(""); }

  WordPoly& operator+=(const WordPoly& o);
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b);
  friend WordPoly operator*(const QTFraction& c, WordPoly a);
  /// Concatenation; b acts first.
  friend WordPoly operator*(const WordPoly& a, const WordPoly& b);
  std::string toString() const;
};

/// Terms whose word would push k below zero act as the zero map (path
/// algebra convention); every other grade error propagates.
KVector applyWordPoly(const WordPoly& p, const KVector& v);

struct RelationInstance {
  std::string label;
  WordPoly lhs, rhs;
};

struct RelationSpec {
  std::string id;
  std::string group;
  std::string statement;
  /// Instances acting on U_{n,k}, for the input k. Empty when none apply.
  std::function<std::vector<RelationInstance>(int k)> instantiate;
};

const std::vector<RelationSpec>& builtinRelations();
/// Throws std::out_of_range for an unknown id.
const RelationSpec& findRelation(const std::string& id);

struct Counterexample {
  std::string instance;
  FlagPoint flag;
  KVector residual;
  std::string error;  // set when an internal cross-check threw
};

struct RelationReport {
  std::string id;
  int n = 0, k = 0;
  bool pass = true;
  int instances = 0;
  int vectors = 0;
  std::optional<Counterexample> counterexample;
};

RelationReport checkRelation(const RelationSpec& spec, int n, int k);

/// All (n,k) with n <= maxN, k <= min(n, maxK), in catalog order. Grades
/// where a relation has no instance are left out. `ids` filters when nonempty.
std::vector<RelationReport> runSuite(int maxN, int maxK, const std::vector<std::string>& ids = {});
bool allPass(const std::vector<RelationReport>& rs);

Json toJson(const RelationReport& r);
RelationReport reportFromJson(const Json& j);

}  // namespace pfh
