#include <set>

#include "doctest.h"
#include "pfh/relations.hpp"

using namespace pfh;

TEST_CASE("catalog") {
  auto& cat = builtinRelations();
  std::set<std::string> ids;
  for (auto& r : cat) ids.insert(r.id);
  CHECK(ids.size() == cat.size());
  CHECK(cat.size() >= 20);
  CHECK(findRelation("commrel").id == "commrel");
  CHECK_THROWS_AS(findRelation("nope"), std::out_of_range);
  CHECK(findRelation("qt_twist").instantiate(0).empty());
  CHECK(findRelation("qt_twist").instantiate(1).size() == 1);
  // one instance per admissible index
  CHECK(findRelation("hecke_braid").instantiate(4).size() == 2);
  CHECK(findRelation("dplus_y").instantiate(3).size() == 3);
  CHECK(findRelation("hecke_far").instantiate(5).size() == 3);
  CHECK(findRelation("zt_commute").instantiate(3).size() == 2);
  // both sides move the grade the same way
  for (auto& r : cat)
    for (int k = 0; k <= 3; ++k)
      for (auto& inst : r.instantiate(k)) {
        auto d = inst.lhs.terms.front().word.displacement();
        for (auto* side : {&inst.lhs, &inst.rhs})
          for (auto& term : side->terms) CHECK(term.word.displacement() == d);
      }
}

TEST_CASE("word polynomials use the zero-operator convention for d- on k = 0") {
  KVector vac = KVector::vacuum();
  WordPoly comm = WordPoly("d+ d-") - WordPoly("d- d+");
  KVector r = applyWordPoly(comm, vac);
  CHECK(r.n() == 1);
  CHECK(r.k() == 0);
  CHECK(r == applyWord(OperatorWord::parse("d- d+"), vac).scaled(-1));
  CHECK_THROWS_AS(applyWordPoly(WordPoly("z:2"), vac), GradeError);
}

TEST_CASE("examples") {
  CHECK(checkRelation(findRelation("commrel"), 2, 1).pass);
  CHECK(checkRelation(findRelation("hecke_braid"), 5, 3).pass);
  CHECK(checkRelation(findRelation("qt_twist"), 3, 2).pass);
}

TEST_CASE("suite passes at (4,2) and reports round-trip") {
  auto rs = runSuite(4, 2);
  CHECK(allPass(rs));
  for (auto& r : rs) {
    Json j = toJson(r);
    CHECK(toJson(reportFromJson(j)) == j);
  }
  CHECK_THROWS_AS(runSuite(2, 3), std::invalid_argument);
}

TEST_CASE("mutation: corrupted operators are caught with a counterexample") {
  for (Fault f : {Fault::T, Fault::Dplus, Fault::Pieri}) {
    setFault(f);
    auto rs = runSuite(3, 2);
    setFault(Fault::None);
    CHECK(!allPass(rs));
    for (auto& r : rs)
      if (!r.pass) {
        REQUIRE(r.counterexample);
        CHECK(isValidFlag(r.counterexample->flag));
        CHECK((!r.counterexample->residual.isZero() || !r.counterexample->error.empty()));
        Json j = toJson(r);
        CHECK(toJson(reportFromJson(j)) == j);
      }
  }
  CHECK(allPass(runSuite(3, 2)));
}
