#include "pfh/json_io.hpp"

namespace pfh {

Json toJson(const Partition& p) { return Json(p); }

Json toJson(const FlagPoint& p) {
  Json order = Json::array();
  for (auto c : p.order) order.push_back({c.r, c.c});
  return {{"lambda", toJson(p.lambda)}, {"order", order}};
}

Json toJson(const AIndex& x) { return {{"mu", toJson(x.mu)}, {"a", x.a}}; }

Json toJson(const Character& c) {
  Json out = Json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
    out.push_back({it->first.first, it->first.second, it->second});
  return out;
}

Json toJson(const KVector& v) {
  Json terms = Json::array();
  for (auto& [p, c] : v.terms()) terms.push_back({{"flag", toJson(p)}, {"coeff", c.toString()}});
  return {{"grade", {v.n(), v.k()}}, {"basis", basisName(v.basis())}, {"terms", terms}};
}

Json toJson(const OperatorMatrix& m) {
  Json rows = Json::array();
  for (auto& r : m.rows) {
    Json row = Json::array();
    for (auto& c : r) row.push_back(c.toString());
    rows.push_back(row);
  }
  Json cols = Json::array(), targets = Json::array();
  for (auto& p : enumerateFlags(m.n, m.k)) cols.push_back(toJson(p));
  for (auto& p : enumerateFlags(m.targetN, m.targetK)) targets.push_back(toJson(p));
  return {{"source", {m.n, m.k}}, {"target", {m.targetN, m.targetK}}, {"columns", cols}, {"rows_index", targets},
          {"rows", rows}};
}

Partition partitionFromJson(const Json& j) {
  Partition p = j.get<Partition>();
  if (!isPartition(p)) throw std::invalid_argument("not a partition: " + j.dump());
  return p;
}

FlagPoint flagFromJson(const Json& j) {
  FlagPoint p;
  p.lambda = partitionFromJson(j.at("lambda"));
  for (auto& c : j.at("order")) p.order.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
  if (!isValidFlag(p)) throw std::invalid_argument("not a valid flag: " + j.dump());
  return p;
}

KVector vectorFromJson(const Json& j) {
  auto g = j.at("grade");
  KVector v(g.at(0).get<int>(), g.at(1).get<int>(), parseBasis(j.at("basis").get<std::string>()));
  for (auto& t : j.at("terms")) v.addTerm(flagFromJson(t.at("flag")), QTFraction::parse(t.at("coeff").get<std::string>()));
  return v;
}

}  // namespace pfh
