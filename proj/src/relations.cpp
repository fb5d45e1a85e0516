#include "pfh/relations.hpp"

#include <sstream>

namespace pfh {

// --- word polynomials ---------------------------------------------------------

WordPoly::WordPoly(const std::string& word) { terms.push_back({QTFraction(1), OperatorWord::parse(word)}); }

WordPoly& WordPoly::operator+=(const WordPoly& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

WordPoly operator-(WordPoly a, const WordPoly& b) {
  for (auto& t : b.terms) a.terms.push_back({-t.coeff, t.word});
  return a;
}

WordPoly operator*(const QTFraction& c, WordPoly a) {
  for (auto& t : a.terms) t.coeff *= c;
  return a;
}

WordPoly operator*(const WordPoly& a, const WordPoly& b) {
  WordPoly r;
  for (auto& x : a.terms)
    for (auto& y : b.terms) r.terms.push_back({x.coeff * y.coeff, x.word * y.word});
  return r;
}

std::string WordPoly::toString() const {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " + ";
    std::string w = terms[i].word.toString();
    s += "(" + terms[i].coeff.toString() + ")" + (w.empty() ? "" : " " + w);
  }
  return s;
}

namespace {

// false when some d- would act on k = 0
bool reachable(const OperatorWord& w, int k) {
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
    if (it->op == Op::Dminus) {
      if (k == 0) return false;
      --k;
    } else if (it->op == Op::Dplus || it->op == Op::DplusStar) {
      ++k;
    }
  }
  return true;
}

}  // namespace

KVector applyWordPoly(const WordPoly& p, const KVector& v) {
  std::optional<KVector> out;
  for (auto& t : p.terms) {
    if (!reachable(t.word, v.k())) continue;
    KVector img = applyWord(t.word, v).scaled(t.coeff);
    if (!out) out = std::move(img);
    else *out += img;
  }
  if (out) return *out;
  // every term vanished; the grade still follows the displacement
  if (p.terms.empty()) return KVector(v.n(), v.k(), v.basis());
  auto [dn, dk] = p.terms.front().word.displacement();
  return KVector(v.n() + dn, v.k() + dk, v.basis());
}

// --- catalog -------------------------------------------------------------------

namespace {

const QTFraction q = QTFraction::q();
const QTFraction t = QTFraction::t();

WordPoly W(const std::string& s) { return WordPoly(s); }
std::string T(int i) { return "T:" + std::to_string(i); }
std::string Ti(int i) { return "Tinv:" + std::to_string(i); }
std::string ix(const char* op, int i) { return std::string(op) + ":" + std::to_string(i); }
std::string cat(std::initializer_list<std::string> parts) {
  std::string s;
  for (auto& p : parts)
    if (!p.empty()) s += (s.empty() ? "" : " ") + p;
  return s;
}
// "T:a T:a+1 ... T:b" (empty when a > b)
std::string upT(int a, int b, bool inverse = false) {
  std::string s;
  for (int i = a; i <= b; ++i) s = cat({s, inverse ? Ti(i) : T(i)});
  return s;
}
// "T:b T:b-1 ... T:a"
std::string downT(int a, int b, bool inverse = false) {
  std::string s;
  for (int i = b; i >= a; --i) s = cat({s, inverse ? Ti(i) : T(i)});
  return s;
}

std::string lab(const char* name, int v) { return std::string(name) + "=" + std::to_string(v); }
std::string lab2(int i, int j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); }

// phi as (d+ d- - d- d+)/(q-1), in generators only
WordPoly phiComm() { return (q - 1).inverse() * (W("d+ d-") - W("d- d+")); }

using Inst = std::vector<RelationInstance>;

// Hecke relations for the symbol `Tsym` with parameter `p`: (T-1)(T+p) = 0.
Inst quadratic(int k, bool inverse) {
  Inst out;
  QTFraction p = inverse ? q.inverse() : q;
  for (int i = 1; i <= k - 1; ++i) {
    std::string s = inverse ? Ti(i) : T(i);
    out.push_back({lab("i", i), W(s + " " + s), (1 - p) * W(s) + p * WordPoly::identity()});
  }
  return out;
}

Inst braid(int k, bool inverse) {
  Inst out;
  for (int i = 1; i + 1 <= k - 1; ++i) {
    auto a = inverse ? Ti(i) : T(i), b = inverse ? Ti(i + 1) : T(i + 1);
    out.push_back({lab("i", i), W(cat({a, b, a})), W(cat({b, a, b}))});
  }
  return out;
}

Inst farCommute(int k, const char* x, const char* y, int xmax, int ymax, bool skipAdjacent) {
  Inst out;
  for (int i = 1; i <= xmax; ++i)
    for (int j = 1; j <= ymax; ++j) {
      if (skipAdjacent ? (i == j || i == j + 1) : std::abs(i - j) <= 1) continue;
      out.push_back({lab2(i, j), W(cat({ix(x, i), ix(y, j)})), W(cat({ix(y, j), ix(x, i)}))});
    }
  (void)k;
  return out;
}

Inst commuteAll(int k, const char* x) {
  Inst out;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      out.push_back({lab2(i, j), W(cat({ix(x, i), ix(x, j)})), W(cat({ix(x, j), ix(x, i)}))});
  return out;
}

std::vector<RelationSpec> makeCatalog() {
  std::vector<RelationSpec> c;
  auto add = [&](std::string id, std::string group, std::string st, std::function<Inst(int)> f) {
    c.push_back({std::move(id), std::move(group), std::move(st), std::move(f)});
  };

  // Hecke
  add("hecke_quadratic", "B", "(T_i-1)(T_i+q) = 0", [](int k) { return quadratic(k, false); });
  add("hecke_braid", "B", "T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", [](int k) { return braid(k, false); });
  add("hecke_far", "B", "T_i T_j = T_j T_i, |i-j| > 1", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 1; ++i)
      for (int j = i + 2; j <= k - 1; ++j) out.push_back({lab2(i, j), W(cat({T(i), T(j)})), W(cat({T(j), T(i)}))});
    return out;
  });

  // z and T
  add("tz_twist", "B", "T_i^{-1} z_{i+1} T_i^{-1} = q^{-1} z_i", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 1; ++i)
      out.push_back({lab("i", i), W(cat({Ti(i), ix("z", i + 1), Ti(i)})), q.inverse() * W(ix("z", i))});
    return out;
  });
  add("zt_commute", "B", "z_i T_j = T_j z_i, i not in {j, j+1}",
      [](int k) { return farCommute(k, "z", "T", k, k - 1, true); });
  add("zz_commute", "B", "z_i z_j = z_j z_i", [](int k) { return commuteAll(k, "z"); });

  // d-
  add("dminus_sq_T", "B", "d_-^2 T_{k-1} = d_-^2", [](int k) {
    Inst out;
    if (k >= 2) out.push_back({"", W("d- d- " + T(k - 1)), W("d- d-")});
    return out;
  });
  add("dminus_T", "B", "d_- T_i = T_i d_-, i <= k-2", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 2; ++i) out.push_back({lab("i", i), W("d- " + T(i)), W(T(i) + " d-")});
    return out;
  });

  // d+
  add("dplus_sq_T", "B", "T_1 d_+^2 = d_+^2", [](int) { return Inst{{"", W("T:1 d+ d+"), W("d+ d+")}}; });
  add("dplus_T", "B", "d_+ T_i = T_{i+1} d_+", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 1; ++i) out.push_back({lab("i", i), W("d+ " + T(i)), W(T(i + 1) + " d+")});
    return out;
  });

  // phi, with phi = [d+, d-]/(q-1)
  add("phi_dminus", "B", "q phi d_- = d_- phi T_{k-1}", [](int k) {
    Inst out;
    if (k >= 2) out.push_back({"", q * phiComm() * W("d-"), W("d-") * phiComm() * W(T(k - 1))});
    return out;
  });
  add("phi_dplus", "B", "T_1 phi d_+ = q d_+ phi", [](int k) {
    Inst out;
    if (k >= 1) out.push_back({"", W("T:1") * phiComm() * W("d+"), q * W("d+") * phiComm()});
    return out;
  });

  // z and d
  add("z_dminus", "B", "z_i d_- = d_- z_i", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 1; ++i) out.push_back({lab("i", i), W(ix("z", i) + " d-"), W("d- " + ix("z", i))});
    return out;
  });
  add("z_dplus", "B", "d_+ z_i = z_{i+1} d_+", [](int k) {
    Inst out;
    for (int i = 1; i <= k; ++i) out.push_back({lab("i", i), W("d+ " + ix("z", i)), W(ix("z", i + 1) + " d+")});
    return out;
  });
  add("qt_twist", "B", "z_1 (q d_+ d_- - d_- d_+) = qt (d_+ d_- - d_- d_+) z_k", [](int k) {
    Inst out;
    if (k >= 1)
      out.push_back({"", W("z:1") * (q * W("d+ d-") - W("d- d+")),
                     q * t * (W("d+ d-") - W("d- d+")) * W(ix("z", k))});
    return out;
  });

  // A_q through y_i
  add("commrel", "Aq", "d_+ d_- - d_- d_+ = (q-1) T_1 ... T_{k-1} y_k", [](int k) {
    Inst out;
    if (k >= 1) out.push_back({"", W("d+ d-") - W("d- d+"), (q - 1) * W(cat({upT(1, k - 1), ix("y", k)}))});
    return out;
  });
  add("phi_closed_form", "Aq", "phi = T_1 ... T_{k-1} y_k = [d_+, d_-]/(q-1)", [](int k) {
    Inst out;
    if (k >= 1) out.push_back({"", W("phi"), phiComm()});
    return out;
  });
  add("ty", "Aq", "T_i y_{i+1} T_i = q y_i", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 1; ++i)
      out.push_back({lab("i", i), W(cat({T(i), ix("y", i + 1), T(i)})), q * W(ix("y", i))});
    return out;
  });
  add("yt_commute", "Aq", "y_i T_j = T_j y_i, i not in {j, j+1}",
      [](int k) { return farCommute(k, "y", "T", k, k - 1, true); });
  add("yy_commute", "Aq", "y_i y_j = y_j y_i", [](int k) { return commuteAll(k, "y"); });
  add("dminus_y", "Aq", "d_- y_i = y_i d_-, i <= k-1", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 1; ++i) out.push_back({lab("i", i), W("d- " + ix("y", i)), W(ix("y", i) + " d-")});
    return out;
  });
  add("dplus_y", "Aq", "d_+ y_i = T_1 ... T_i y_i T_i^{-1} ... T_1^{-1} d_+", [](int k) {
    Inst out;
    for (int i = 1; i <= k; ++i)
      out.push_back({lab("i", i), W("d+ " + ix("y", i)),
                     W(cat({upT(1, i), ix("y", i), downT(1, i, true), "d+"}))});
    return out;
  });
  add("iwahori_phi_T", "Aq", "phi T_i = T_{i+1} phi, i <= k-2", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 2; ++i) out.push_back({lab("i", i), W("phi " + T(i)), W(T(i + 1) + " phi")});
    return out;
  });
  add("iwahori_phi_sq", "Aq", "phi^2 T_{k-1} = T_1 phi^2", [](int k) {
    Inst out;
    if (k >= 2) out.push_back({"", W("phi phi " + T(k - 1)), W("T:1 phi phi")});
    return out;
  });

  // A_{q^{-1}} for d-, beta(d+*), T^{-1}, beta(z)
  add("qinv_hecke_quadratic", "Aqinv", "(T_i^{-1}-1)(T_i^{-1}+q^{-1}) = 0", [](int k) { return quadratic(k, true); });
  add("qinv_hecke_braid", "Aqinv", "braid relation for T_i^{-1}", [](int k) { return braid(k, true); });
  add("qinv_ty", "Aqinv", "T_i^{-1} bz_{i+1} T_i^{-1} = q^{-1} bz_i", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 1; ++i)
      out.push_back({lab("i", i), W(cat({Ti(i), ix("bz", i + 1), Ti(i)})), q.inverse() * W(ix("bz", i))});
    return out;
  });
  add("qinv_yt_commute", "Aqinv", "bz_i T_j^{-1} = T_j^{-1} bz_i, i not in {j, j+1}",
      [](int k) { return farCommute(k, "bz", "Tinv", k, k - 1, true); });
  add("qinv_yy_commute", "Aqinv", "bz_i bz_j = bz_j bz_i", [](int k) { return commuteAll(k, "bz"); });
  add("qinv_dminus_sq_T", "Aqinv", "d_-^2 T_{k-1}^{-1} = d_-^2", [](int k) {
    Inst out;
    if (k >= 2) out.push_back({"", W("d- d- " + Ti(k - 1)), W("d- d-")});
    return out;
  });
  add("qinv_dminus_y", "Aqinv", "d_- bz_i = bz_i d_-, i <= k-1", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 1; ++i) out.push_back({lab("i", i), W("d- " + ix("bz", i)), W(ix("bz", i) + " d-")});
    return out;
  });
  add("qinv_dplus_sq_T", "Aqinv", "T_1^{-1} d_+^{*2} = d_+^{*2}", [](int) {
    return Inst{{"", W("Tinv:1 d*+ d*+"), W("d*+ d*+")}};
  });
  add("qinv_dplus_T", "Aqinv", "d_+^* T_i^{-1} = T_{i+1}^{-1} d_+^*", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 1; ++i) out.push_back({lab("i", i), W("d*+ " + Ti(i)), W(Ti(i + 1) + " d*+")});
    return out;
  });
  add("qinv_dplus_y", "Aqinv", "d_+^* bz_i = T_1^{-1} ... T_i^{-1} bz_i T_i ... T_1 d_+^*", [](int k) {
    Inst out;
    for (int i = 1; i <= k; ++i)
      out.push_back({lab("i", i), W("d*+ " + ix("bz", i)),
                     W(cat({upT(1, i, true), ix("bz", i), downT(1, i), "d*+"}))});
    return out;
  });
  add("qinv_commrel", "Aqinv", "d_+^* d_- - d_- d_+^* = (q^{-1}-1) T_1^{-1} ... T_{k-1}^{-1} bz_k", [](int k) {
    Inst out;
    if (k >= 1)
      out.push_back({"", W("d*+ d-") - W("d- d*+"), (q.inverse() - 1) * W(cat({upT(1, k - 1, true), ix("bz", k)}))});
    return out;
  });

  // mixed y / z relations
  add("yz_dplus_bz", "Aqt", "d_+ bz_i = bz_{i+1} d_+", [](int k) {
    Inst out;
    for (int i = 1; i <= k; ++i) out.push_back({lab("i", i), W("d+ " + ix("bz", i)), W(ix("bz", i + 1) + " d+")});
    return out;
  });
  add("yz_dstar_y", "Aqt", "d_+^* y_i = y_{i+1} d_+^*", [](int k) {
    Inst out;
    for (int i = 1; i <= k; ++i) out.push_back({lab("i", i), W("d*+ " + ix("y", i)), W(ix("y", i + 1) + " d*+")});
    return out;
  });
  add("yz_bz1_dplus", "Aqt", "bz_1 d_+ = -t q^{k+1} y_1 d_+^*", [](int k) {
    return Inst{{"", W("bz:1 d+"), -t * q.pow(k + 1) * W("y:1 d*+")}};
  });

  // N conjugations
  add("N_square", "N", "N^2 = 1", [](int) { return Inst{{"", W("N N"), WordPoly::identity()}}; });
  add("N_dminus", "N", "N d_- N = d_-", [](int k) {
    Inst out;
    if (k >= 1) out.push_back({"", W("N d- N"), W("d-")});
    return out;
  });
  add("N_T", "N", "N T_i N = T_i^{-1}", [](int k) {
    Inst out;
    for (int i = 1; i <= k - 1; ++i) out.push_back({lab("i", i), W("N " + T(i) + " N"), W(Ti(i))});
    return out;
  });
  add("N_dplus", "N", "N d_+ N = q^{-k} z_1 d_+", [](int k) {
    return Inst{{"", W("N d+ N"), q.pow(-k) * W("z:1 d+")}};
  });
  add("N_y", "N", "N y_i N = bz_i", [](int k) {
    Inst out;
    for (int i = 1; i <= k; ++i) out.push_back({lab("i", i), W("N " + ix("y", i) + " N"), W(ix("bz", i))});
    return out;
  });
  return c;
}

}  // namespace

const std::vector<RelationSpec>& builtinRelations() {
  static const std::vector<RelationSpec> catalog = makeCatalog();
  return catalog;
}

const RelationSpec& findRelation(const std::string& id) {
  for (auto& r : builtinRelations())
    if (r.id == id) return r;
  throw std::out_of_range("unknown relation '" + id + "'");
}

// --- checking ---------------------------------------------------------------------

RelationReport checkRelation(const RelationSpec& spec, int n, int k) {
  RelationReport rep;
  rep.id = spec.id;
  rep.n = n;
  rep.k = k;
  if (k < 0 || k > n) throw std::invalid_argument("checkRelation: inadmissible grade");
  auto insts = spec.instantiate(k);
  rep.instances = int(insts.size());
  for (auto& inst : insts) {
    for (auto& p : enumerateFlags(n, k)) {
      KVector e = KVector::basisVector(p);
      ++rep.vectors;
      try {
        KVector r = applyWordPoly(inst.lhs, e) - applyWordPoly(inst.rhs, e);
        if (!r.isZero()) {
          rep.pass = false;
          rep.counterexample = Counterexample{inst.label, p, r, ""};
          return rep;
        }
      } catch (const std::logic_error& err) {
        // GradeError is a logic_error too: a catalog bug, reported the same way
        rep.pass = false;
        rep.counterexample = Counterexample{inst.label, p, KVector(), err.what()};
        return rep;
      }
    }
  }
  return rep;
}

std::vector<RelationReport> runSuite(int maxN, int maxK, const std::vector<std::string>& ids) {
  if (maxK > maxN) throw std::invalid_argument("runSuite: maxK > maxN");
  std::vector<const RelationSpec*> specs;
  if (ids.empty())
    for (auto& r : builtinRelations()) specs.push_back(&r);
  else
    for (auto& id : ids) specs.push_back(&findRelation(id));
  std::vector<RelationReport> out;
  for (auto* s : specs)
    for (int n = 0; n <= maxN; ++n)
      for (int k = 0; k <= std::min(n, maxK); ++k) {
        if (s->instantiate(k).empty()) continue;
        out.push_back(checkRelation(*s, n, k));
      }
  return out;
}

bool allPass(const std::vector<RelationReport>& rs) {
  for (auto& r : rs)
    if (!r.pass) return false;
  return true;
}

Json toJson(const RelationReport& r) {
  Json j{{"id", r.id}, {"grade", {r.n, r.k}}, {"pass", r.pass}, {"instances", r.instances}, {"vectors", r.vectors}};
  if (r.counterexample) {
    auto& c = *r.counterexample;
    j["counterexample"] = {{"instance", c.instance}, {"flag", toJson(c.flag)}, {"residual", toJson(c.residual)}};
    if (!c.error.empty()) j["counterexample"]["error"] = c.error;
  }
  return j;
}

RelationReport reportFromJson(const Json& j) {
  RelationReport r;
  r.id = j.at("id").get<std::string>();
  r.n = j.at("grade").at(0).get<int>();
  r.k = j.at("grade").at(1).get<int>();
  r.pass = j.at("pass").get<bool>();
  r.instances = j.at("instances").get<int>();
  r.vectors = j.at("vectors").get<int>();
  if (j.contains("counterexample")) {
    auto& c = j.at("counterexample");
    Counterexample ce{c.at("instance").get<std::string>(), flagFromJson(c.at("flag")), vectorFromJson(c.at("residual")),
                      c.value("error", std::string())};
    r.counterexample = ce;
  }
  return r;
}

}  // namespace pfh
