#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "cache.hpp"
#include "pfh/elliptic_hall.hpp"
#include "pfh/json_io.hpp"
#include "pfh/polynomial_rep.hpp"
#include "pfh/relations.hpp"

using namespace pfh;

namespace {

constexpr int kOk = 0, kMathFailure = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kGrammar = R"(Operator words:
  Whitespace-separated tokens; the rightmost token acts first.
    d+        raise k (adds a box)          d-      lower k
    T:i       Hecke generator T_i           Tinv:i  its inverse
    z:i       z_i                           y:i     y_i
    phi       phi                           d*+     q^{-k} z_1 d+
    bz:i      image of z_i under beta       N SD star  the three bar involutions
  Indices may be written T:1, T1 or T(1).
Partitions and compositions are comma lists: --lambda 3,1 --a 1,0,2 (empty: "").
Exit codes: 0 success, 1 mathematical failure, 2 usage error.)";

std::vector<int> parseInts(std::string s) {
  std::erase_if(s, [](char c) { return c == '[' || c == ']' || c == '(' || c == ')' || c == ' '; });
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + s + "'");
    }
  }
  return out;
}

Partition parsePartition(const std::string& s) {
  Partition p = parseInts(s);
  if (!isPartition(p)) throw UsageError("not a partition: '" + s + "'");
  return p;
}

AIndex parseIndex(const std::string& mu, const std::string& a) {
  AIndex x{parsePartition(mu), parseInts(a)};
  for (int v : x.a)
    if (v < 0) throw UsageError("a must be nonnegative");
  return x;
}

Json readJsonArg(const std::string& s) {
  try {
    if (!s.empty() && s[0] == '@') {
      std::ifstream in(s.substr(1));
      if (!in) throw UsageError("cannot open " + s.substr(1));
      return Json::parse(in);
    }
    return Json::parse(s);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad JSON input: ") + e.what());
  }
}

// A KVector document, or a bare flag {"lambda":..,"order":..}.
KVector parseInput(const std::string& s, Basis b) {
  if (s.empty()) return KVector::vacuum().withBasis(b);
  Json j = readJsonArg(s);
  try {
    if (j.contains("terms")) return vectorFromJson(j);
    return KVector::basisVector(flagFromJson(j), b);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad input vector: ") + e.what());
  }
}

OperatorWord parseWord(const std::string& w) {
  try {
    return OperatorWord::parse(w);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Basis parseBasisArg(const std::string& s) {
  try {
    return parseBasis(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Json chainJson(const FlagPoint& p) {
  Json c = Json::array();
  for (auto& lam : p.chain()) c.push_back(toJson(lam));
  return c;
}

Json schurJson(const SymFunc& f) {
  Json cs = Json::array();
  auto s = f.toSchur();
  for (auto it = s.rbegin(); it != s.rend(); ++it) cs.push_back({{"lambda", toJson(it->first)}, {"coeff", it->second.toString()}});
  return cs;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in K-theory of parabolic flag Hilbert schemes"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();

  std::string cacheDir;
  bool noCache = false, testMode = false;
  std::string fault = "none";
  app.add_option("--cache-dir", cacheDir, "Cache directory (default $PFH_CACHE_DIR or ~/.cache/pfh)");
  app.add_flag("--no-cache", noCache, "Neither read nor write the cache");
  app.add_flag("--test-mode", testMode, "Cross-check operator images as they are computed");
  app.add_option("--fault", fault, "Corrupt one coefficient family (harness testing)")
      ->check(CLI::IsMember({"none", "T", "dplus", "pieri"}))
      ->group("");

  int n = 0, k = 0;
  std::string word, input, basis = "H", lambda, mu, a;

  auto* fp = app.add_subcommand("fixed-points", "Torus fixed points of PFH_{n,n-k} with cotangent characters");
  fp->add_option("--n", n)->required();
  fp->add_option("--k", k)->required();

  auto* ap = app.add_subcommand("apply", "Apply an operator word to a vector (default: the vacuum)");
  ap->add_option("--word", word)->required();
  ap->add_option("--input", input, "KVector or flag JSON, or @file");
  ap->add_option("--basis", basis, "H, I or Idual for a bare flag input");

  auto* mx = app.add_subcommand("matrix", "Matrix of a word on U_{n,k}");
  mx->add_option("--word", word)->required();
  mx->add_option("--n", n)->required();
  mx->add_option("--k", k)->required();
  mx->add_option("--basis", basis);

  int maxN = 4, maxK = 2;
  std::vector<std::string> relIds;
  bool listOnly = false;
  auto* ck = app.add_subcommand("check", "Run the relation suite");
  ck->add_option("--max-n", maxN);
  ck->add_option("--max-k", maxK);
  ck->add_option("--relation", relIds, "Only these relation ids (repeatable)");
  ck->add_flag("--list", listOnly, "List the relation catalog");

  auto* pi = app.add_subcommand("pieri", "e_1 Pieri coefficients d_{lambda+x, lambda}");
  pi->add_option("--lambda", lambda)->required();

  int m = 1;
  auto* pm = app.add_subcommand("pmn", "P_{m,n} on the vacuum: tableau formula and operator word");
  pm->add_option("--m", m)->required();
  pm->add_option("--n", n)->required();

  std::string flagJson;
  auto* bj = app.add_subcommand("bijection", "A(n,k) <-> M(n,k)");
  bj->add_option("--mu", mu);
  bj->add_option("--a", a);
  bj->add_option("--flag", flagJson, "Flag JSON for the inverse direction");

  std::string xmu, xa, ymu, ya;
  auto* br = app.add_subcommand("bruhat", "Compare two indices, or list the up-set of one");
  br->add_option("--x-mu", xmu);
  br->add_option("--x-a", xa);
  br->add_option("--y-mu", ymu);
  br->add_option("--y-a", ya);

  bool checkTri = false;
  auto* ph = app.add_subcommand("phi", "Image of v_{mu,a} under Phi");
  ph->add_option("--mu", mu);
  ph->add_option("--a", a);
  ph->add_flag("--check-triangularity", checkTri);

  auto* mc = app.add_subcommand("macdonald", "Modified Macdonald polynomial in the Schur basis");
  mc->add_option("--mu", mu)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  setTestMode(testMode);
  if (fault == "T") setFault(Fault::T);
  if (fault == "dplus") setFault(Fault::Dplus);
  if (fault == "pieri") setFault(Fault::Pieri);
  cli::Cache cache(noCache ? std::filesystem::path{} : cacheDir.empty() ? cli::defaultCacheDir() : std::filesystem::path(cacheDir));
  // results computed under a fault must not land next to honest ones
  auto withFault = [&](Json p) {
    if (fault != "none") p["fault"] = fault;
    return p;
  };

  try {
    if (*fp) {
      if (n < 0 || k < 0 || k > n) throw UsageError("need 0 <= k <= n");
      Json out = Json::array();
      bool ok = true;
      for (auto& p : enumerateFlags(n, k)) {
        Character c = cotangentFlag(p);
        bool dimOk = c.total() == 2 * n - k;
        for (auto& [key, mult] : c.terms()) dimOk &= mult > 0;
        ok &= dimOk;
        out.push_back({{"flag", toJson(p)}, {"chain", chainJson(p)}, {"index", toJson(fromFlag(p))},
                       {"cotangent", toJson(c)}, {"dimension", c.total()}, {"dimensionOk", dimOk}});
      }
      print(out);
      return ok ? kOk : kMathFailure;
    }

    if (*ap) {
      OperatorWord w = parseWord(word);
      KVector v = parseInput(input, parseBasisArg(basis));
      KVector r;
      try {
        r = applyWord(w, v);
      } catch (const GradeError& e) {
        throw UsageError(e.what());
      }
      print({{"word", w.toString()}, {"input", toJson(v)}, {"output", toJson(r)}});
      return kOk;
    }

    if (*mx) {
      OperatorWord w = parseWord(word);
      Basis b = parseBasisArg(basis);
      if (n < 0 || k < 0 || k > n) throw UsageError("need 0 <= k <= n");
      Json params = withFault({{"word", w.toString()}, {"n", n}, {"k", k}, {"basis", basisName(b)}});
      Json out = cache.getOrCompute("matrix", params, [&] {
        try {
          return toJson(operatorMatrix(w, n, k, b));
        } catch (const GradeError& e) {
          throw UsageError(e.what());
        }
      });
      print(out);
      return kOk;
    }

    if (*ck) {
      if (listOnly) {
        Json out = Json::array();
        for (auto& r : builtinRelations()) out.push_back({{"id", r.id}, {"group", r.group}, {"statement", r.statement}});
        print(out);
        return kOk;
      }
      for (auto& id : relIds) {
        try {
          findRelation(id);
        } catch (const std::out_of_range&) {
          throw UsageError("unknown relation id '" + id + "' (see check --list)");
        }
      }
      if (maxN < 0 || maxK < 0 || maxK > maxN) throw UsageError("need 0 <= max-k <= max-n");
      std::vector<std::string> ids = relIds;
      std::sort(ids.begin(), ids.end());
      Json params = withFault({{"maxN", maxN}, {"maxK", maxK}, {"relations", ids}});
      Json out = cache.getOrCompute("check", params, [&] {
        auto reps = runSuite(maxN, maxK, ids);
        Json rs = Json::array();
        int failed = 0;
        for (auto& r : reps) {
          rs.push_back(toJson(r));
          failed += !r.pass;
        }
        return Json{{"pass", allPass(reps)}, {"checked", reps.size()}, {"failed", failed}, {"reports", rs}};
      });
      print(out);
      return out["pass"].get<bool>() ? kOk : kMathFailure;
    }

    if (*pi) {
      Partition lam = parsePartition(lambda);
      Json out = Json::array();
      bool ok = true;
      for (auto& c : addableCells(lam)) {
        Partition up = addCell(lam, c);
        QTFraction d = pieri(up, lam), alt = pieriViaLambdaStar(up, lam);
        ok &= d == alt;
        out.push_back({{"lambdaPlus", toJson(up)}, {"cell", {c.r, c.c}}, {"coeff", d.toString()}, {"lambdaStarAgrees", d == alt}});
      }
      print(out);
      return ok ? kOk : kMathFailure;
    }

    if (*pm) {
      if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw UsageError("need coprime m, n >= 1");
      Json out = cache.getOrCompute("pmn", withFault({{"m", m}, {"n", n}}), [&] {
        KVector tab = tableauPmnVector(m, n), op = pmnOnVacuum(m, n);
        return Json{{"word", pmnWord(m, n).toString()}, {"agree", tab == op}, {"tableau", toJson(tab)}, {"operator", toJson(op)}};
      });
      print(out);
      return out["agree"].get<bool>() ? kOk : kMathFailure;
    }

    if (*bj) {
      if (!flagJson.empty()) {
        FlagPoint p;
        try {
          p = flagFromJson(readJsonArg(flagJson));
        } catch (const UsageError&) {
          throw;
        } catch (const std::exception& e) {
          throw UsageError(std::string("bad flag: ") + e.what());
        }
        AIndex x = fromFlag(p);
        print({{"flag", toJson(p)}, {"index", toJson(x)}, {"roundTrip", toFlag(x) == p}});
        return toFlag(x) == p ? kOk : kMathFailure;
      }
      AIndex x = parseIndex(mu, a);
      FlagPoint p = toFlag(x);
      print({{"index", toJson(x)}, {"flag", toJson(p)}, {"chain", chainJson(p)}, {"roundTrip", fromFlag(p) == x}});
      return fromFlag(p) == x ? kOk : kMathFailure;
    }

    if (*br) {
      AIndex x = parseIndex(xmu, xa);
      if (ymu.empty() && ya.empty()) {
        Json up = Json::array();
        for (auto& y : bruhatUpSet(x)) up.push_back(toJson(y));
        print({{"x", toJson(x)}, {"upSet", up}});
        return kOk;
      }
      AIndex y = parseIndex(ymu, ya);
      if (x.n() != y.n() || x.k() != y.k()) throw UsageError("x and y must lie in the same A(n,k)");
      print({{"x", toJson(x)}, {"y", toJson(y)}, {"xLeqY", bruhatLeq(x, y)}, {"yLeqX", bruhatLeq(y, x)}});
      return kOk;
    }

    if (*ph) {
      AIndex x = parseIndex(mu, a);
      Json params = withFault({{"index", toJson(x)}, {"triangularity", checkTri}});
      Json out = cache.getOrCompute("phi", params, [&] {
        KVector img = phiWordImage(x);
        auto lt = leadingIndex(img);
        Json j{{"index", toJson(x)}, {"word", vWord(x).toString()}, {"polynomial", vPoly(x).toString()},
               {"image", toJson(img)}, {"leading", lt ? toJson(*lt) : Json(nullptr)}};
        if (checkTri) {
          auto r = checkTriangularity(x.n(), x.k());
          j["triangularity"] = {{"grade", {r.n, r.k}}, {"size", r.size}, {"rank", r.rank}, {"pass", r.pass()},
                                {"problems", r.problems}};
        }
        return j;
      });
      print(out);
      bool ok = out["leading"] == toJson(x) && (!checkTri || out["triangularity"]["pass"].get<bool>());
      return ok ? kOk : kMathFailure;
    }

    if (*mc) {
      Partition p = parsePartition(mu);
      Json out = cache.getOrCompute("macdonald", {{"mu", toJson(p)}}, [&] {
        SymFunc h = classicalMacdonald(p);
        return Json{{"mu", toJson(p)}, {"schur", h.toString()}, {"coefficients", schurJson(h)}};
      });
      print(out);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kMathFailure;
  }
  return kUsage;
}
