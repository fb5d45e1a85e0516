// Bivariate gcd over Z[q,t].
//
// The fast route is the heuristic gcd (evaluate t, then q, at large integers,
// take an integer gcd and lift back by symmetric x-adic expansion). Every
// candidate is confirmed by exact division, so a wrong guess is never
// returned; after a few failed evaluation points the primitive remainder
// sequence over Z[t][q] takes over.

#include <algorithm>
#include <stdexcept>

#include "pfh/qt_poly.hpp"

namespace pfh {

namespace {

using UPoly = std::vector<mpz_class>;  // dense, index = degree

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class ucontent(const UPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly udivScalar(UPoly p, const mpz_class& c) {
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return p;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

std::optional<UPoly> udivExact(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("udivExact: zero divisor");
  trim(a);
  if (a.empty()) return UPoly{};
  if (a.size() < b.size()) return std::nullopt;
  UPoly quot(a.size() - b.size() + 1);
  mpz_class qc;
  const long db = long(b.size()) - 1;
  for (long k = long(a.size()) - 1; k >= db; --k) {
    if (a[k] == 0) continue;
    if (!mpz_divisible_p(a[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), a[k].get_mpz_t(), b.back().get_mpz_t());
    const long shift = k - db;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), qc.get_mpz_t(), b[j].get_mpz_t());
    }
    quot[shift] = qc;
  }
  for (const auto& c : a) {
    if (c != 0) return std::nullopt;
  }
  trim(quot);
  return quot;
}

/// Pseudo-remainder of a by b over Z.
UPoly uprem(UPoly a, const UPoly& b) {
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(a);
  }
  return a;
}

UPoly uprimitive(const UPoly& p) {
  if (p.empty()) return p;
  UPoly r = udivScalar(p, ucontent(p));
  if (r.back() < 0) {
    for (auto& c : r) c = -c;
  }
  return r;
}

UPoly ugcdPrs(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return uprimitive(b);
  if (b.empty()) return uprimitive(a);
  mpz_class g;
  const mpz_class ca = ucontent(a), cb = ucontent(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = uprimitive(a);
  b = uprimitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = uprem(a, b);
    a = std::move(b);
    b = uprimitive(r);
  }
  a = uprimitive(a);
  for (auto& c : a) c *= g;
  return a;
}

mpz_class normInf(const UPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

mpz_class normInf(const QTPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    if (mpz_cmpabs(t.c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.c);
  }
  return m;
}

mpz_class initialPoint(const mpz_class& na, const mpz_class& nb, const mpz_class& la, const mpz_class& lb) {
  const mpz_class bound = 2 * std::min(na, nb) + 29;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), bound.get_mpz_t());
  mpz_class cap = 99 * root;
  mpz_class x = std::min(bound, cap);
  mpz_class alt = 2 * std::min(mpz_class(na / abs(la)), mpz_class(nb / abs(lb))) + 2;
  return std::max(x, alt);
}

mpz_class nextPoint(const mpz_class& x) {
  mpz_class r1, r2;
  mpz_sqrt(r1.get_mpz_t(), x.get_mpz_t());
  mpz_sqrt(r2.get_mpz_t(), r1.get_mpz_t());
  return mpz_class(73794 * x * r2) / 27011;
}

/// Symmetric x-adic digits of an integer.
std::vector<mpz_class> adicDigits(mpz_class v, const mpz_class& x) {
  std::vector<mpz_class> digits;
  const mpz_class half = x / 2;
  mpz_class d;
  while (v != 0) {
    mpz_fdiv_r(d.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t());
    if (d > half) d -= x;
    digits.push_back(d);
    v -= d;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t());
  }
  return digits;
}

mpz_class uevalAt(const UPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

UPoly uinterpolate(const mpz_class& v, const mpz_class& x) {
  UPoly p = adicDigits(v, x);
  trim(p);
  return p;
}

/// Univariate heuristic gcd over Z (content included).
std::optional<UPoly> ugcdHeuristic(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return std::nullopt;
  mpz_class g;
  const mpz_class ca = ucontent(a), cb = ucontent(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = udivScalar(a, g);
  b = udivScalar(b, g);
  if (a.size() == 1 || b.size() == 1) {
    return UPoly{g};
  }
  mpz_class x = initialPoint(normInf(a), normInf(b), a.back(), b.back());
  for (int attempt = 0; attempt < 6; ++attempt) {
    const mpz_class va = uevalAt(a, x), vb = uevalAt(b, x);
    if (va != 0 && vb != 0) {
      mpz_class h;
      mpz_gcd(h.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
      UPoly hp = uprimitive(uinterpolate(h, x));
      if (!hp.empty()) {
        if (udivExact(a, hp) && udivExact(b, hp)) {
          for (auto& c : hp) c *= g;
          return hp;
        }
      }
      UPoly cofa = uinterpolate(va / h, x);
      if (!cofa.empty()) {
        if (auto hh = udivExact(a, cofa)) {
          if (!hh->empty() && udivExact(b, *hh)) {
            UPoly r = uprimitive(*hh);
            for (auto& c : r) c *= g;
            return r;
          }
        }
      }
    }
    x = nextPoint(x);
  }
  return std::nullopt;
}

using BPoly = std::vector<UPoly>;  // index = q-degree, entries are polys in t

BPoly toBPoly(const QTPoly& p) {
  BPoly out(static_cast<std::size_t>(p.maxDq()) + 1);
  for (const auto& t : p.terms()) {
    UPoly& u = out[static_cast<std::size_t>(t.dq)];
    if (u.size() <= static_cast<std::size_t>(t.dt)) u.resize(static_cast<std::size_t>(t.dt) + 1);
    u[static_cast<std::size_t>(t.dt)] = t.c;
  }
  return out;
}

QTPoly fromBPoly(const BPoly& b) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b[i].size(); ++j) {
      if (b[i][j] != 0) terms.push_back(Term{int(i), int(j), b[i][j]});
    }
  }
  return QTPoly::fromTerms(std::move(terms));
}

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    if (g.empty()) {
      g = c;
      if (g.back() < 0) {
        for (auto& x : g) x = -x;
      }
    } else {
      g = ugcdPrs(g, c);
    }
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

BPoly bprimitive(const BPoly& p) {
  const UPoly c = bcontent(p);
  BPoly out;
  out.reserve(p.size());
  for (const auto& x : p) {
    if (x.empty()) {
      out.emplace_back();
    } else {
      auto d = udivExact(x, c);
      if (!d) throw std::logic_error("bprimitive: content does not divide coefficient");
      out.push_back(std::move(*d));
    }
  }
  return out;
}

BPoly bprem(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (a.size() >= b.size()) {
    const UPoly la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = umul(c, lb);
    for (std::size_t j = 0; j < b.size(); ++j) {
      UPoly prod = umul(la, b[j]);
      UPoly& target = a[shift + j];
      if (target.size() < prod.size()) target.resize(prod.size());
      for (std::size_t k = 0; k < prod.size(); ++k) target[k] -= prod[k];
      trim(target);
    }
    btrim(a);
  }
  return a;
}

}  // namespace

namespace detail {

QTPoly primitiveNormalized(const QTPoly& p) {
  if (p.isZero()) return p;
  QTPoly r = p.divexactScalar(p.content());
  if (r.leadingCoeff() < 0) r = -r;
  return r;
}

std::optional<QTPoly> gcdHeuristic(const QTPoly& a, const QTPoly& b) {
  if (a.isZero() || b.isZero()) return std::nullopt;
  // Evaluate t at x; the univariate images are polynomials in q.
  auto evalT = [](const QTPoly& p, const mpz_class& x) {
    UPoly out(static_cast<std::size_t>(p.maxDq()) + 1);
    // Horner per q-degree; terms are sorted by (dq desc, dt desc).
    std::vector<mpz_class> pw(static_cast<std::size_t>(p.maxDt()) + 1);
    pw[0] = 1;
    for (std::size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * x;
    for (const auto& t : p.terms()) {
      mpz_addmul(out[static_cast<std::size_t>(t.dq)].get_mpz_t(), t.c.get_mpz_t(),
                 pw[static_cast<std::size_t>(t.dt)].get_mpz_t());
    }
    trim(out);
    return out;
  };
  auto lift = [](const UPoly& h, const mpz_class& x) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto digits = adicDigits(h[i], x);
      for (std::size_t j = 0; j < digits.size(); ++j) {
        if (digits[j] != 0) terms.push_back(Term{int(i), int(j), digits[j]});
      }
    }
    return QTPoly::fromTerms(std::move(terms));
  };

  mpz_class x = initialPoint(normInf(a), normInf(b), a.leadingCoeff(), b.leadingCoeff());
  for (int attempt = 0; attempt < 6; ++attempt) {
    const UPoly ea = evalT(a, x), eb = evalT(b, x);
    if (!ea.empty() && !eb.empty()) {
      if (auto h = ugcdHeuristic(ea, eb)) {
        QTPoly cand = primitiveNormalized(lift(*h, x));
        if (!cand.isZero() && a.divideExact(cand) && b.divideExact(cand)) return cand;
        if (auto cofa = udivExact(ea, *h)) {
          QTPoly ca = lift(*cofa, x);
          if (!ca.isZero()) {
            if (auto hh = a.divideExact(ca)) {
              if (!hh->isZero() && b.divideExact(*hh)) return primitiveNormalized(*hh);
            }
          }
        }
      }
    }
    x = nextPoint(x);
  }
  return std::nullopt;
}

QTPoly gcdPrs(const QTPoly& a, const QTPoly& b) {
  if (a.isZero()) return primitiveNormalized(b);
  if (b.isZero()) return primitiveNormalized(a);
  BPoly A = toBPoly(a), B = toBPoly(b);
  const UPoly ca = bcontent(A), cb = bcontent(B);
  const UPoly cg = ugcdPrs(ca, cb);
  A = bprimitive(A);
  B = bprimitive(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    BPoly r = bprem(A, B);
    A = std::move(B);
    B = r.empty() ? r : bprimitive(r);
  }
  A = bprimitive(A);
  for (auto& c : A) c = umul(c, cg);
  return primitiveNormalized(fromBPoly(A));
}

}  // namespace detail

QTPoly gcd(const QTPoly& a, const QTPoly& b) {
  if (a.isZero()) return detail::primitiveNormalized(b);
  if (b.isZero()) return detail::primitiveNormalized(a);
  if (!a.isPolynomial() || !b.isPolynomial()) {
    throw std::invalid_argument("gcd: operands must have nonnegative exponents");
  }
  const int mq = std::min(a.minDq(), b.minDq());
  const int mt = std::min(a.minDt(), b.minDt());
  const QTPoly mono = QTPoly::monomial(1, mq, mt);
  if (a.isMonomial() || b.isMonomial()) return mono;

  const QTPoly a0 = detail::primitiveNormalized(a.shifted(-a.minDq(), -a.minDt()));
  const QTPoly b0 = detail::primitiveNormalized(b.shifted(-b.minDq(), -b.minDt()));
  if (a0.isConstant() || b0.isConstant()) return mono;
  if (a0 == b0) return a0 * mono;
  if (a0.size() <= b0.size() ? b0.divideExact(a0).has_value() : false) return a0 * mono;
  if (b0.size() < a0.size() ? a0.divideExact(b0).has_value() : false) return b0 * mono;
  if (auto h = detail::gcdHeuristic(a0, b0)) return *h * mono;
  return detail::gcdPrs(a0, b0) * mono;
}

}  // namespace pfh
