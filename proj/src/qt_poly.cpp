#include "pfh/qt_poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pfh {

namespace {

bool termGreater(const Term& a, const Term& b) {
  return a.dq != b.dq ? a.dq > b.dq : a.dt > b.dt;
}

bool sameMonomial(const Term& a, const Term& b) { return a.dq == b.dq && a.dt == b.dt; }

std::vector<Term> mergeAdd(const std::vector<Term>& a, const std::vector<Term>& b, bool negateB) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && termGreater(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || termGreater(b[j], a[i])) {
      out.push_back(b[j++]);
      if (negateB) out.back().c = -out.back().c;
    } else {
      mpz_class c = negateB ? mpz_class(a[i].c - b[j].c) : mpz_class(a[i].c + b[j].c);
      if (c != 0) out.push_back(Term{a[i].dq, a[i].dt, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string monomialText(int dq, int dt) {
  std::string s;
  auto var = [&](char v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e != 1) s += '^' + std::to_string(e);
  };
  var('q', dq);
  var('t', dt);
  return s;
}

}  // namespace

QTPoly::QTPoly(long c) {
  if (c != 0) terms_.push_back(Term{0, 0, mpz_class(c)});
}

QTPoly::QTPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back(Term{0, 0, c});
}

QTPoly QTPoly::monomial(const mpz_class& c, int dq, int dt) {
  QTPoly p;
  if (c != 0) p.terms_.push_back(Term{dq, dt, c});
  return p;
}

QTPoly QTPoly::fromTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), termGreater);
  QTPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && sameMonomial(p.terms_.back(), t)) {
      p.terms_.back().c += t.c;
    } else {
      if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
  return p;
}

bool QTPoly::isOne() const {
  return terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0 && terms_[0].c == 1;
}

bool QTPoly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0);
}

bool QTPoly::isPolynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.dq >= 0 && t.dt >= 0; });
}

int QTPoly::minDq() const { return terms_.empty() ? 0 : terms_.back().dq; }
int QTPoly::maxDq() const { return terms_.empty() ? 0 : terms_.front().dq; }

int QTPoly::minDt() const {
  int m = terms_.empty() ? 0 : terms_.front().dt;
  for (const auto& t : terms_) m = std::min(m, t.dt);
  return m;
}

int QTPoly::maxDt() const {
  int m = terms_.empty() ? 0 : terms_.front().dt;
  for (const auto& t : terms_) m = std::max(m, t.dt);
  return m;
}

QTPoly QTPoly::operator-() const {
  QTPoly p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = mergeAdd(terms_, o.terms_, false);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = mergeAdd(terms_, o.terms_, true);
  return *this;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
  if (a.isZero() || b.isZero()) return QTPoly();
  if (b.size() == 1) return a.shifted(b.terms_[0].dq, b.terms_[0].dt).scaled(b.terms_[0].c);
  if (a.size() == 1) return b.shifted(a.terms_[0].dq, a.terms_[0].dt).scaled(a.terms_[0].c);

  const int q0 = a.minDq() + b.minDq();
  const int t0 = a.minDt() + b.minDt();
  const long spanQ = long(a.maxDq()) + b.maxDq() - q0 + 1;
  const long spanT = long(a.maxDt()) + b.maxDt() - t0 + 1;
  const long cells = spanQ * spanT;
  const long products = long(a.size()) * long(b.size());

  QTPoly out;
  if (cells <= 4 * products + 64) {
    std::vector<mpz_class> grid(static_cast<std::size_t>(cells));
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        const long idx = long(x.dq + y.dq - q0) * spanT + (x.dt + y.dt - t0);
        mpz_addmul(grid[idx].get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
      }
    }
    for (long i = cells - 1; i >= 0; --i) {
      if (grid[i] != 0) {
        out.terms_.push_back(Term{int(i / spanT) + q0, int(i % spanT) + t0, std::move(grid[i])});
      }
    }
    return out;
  }

  std::vector<Term> prods;
  prods.reserve(static_cast<std::size_t>(products));
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prods.push_back(Term{x.dq + y.dq, x.dt + y.dt, x.c * y.c});
  }
  return QTPoly::fromTerms(std::move(prods));
}

QTPoly QTPoly::scaled(const mpz_class& c) const {
  if (c == 0) return QTPoly();
  QTPoly p = *this;
  if (c != 1) {
    for (auto& t : p.terms_) t.c *= c;
  }
  return p;
}

QTPoly QTPoly::shifted(int dq, int dt) const {
  QTPoly p = *this;
  for (auto& t : p.terms_) {
    t.dq += dq;
    t.dt += dt;
  }
  return p;
}

QTPoly QTPoly::pow(unsigned e) const {
  QTPoly result(1);
  QTPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

mpz_class QTPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QTPoly QTPoly::divexactScalar(const mpz_class& c) const {
  QTPoly p = *this;
  if (c != 1) {
    for (auto& t : p.terms_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  }
  return p;
}

std::optional<QTPoly> QTPoly::divideExact(const QTPoly& d) const {
  if (d.isZero()) throw std::domain_error("QTPoly::divideExact: division by zero polynomial");
  if (isZero()) return QTPoly();
  if (d.size() == 1) {
    const Term& m = d.terms_[0];
    QTPoly out = shifted(-m.dq, -m.dt);
    if (!out.isPolynomial() && isPolynomial() && d.isPolynomial()) return std::nullopt;
    for (auto& t : out.terms_) {
      if (!mpz_divisible_p(t.c.get_mpz_t(), m.c.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), m.c.get_mpz_t());
    }
    return out;
  }
  if (!isPolynomial() || !d.isPolynomial()) {
    throw std::invalid_argument("QTPoly::divideExact: Laurent operands are not supported");
  }
  const int dq = maxDq(), dt = maxDt();
  const int eq = d.leading().dq, et = d.leading().dt;
  const int ddt = d.maxDt();
  if (dq < d.maxDq() || dt < ddt) return std::nullopt;
  const long spanT = dt + 1;
  std::vector<mpz_class> grid(static_cast<std::size_t>((dq + 1) * spanT));
  for (const auto& t : terms_) grid[long(t.dq) * spanT + t.dt] = t.c;

  std::vector<Term> quotient;
  long cursor = long(grid.size()) - 1;
  mpz_class qc;
  while (true) {
    while (cursor >= 0 && grid[cursor] == 0) --cursor;
    if (cursor < 0) break;
    const int rq = int(cursor / spanT), rt = int(cursor % spanT);
    if (rq < eq || rt < et) return std::nullopt;
    const int mq = rq - eq, mt = rt - et;
    if (mt + ddt > dt) return std::nullopt;
    if (!mpz_divisible_p(grid[cursor].get_mpz_t(), d.leadingCoeff().get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), grid[cursor].get_mpz_t(), d.leadingCoeff().get_mpz_t());
    for (const auto& x : d.terms_) {
      const long idx = long(x.dq + mq) * spanT + (x.dt + mt);
      mpz_submul(grid[idx].get_mpz_t(), qc.get_mpz_t(), x.c.get_mpz_t());
    }
    quotient.push_back(Term{mq, mt, qc});
  }
  QTPoly out;
  out.terms_ = std::move(quotient);
  return out;
}

QTPoly QTPoly::invertVariables() const {
  QTPoly p;
  p.terms_.assign(terms_.rbegin(), terms_.rend());
  for (auto& t : p.terms_) {
    t.dq = -t.dq;
    t.dt = -t.dt;
  }
  return p;
}

QTPoly QTPoly::powerSubstitute(int r) const {
  if (r == 0) {
    mpz_class s = 0;
    for (const auto& t : terms_) s += t.c;
    return QTPoly(s);
  }
  QTPoly p = *this;
  for (auto& t : p.terms_) {
    t.dq *= r;
    t.dt *= r;
  }
  if (r < 0) std::reverse(p.terms_.begin(), p.terms_.end());
  return p;
}

std::optional<mpq_class> QTPoly::eval(const mpq_class& q0, const mpq_class& t0) const {
  mpq_class sum = 0;
  auto power = [](const mpq_class& base, int e) -> std::optional<mpq_class> {
    if (e < 0 && base == 0) return std::nullopt;
    mpq_class b = e < 0 ? mpq_class(1 / base) : base;
    unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    mpq_class r = 1;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), n);
    r.canonicalize();
    return r;
  };
  for (const auto& t : terms_) {
    auto a = power(q0, t.dq);
    auto b = power(t0, t.dt);
    if (!a || !b) return std::nullopt;
    sum += mpq_class(t.c) * *a * *b;
  }
  return sum;
}

std::string QTPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class mag = abs(t.c);
    const bool neg = t.c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomialText(t.dq, t.dt);
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

bool QTPoly::operator==(const QTPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!sameMonomial(terms_[i], o.terms_[i]) || terms_[i].c != o.terms_[i].c) return false;
  }
  return true;
}

bool QTPoly::operator<(const QTPoly& o) const {
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[i];
    if (!sameMonomial(a, b)) return termGreater(a, b);
    const int c = cmp(a.c, b.c);
    if (c != 0) return c < 0;
  }
  return false;
}

std::size_t QTPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003u ^ std::hash<int>()(t.dq * 7919 + t.dt);
    h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(t.c.get_mpz_t()));
  }
  return h;
}

}  // namespace pfh
