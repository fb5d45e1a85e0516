#include "pfh/qt_fraction.hpp"

#include <cctype>
#include <ostream>
#include <tuple>

namespace pfh {

namespace {

// p = q^dq t^dt * rest, rest has no monomial factor.
struct Split {
  int dq = 0;
  int dt = 0;
  QTPoly rest;
};

Split splitMonomial(const QTPoly& p) {
  Split s;
  s.dq = p.minDq();
  s.dt = p.minDt();
  s.rest = (s.dq == 0 && s.dt == 0) ? p : p.shifted(-s.dq, -s.dt);
  return s;
}

QTPoly mustDivide(const QTPoly& a, const QTPoly& b) {
  if (b.isOne()) return a;
  auto r = a.divideExact(b);
  if (!r) throw std::logic_error("QTFraction: gcd does not divide operand");
  return std::move(*r);
}

}  // namespace

QTFraction::QTFraction(const mpq_class& c)
    : QTFraction(finish(QTPoly(mpz_class(c.get_num())), QTPoly(mpz_class(c.get_den())))) {}

QTFraction::QTFraction(const QTPoly& p) : QTFraction(fromParts(p, QTPoly(1))) {}

QTFraction QTFraction::finish(QTPoly num, QTPoly den) {
  if (den.isZero()) throw DivisionByZero("zero denominator");
  if (num.isZero()) return QTFraction();
  mpz_class g;
  mpz_class cn = num.content(), cd = den.content();
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den.leadingCoeff() < 0) g = -g;
  if (g != 1) {
    num = num.divexactScalar(g);
    den = den.divexactScalar(g);
  }
  return QTFraction(std::move(num), std::move(den), true);
}

QTFraction QTFraction::fromParts(const QTPoly& num, const QTPoly& den) {
  if (den.isZero()) throw DivisionByZero("zero denominator");
  if (num.isZero()) return QTFraction();
  Split a = splitMonomial(num), b = splitMonomial(den);
  int dq = a.dq - b.dq, dt = a.dt - b.dt;
  QTPoly g = gcd(a.rest, b.rest);
  QTPoly n = mustDivide(a.rest, g), d = mustDivide(b.rest, g);
  n = n.shifted(std::max(dq, 0), std::max(dt, 0));
  d = d.shifted(std::max(-dq, 0), std::max(-dt, 0));
  return finish(std::move(n), std::move(d));
}

QTFraction QTFraction::monomial(int dq, int dt, long c) {
  if (c == 0) return QTFraction();
  return fromParts(QTPoly::monomial(c, dq, dt), QTPoly(1));
}

QTFraction QTFraction::operator-() const { return QTFraction(-num_, den_, true); }

QTFraction& QTFraction::operator+=(const QTFraction& o) {
  if (o.isZero()) return *this;
  if (isZero()) return *this = o;
  if (den_ == o.den_) {
    // common denominator: only its factors can cancel
    QTPoly n = num_ + o.num_;
    if (n.isZero()) return *this = QTFraction();
    if (den_.isOne()) return *this = finish(std::move(n), den_);
    QTPoly h = gcd(n, den_);
    return *this = finish(mustDivide(n, h), mustDivide(den_, h));
  }
  // Henrici
  QTPoly g = gcd(den_, o.den_);
  QTPoly b1 = mustDivide(den_, g), d1 = mustDivide(o.den_, g);
  QTPoly n = num_ * d1 + o.num_ * b1;
  if (n.isZero()) return *this = QTFraction();
  if (g.isOne()) return *this = finish(std::move(n), b1 * d1);
  QTPoly h = gcd(n, g);
  return *this = finish(mustDivide(n, h), b1 * mustDivide(o.den_, h));
}

QTFraction& QTFraction::operator-=(const QTFraction& o) { return *this += -o; }

QTFraction& QTFraction::operator*=(const QTFraction& o) {
  if (isZero() || o.isZero()) return *this = QTFraction();
  if (o.isOne()) return *this;
  if (isOne()) return *this = o;
  QTPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  QTPoly n = mustDivide(num_, g1) * mustDivide(o.num_, g2);
  QTPoly d = mustDivide(den_, g2) * mustDivide(o.den_, g1);
  return *this = finish(std::move(n), std::move(d));
}

QTFraction& QTFraction::operator/=(const QTFraction& o) { return *this *= o.inverse(); }

QTFraction QTFraction::inverse() const {
  if (isZero()) throw DivisionByZero("inverse of zero");
  return finish(den_, num_);
}

std::optional<QTFraction> QTFraction::tryInverse() const {
  if (isZero()) return std::nullopt;
  return finish(den_, num_);
}

QTFraction QTFraction::pow(int e) const {
  if (e == 0) return QTFraction(1);
  if (e < 0) return inverse().pow(-e);
  // coprime parts stay coprime
  return finish(num_.pow(unsigned(e)), den_.pow(unsigned(e)));
}

QTFraction QTFraction::bar() const {
  if (isZero()) return *this;
  // reversal keeps monomial-free coprime parts coprime
  Split a = splitMonomial(num_.invertVariables());
  Split b = splitMonomial(den_.invertVariables());
  int dq = a.dq - b.dq, dt = a.dt - b.dt;
  QTPoly n = a.rest.shifted(std::max(dq, 0), std::max(dt, 0));
  QTPoly d = b.rest.shifted(std::max(-dq, 0), std::max(-dt, 0));
  return finish(std::move(n), std::move(d));
}

QTFraction QTFraction::adams(int r) const {
  if (r < 1) throw std::invalid_argument("adams: r must be positive");
  if (r == 1 || isZero()) return *this;
  return fromParts(num_.powerSubstitute(r), den_.powerSubstitute(r));
}

std::optional<mpq_class> QTFraction::evalAt(const mpq_class& q0, const mpq_class& t0) const {
  auto d = den_.eval(q0, t0);
  if (!d || *d == 0) return std::nullopt;
  auto n = num_.eval(q0, t0);
  if (!n) return std::nullopt;
  mpq_class r = *n / *d;
  r.canonicalize();
  return r;
}

std::string QTFraction::toString() const {
  if (den_.isOne()) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

std::ostream& operator<<(std::ostream& os, const QTFraction& f) { return os << f.toString(); }

// --- parser -------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  QTFraction expr() {
    QTFraction v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  QTFraction term() {
    QTFraction v = factor();
    for (;;) {
      if (eat('*')) v *= factor();
      else if (eat('/')) {
        QTFraction d = factor();
        if (d.isZero()) fail("division by zero");
        v /= d;
      } else return v;
    }
  }
  QTFraction factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    QTFraction b = base();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (eat('-')) neg = true;
      else if (eat('(')) {  // q^(-2)
        bool inner = eat('-');
        long e = integer();
        if (!eat(')')) fail("expected ')'");
        return b.pow(int(inner ? -e : e));
      }
      long e = integer();
      if (neg && b.isZero()) fail("negative power of zero");
      return b.pow(int(neg ? -e : e));
    }
    return b;
  }
  long integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }
  QTFraction base() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      QTFraction v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos;
      return QTFraction::q();
    }
    if (c == 't') {
      ++pos;
      return QTFraction::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return QTFraction(mpz_class(s.substr(start, pos - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

QTFraction QTFraction::parse(const std::string& text) {
  Parser p{text};
  QTFraction v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace pfh
