#include "interpcat/exactnum.hpp"

#include <cctype>

namespace interpcat {

Rational ratio(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  std::string trimmed;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  if (trimmed.empty() || q.set_str(trimmed, 10) != 0)
    throw DomainError("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& x, int k) {
  if (k < 0) {
    if (x == 0) throw DomainError("zero to a negative power");
    return 1 / rational_pow(x, -k);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::t() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, int k) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

const Rational& Poly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& o) {
  if (o == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= o;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly q, r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational inv = 1 / b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const Rational f = r.lead() * inv;
    q.c_[static_cast<size_t>(shift)] = f;
    for (int i = 0; i <= b.degree(); ++i)
      r.c_[static_cast<size_t>(i + shift)] -= f * b.c_[static_cast<size_t>(i)];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r *= Rational(1 / lead());
  return r;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::string format_integer_poly(const std::vector<Integer>& c) {
  std::string out;
  bool first = true;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    const Integer& a = c[static_cast<size_t>(k)];
    if (a == 0) continue;
    const bool neg = a < 0;
    Integer mag = abs(a);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return first ? "0" : out;
}

std::string format_rational_poly(const std::vector<Rational>& c) {
  std::string out;
  bool first = true;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    const Rational& a = c[static_cast<size_t>(k)];
    if (a == 0) continue;
    const bool neg = a < 0;
    Rational mag = abs(a);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return first ? "0" : out;
}

}  // namespace

std::string Poly::to_string() const { return format_rational_poly(c_); }

Poly poly_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const size_t n = points.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw DomainError("poly_interpolate: duplicate abscissa " + points[i].first.get_str());
  // Newton divided differences.
  std::vector<Rational> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
  Poly result;
  for (size_t i = n; i-- > 0;) {
    result *= Poly(std::vector<Rational>{-points[i].first, Rational(1)});
    result += Poly(dd[i]);
  }
  return result;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::t_power(int k) {
  if (k >= 0) return RatFunc(Poly::monomial(1, k));
  return RatFunc(Poly(1), Poly::monomial(1, -k));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  const Rational lc = den_.lead();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant: " + to_string());
  return num_.coeff(0);
}

bool RatFunc::has_pole_at(const Rational& t0) const { return den_.eval(t0) == 0; }

Rational RatFunc::eval(const Rational& t0) const {
  const Rational d = den_.eval(t0);
  if (d == 0) throw DomainError("pole at t = " + t0.get_str() + " in " + to_string());
  return num_.eval(t0) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0 && num_.is_zero()) return "0";
  // Clear denominators so both parts have coprime integer coefficients.
  Integer l = 1;
  for (const auto& c : num_.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : den_.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> n, d;
  Integer g = 0;
  for (const auto& c : num_.coeffs()) {
    Rational v = c * l;
    n.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.back().get_mpz_t());
  }
  for (const auto& c : den_.coeffs()) {
    Rational v = c * l;
    d.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.back().get_mpz_t());
  }
  for (auto& x : n) x /= g;
  for (auto& x : d) x /= g;
  if (d.size() == 1 && d[0] == 1) return format_integer_poly(n);
  return "(" + format_integer_poly(n) + ")/(" + format_integer_poly(d) + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw DomainError("cannot parse rational function '" + s_ + "': " + what + " at offset " +
                      std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      skip();
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else if (pos_ < s_.size() && (s_[pos_] == 't' || s_[pos_] == '(')) {
        r *= unary();  // implicit product such as 3t or 2(t+1)
      } else {
        return r;
      }
    }
  }
  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    RatFunc b = power();
    return b;
  }
  RatFunc power() {
    RatFunc b = atom();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      long e = integer();
      if (neg) e = -e;
      RatFunc r(1);
      RatFunc base = e < 0 ? RatFunc(1) / b : b;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
      return r;
    }
    return b;
  }
  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stol(s_.substr(start, pos_ - start));
  }
  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (ch == 't') {
      ++pos_;
      return RatFunc::t();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(const std::string& s) { return Parser(s).parse(); }

RatFunc rf_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw DomainError("unknown arithmetic operation");
}

Rational rf_eval(const RatFunc& a, const Rational& t0) { return a.eval(t0); }

}  // namespace interpcat
