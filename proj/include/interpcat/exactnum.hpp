#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace interpcat {

using Rational = mpq_class;
using Integer = mpz_class;

// Raised for mathematically invalid requests (poles, division by zero,
// malformed diagrams). The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonicalised n/d; mpq_class(n, d) alone does not reduce.
Rational ratio(long n, long d);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Dense univariate polynomial in t, coefficient i multiplies t^i.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs);

  static Poly t();
  static Poly monomial(const Rational& c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int i) const;
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_constant() const { return c_.size() <= 1; }

  Rational eval(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; throws on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b);

  Poly monic() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Lagrange/Newton interpolation through points with distinct abscissae.
Poly poly_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// Element of Q(t), kept reduced with a monic denominator so that equality is
// structural.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}         // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(1) {}      // NOLINT
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc t() { return RatFunc(Poly::t()); }
  static RatFunc t_power(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  Rational constant_value() const;

  Rational eval(const Rational& t0) const;
  bool has_pole_at(const Rational& t0) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "(num)/(den)" with integer coefficients, or just "num" when den = 1.
  std::string to_string() const;
  static RatFunc parse(const std::string& s);

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };
RatFunc rf_arith(const RatFunc& a, const RatFunc& b, ArithOp op);
Rational rf_eval(const RatFunc& a, const Rational& t0);

Rational rational_pow(const Rational& x, int k);

}  // namespace interpcat
