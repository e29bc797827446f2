#pragma once

#include <iosfwd>
#include <string>

#include "mtrace/laurent.hpp"

namespace mtrace {

// Element c0 + c1*a of Q[a]/(a^2 - 1).
class ParityScalar {
 public:
  ParityScalar() = default;
  ParityScalar(long c) : c0_(c) {}  // NOLINT: implicit from integers is convenient in tables
  ParityScalar(Rational c0, Rational c1 = 0) : c0_(std::move(c0)), c1_(std::move(c1)) {
    c0_.canonicalize();
    c1_.canonicalize();
  }

  static ParityScalar a() { return ParityScalar(0, 1); }
  static ParityScalar a_pow(long k) { return (k % 2 == 0) ? ParityScalar(1) : a(); }
  static ParityScalar parse(const std::string& text);
  // Reduce a polynomial in the single variable a (others must be absent).
  static ParityScalar from_polynomial(const LaurentPolynomial& p);

  const Rational& c0() const { return c0_; }
  const Rational& c1() const { return c1_; }
  bool is_zero() const { return c0_ == 0 && c1_ == 0; }
  // Value at a = +1 and a = -1.
  Rational at_plus() const { return c0_ + c1_; }
  Rational at_minus() const { return c0_ - c1_; }
  static ParityScalar from_values(const Rational& plus, const Rational& minus) {
    return ParityScalar((plus + minus) / 2, (plus - minus) / 2);
  }
  // Units are exactly the elements with nonzero value at both a = 1 and a = -1.
  bool is_unit() const { return at_plus() != 0 && at_minus() != 0; }
  ParityScalar inverse() const;

  ParityScalar operator-() const { return ParityScalar(-c0_, -c1_); }
  ParityScalar& operator+=(const ParityScalar& o) {
    c0_ += o.c0_;
    c1_ += o.c1_;
    return *this;
  }
  ParityScalar& operator-=(const ParityScalar& o) {
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    return *this;
  }
  ParityScalar& operator*=(const ParityScalar& o) {
    Rational n0 = c0_ * o.c0_ + c1_ * o.c1_;
    Rational n1 = c0_ * o.c1_ + c1_ * o.c0_;
    c0_ = n0;
    c1_ = n1;
    return *this;
  }
  friend ParityScalar operator+(ParityScalar p, const ParityScalar& q) { return p += q; }
  friend ParityScalar operator-(ParityScalar p, const ParityScalar& q) { return p -= q; }
  friend ParityScalar operator*(ParityScalar p, const ParityScalar& q) { return p *= q; }
  friend bool operator==(const ParityScalar& p, const ParityScalar& q) { return p.c0_ == q.c0_ && p.c1_ == q.c1_; }
  friend bool operator!=(const ParityScalar& p, const ParityScalar& q) { return !(p == q); }

  std::string to_string() const;

 private:
  Rational c0_ = 0;
  Rational c1_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ParityScalar& s);

// Element u + v*alpha of Q[alpha]/(alpha^2 - q) for a nonzero rational q.
// Used to run the skein recursion at a rational point a = alpha^-2 = 1/q.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(Rational q, Rational u, Rational v = 0) : q_(std::move(q)), u_(std::move(u)), v_(std::move(v)) {}

  static QuadScalar alpha(const Rational& q) { return QuadScalar(q, 0, 1); }
  const Rational& square() const { return q_; }
  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  bool is_zero() const { return u_ == 0 && v_ == 0; }

  QuadScalar operator-() const { return QuadScalar(q_, -u_, -v_); }
  QuadScalar& operator+=(const QuadScalar& o) {
    u_ += o.u_;
    v_ += o.v_;
    return *this;
  }
  QuadScalar& operator-=(const QuadScalar& o) {
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
  }
  QuadScalar& operator*=(const QuadScalar& o) {
    Rational nu = u_ * o.u_ + q_ * v_ * o.v_;
    Rational nv = u_ * o.v_ + v_ * o.u_;
    u_ = std::move(nu);
    v_ = std::move(nv);
    return *this;
  }
  friend QuadScalar operator+(QuadScalar p, const QuadScalar& q) { return p += q; }
  friend QuadScalar operator-(QuadScalar p, const QuadScalar& q) { return p -= q; }
  friend QuadScalar operator*(QuadScalar p, const QuadScalar& q) { return p *= q; }
  friend bool operator==(const QuadScalar& p, const QuadScalar& q) { return p.u_ == q.u_ && p.v_ == q.v_; }

 private:
  Rational q_ = 1;
  Rational u_ = 0;
  Rational v_ = 0;
};

}  // namespace mtrace
