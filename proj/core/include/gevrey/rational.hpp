#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gevrey {

/// Exact rational number. Stored in lowest terms with positive denominator;
/// arithmetic never rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(int n) : v_(n) {}   // NOLINT
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Parses "a" or "a/b" with optional leading minus.
  static Rational parse(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  /// Nearest-double conversion; relative error below 2^-52, i.e. at least
  /// 15 significant decimal digits.
  double to_double() const { return v_.get_d(); }

  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { Rational r(a); r += b; return r; }
  friend Rational operator-(const Rational& a, const Rational& b) { Rational r(a); r -= b; return r; }
  friend Rational operator*(const Rational& a, const Rational& b) { Rational r(a); r *= b; return r; }
  friend Rational operator/(const Rational& a, const Rational& b) { Rational r(a); r /= b; return r; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;  // canonical: lowest terms, positive denominator
};

mpz_class factorial(unsigned long n);
mpz_class double_factorial(unsigned long n);

/// Generalized binomial coefficient C(top, k) for integer top (possibly
/// negative); always an exact integer value.
Rational binomial_general(long top, unsigned long k);

Rational pow(const Rational& base, long e);

}  // namespace gevrey
