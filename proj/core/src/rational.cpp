#include "gevrey/rational.hpp"

#include <cctype>
#include <ostream>

namespace gevrey {

namespace {

void check_den(const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
}

bool valid_int_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  check_den(mpz_class(den));
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  check_den(den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_int_text(text)) throw std::invalid_argument("Rational: bad integer literal '" + text + "'");
    return Rational(mpz_class(text));
  }
  const std::string a = text.substr(0, slash);
  const std::string b = text.substr(slash + 1);
  if (!valid_int_text(a) || !valid_int_text(b))
    throw std::invalid_argument("Rational: bad rational literal '" + text + "'");
  return Rational(mpz_class(a), mpz_class(b));
}

Rational Rational::abs() const {
  Rational r(*this);
  r.v_ = ::abs(r.v_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class double_factorial(unsigned long n) {
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational binomial_general(long top, unsigned long k) {
  Rational c = 1;
  for (unsigned long i = 0; i < k; ++i) {
    c *= Rational(top - static_cast<long>(i), static_cast<long>(i) + 1);
  }
  return c;
}

Rational pow(const Rational& base, long e) {
  if (e == 0) return 1;
  if (base.is_zero()) {
    if (e < 0) throw std::domain_error("Rational: zero to a negative power");
    return 0;
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e > 0 ? Rational(n, d) : Rational(d, n);
}

}  // namespace gevrey
