#ifndef GLAT_RATIONAL_HPP
#define GLAT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <stdexcept>
#include <string>

namespace glat {

// Exact rational scalar backed by GMP. Invariant: the stored value is always
// canonical (gcd(|num|, den) = 1, den > 0, zero is 0/1). gmp only guarantees
// canonical results for canonical inputs, so every construction path
// normalizes explicitly.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n) : v_(make_int(n)) {}
  Rational(long long num, long long den) : v_(make_int(num)) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ /= make_int(den);
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "a" or "a/b" with optional leading '-'.
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q, already_canonical_tag{});
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  // "a" when the denominator is 1, "a/b" otherwise.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(static_cast<mpq_class>(-v_), already_canonical_tag{}); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  struct already_canonical_tag {};
  Rational(mpq_class q, already_canonical_tag) : v_(std::move(q)) {}

  static mpz_class make_int(long long n) {
    // mpz_class has no long long constructor on LP64-safe paths; go via string
    // only when the value does not fit in long.
    if (n >= static_cast<long long>(-0x7fffffffL - 1) && n <= 0x7fffffffL)
      return mpz_class(static_cast<long>(n));
    return mpz_class(std::to_string(n));
  }

  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace glat

#endif
