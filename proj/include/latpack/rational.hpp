#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace latpack {

// Exact rational, always canonical (reduced, positive denominator).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  Rational reciprocal() const;
  mpz_class floor() const;
  mpz_class ceil() const;

  // "p/q", or "p" for integers.
  std::string str() const;
  // Exact decimal floor/ceiling at the given number of places, e.g. "0.993".
  std::string decimal_floor(int places) const;
  std::string decimal_ceil(int places) const;
  std::size_t digits() const;

 private:
  mpq_class q_;
};

std::string decimal_string(const mpz_class& scaled, int places);

}  // namespace latpack
