#include "latpack/rational.hpp"

#include <stdexcept>

namespace latpack {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (q_ == 0) throw std::domain_error("reciprocal of zero");
  return Rational(mpq_class(q_.get_den(), q_.get_num()));
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string decimal_string(const mpz_class& scaled, int places) {
  bool neg = scaled < 0;
  mpz_class mag = neg ? mpz_class(-scaled) : scaled;
  std::string digits = mag.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return neg ? "-" + digits : digits;
}

namespace {

mpz_class pow10(int places) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(places));
  return p;
}

}  // namespace

std::string Rational::decimal_floor(int places) const {
  return decimal_string((*this * Rational(mpq_class(pow10(places)))).floor(), places);
}

std::string Rational::decimal_ceil(int places) const {
  return decimal_string((*this * Rational(mpq_class(pow10(places)))).ceil(), places);
}

std::size_t Rational::digits() const {
  return mpz_sizeinbase(q_.get_den_mpz_t(), 10);
}

}  // namespace latpack
