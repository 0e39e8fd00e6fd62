#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "fano/error.hpp"

namespace fano {

// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
// Thin value wrapper around GMP's mpq_class; all arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(int n) : v_(n) {}                             // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "n" or "n/d", with optional leading minus.
  static Rational parse(std::string_view text) {
    try {
      mpq_class v(std::string(text), 10);
      if (v.get_den() == 0) throw error("rational with zero denominator");
      v.canonicalize();
      return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
      throw error("malformed rational literal '" + std::string(text) + "'");
    }
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw error("division by zero");
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

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw error("division by zero");
      return Rational(1) / pow(-e);
    }
    Rational r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  // "5", "-1/6"
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

 private:
  explicit Rational(mpq_class&& v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace fano
