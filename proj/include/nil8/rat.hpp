// Exact rational scalar used everywhere in the library.  Thin wrapper over
// GMP's mpq_class that keeps every value canonical: lowest terms, positive
// denominator.  No floating point enters any computation built on this type.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace nil8 {

class Rat {
public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}
  Rat(long n) : q_(n) {}
  Rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
  static Rat parse(const std::string& s);

  bool is_zero() const { return q_.get_num() == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  /// Rough size measure (GMP limb count) used for pivot selection.
  size_t complexity() const {
    return mpz_size(q_.get_num().get_mpz_t()) + mpz_size(q_.get_den().get_mpz_t());
  }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  friend Rat abs(const Rat& a) { return Rat(mpq_class(abs(a.q_))); }

  /// acc += a*b without a named temporary at every call site.
  friend void add_mul(Rat& acc, const Rat& a, const Rat& b) { acc.q_ += a.q_ * b.q_; }
  friend void sub_mul(Rat& acc, const Rat& a, const Rat& b) { acc.q_ -= a.q_ * b.q_; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  mpq_class q_;
};

}  // namespace nil8
