#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace minsub {

/// Raised for malformed rational input (zero denominator, bad text).
class RationalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two vectors of different dimension are combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number with an arbitrary-precision numerator and positive
/// denominator, always held in lowest terms (zero is 0/1). Because the form
/// is canonical, equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class floor() const;
  mpz_class ceil() const;
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Builds num/den in canonical form. Throws RationalError when den == 0.
Rational make_rational(const mpz_class& num, const mpz_class& den);
Rational make_rational(std::int64_t num, std::int64_t den);

/// Parses "p/q", "p", or "-p/q" (whitespace not allowed).
Rational parse_rational(std::string_view text);

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Ordered list of rationals; a point or direction of Q^n.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static Vector unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;
  bool is_integral() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& t);
  Vector operator-() const;

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, const Rational& t) { return a *= t; }
  friend Vector operator*(const Rational& t, Vector a) { return a *= t; }

  friend bool operator==(const Vector&, const Vector&) = default;
  /// Lexicographic order.
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

 private:
  std::vector<Rational> entries_;
};

/// Exact inner product. Throws DimensionMismatch when dims differ.
Rational dot(const Vector& u, const Vector& v);

void require_same_dim(const Vector& u, const Vector& v);

std::string to_string(const Vector& v);
std::ostream& operator<<(std::ostream& os, const Vector& v);

}  // namespace minsub
