#include "minsub/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace minsub {

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw RationalError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw RationalError("zero denominator");
  return Rational(mpq_class(num, den));
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num, true))
    throw RationalError("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_mpz(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_text(den, false))
    throw RationalError("malformed rational '" + std::string(text) + "'");
  return make_rational(to_mpz(num), to_mpz(den));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Vector Vector::unit(std::size_t dim, std::size_t axis) {
  Vector v(dim);
  v[axis] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Vector::is_integral() const {
  for (const auto& e : entries_)
    if (!e.is_integer()) return false;
  return true;
}

void require_same_dim(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim())
    throw DimensionMismatch("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                            std::to_string(v.dim()));
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& t) {
  for (auto& e : entries_) e *= t;
  return *this;
}

Vector Vector::operator-() const {
  Vector out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

Rational dot(const Vector& u, const Vector& v) {
  require_same_dim(u, v);
  mpq_class acc;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i].raw() * v[i].raw();
  return Rational(std::move(acc));
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

}  // namespace minsub
