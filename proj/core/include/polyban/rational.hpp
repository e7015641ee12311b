#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace polyban {

/// Exact rational number backed by GMP. Always held in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rational(unsigned v) : v_(v) {}  // NOLINT
  Rational(unsigned long v) : v_(v) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(mpq_class&& v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p", "+p", "p/q" with decimal integers. Throws
  /// Error(ParseError) on anything else, including a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const;

  const mpq_class& mpq() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);
Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);
/// max(r, 0)
Rational positive_part(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RatVec = std::vector<Rational>;

RatVec parse_rational_list(std::string_view text, char sep = ',');
std::string to_string(const RatVec& v);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rational& s, const RatVec& v);
Rational dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);
RatVec zeros(std::size_t n);
RatVec unit_vector(std::size_t n, std::size_t i);

}  // namespace polyban

template <>
struct std::hash<polyban::Rational> {
  std::size_t operator()(const polyban::Rational& r) const noexcept { return r.hash(); }
};
