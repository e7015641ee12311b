#include "polyban/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "polyban/errors.hpp"

namespace polyban {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  bool ok = valid_integer(num) && (slash == std::string_view::npos ||
                                   (valid_integer(den) && den[0] != '+' && den[0] != '-'));
  if (!ok) throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  mpq_class q;
  q.get_num() = parse_integer(num);
  q.get_den() = slash == std::string_view::npos ? mpz_class(1) : parse_integer(den);
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  std::size_t h1 = std::hash<std::string>{}(v_.get_num().get_str(16));
  std::size_t h2 = std::hash<std::string>{}(v_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational positive_part(const Rational& r) { return r.sign() > 0 ? r : Rational(0); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

RatVec parse_rational_list(std::string_view text, char sep) {
  RatVec out;
  std::string_view s = trim(text);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(Rational::parse(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

RatVec operator-(const RatVec& a) {
  RatVec out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(-x);
  return out;
}

RatVec operator*(const Rational& s, const RatVec& v) {
  RatVec out(v);
  for (auto& x : out) x *= s;
  return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
  mpq_class acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i].mpq() * b[i].mpq();
  }
  return Rational(std::move(acc));
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

RatVec zeros(std::size_t n) { return RatVec(n); }

RatVec unit_vector(std::size_t n, std::size_t i) {
  RatVec v(n);
  v[i] = 1;
  return v;
}

}  // namespace polyban
