#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace laa {

/// Exact rational number over 64-bit integers. Always stored in lowest
/// terms with a positive denominator. Arithmetic goes through 128-bit
/// intermediates and throws std::overflow_error instead of wrapping.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

  Rational &operator+=(const Rational &o) {
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    set(n, d);
    return *this;
  }
  Rational &operator-=(const Rational &o) { return *this += -o; }
  Rational &operator*=(const Rational &o) {
    set(i128(num_) * o.num_, i128(den_) * o.den_);
    return *this;
  }
  Rational &operator/=(const Rational &o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    i128 n = i128(num_) * o.den_;
    i128 d = i128(den_) * o.num_;
    set(n, d);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }
  friend bool operator<(const Rational &a, const Rational &b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  Rational inverse() const {
    if (num_ == 0) throw std::domain_error("inverse of zero");
    return num_ > 0 ? Rational(unchecked{}, den_, num_)
                    : Rational(unchecked{}, -den_, -num_);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
  }

  /// Parses "p", "p/q", with optional sign. Throws std::invalid_argument.
  static Rational parse(const std::string &s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      long long n = std::stoll(s.substr(0, slash));
      long long d = std::stoll(s.substr(slash + 1));
      return Rational(n, d);
    } catch (const std::logic_error &) {
      throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
  }

private:
  using i128 = __int128;
  struct unchecked {};
  Rational(unchecked, long long n, long long d) : num_(n), den_(d) {}

  static long long narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
  }

  void set(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = narrow(n);
    den_ = narrow(d);
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() { set(num_, den_); }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational half() { return Rational(1, 2); }

} // namespace laa
