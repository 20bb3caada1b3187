#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace laa {

/// Z_2 parity. Addition is mod 2.
class Parity {
public:
  constexpr Parity() = default;
  constexpr explicit Parity(int v) : v_(v & 1) {}
  constexpr int value() const { return v_; }
  constexpr bool is_even() const { return v_ == 0; }
  constexpr bool is_odd() const { return v_ == 1; }
  friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.v_ ^ b.v_); }
  friend constexpr bool operator==(Parity a, Parity b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Parity a, Parity b) { return a.v_ != b.v_; }
  /// Sign (-1)^{p(a) p(b)} of the supercommutation rule.
  friend constexpr int koszul_sign(Parity a, Parity b) {
    return (a.v_ & b.v_) ? -1 : 1;
  }

private:
  int v_ = 0;
};

inline constexpr Parity even_parity{0};
inline constexpr Parity odd_parity{1};

/// Integer-or-half-integer weight, stored as its double so arithmetic
/// stays integral.
class Weight {
public:
  constexpr Weight() = default;
  static constexpr Weight of_int(long long n) { return Weight(2 * n); }
  static constexpr Weight of_twice(long long t) { return Weight(t); }

  constexpr long long twice() const { return t_; }
  constexpr bool is_integer() const { return t_ % 2 == 0; }

  friend constexpr Weight operator+(Weight a, Weight b) { return Weight(a.t_ + b.t_); }
  friend constexpr Weight operator-(Weight a, Weight b) { return Weight(a.t_ - b.t_); }
  friend constexpr bool operator==(Weight a, Weight b) { return a.t_ == b.t_; }
  friend constexpr bool operator!=(Weight a, Weight b) { return a.t_ != b.t_; }
  friend constexpr bool operator<(Weight a, Weight b) { return a.t_ < b.t_; }
  friend constexpr bool operator<=(Weight a, Weight b) { return a.t_ <= b.t_; }

  std::string str() const {
    if (t_ % 2 == 0) return std::to_string(t_ / 2);
    return std::to_string(t_) + "/2";
  }

  /// Parses "n", "p/2", "p/q" with q in {1,2}, ignoring surrounding spaces.
  static Weight parse(const std::string &in) {
    std::string s;
    for (char c : in)
      if (!isspace(static_cast<unsigned char>(c))) s += c;
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return of_int(std::stoll(s));
      long long p = std::stoll(s.substr(0, slash));
      long long q = std::stoll(s.substr(slash + 1));
      if (q == 1) return of_int(p);
      if (q == 2) return of_twice(p);
    } catch (const std::logic_error &) {
    }
    throw std::invalid_argument("bad weight literal: '" + in + "'");
  }

  friend std::ostream &operator<<(std::ostream &os, const Weight &w) {
    return os << w.str();
  }

private:
  constexpr explicit Weight(long long t) : t_(t) {}
  long long t_ = 0;
};

/// Closed interval of weights used to truncate the infinite catalog
/// families to a finite, exhaustively checkable table.
struct WeightWindow {
  Weight lo;
  Weight hi;

  WeightWindow(Weight l, Weight h) : lo(l), hi(h) {
    if (h < l) throw std::invalid_argument("weight window with hi < lo");
  }
  bool contains(Weight w) const { return lo <= w && w <= hi; }

  std::string str() const { return lo.str() + ".." + hi.str(); }

  /// Parses "lo..hi" with half-integer endpoints, e.g. "-5/2..5/2".
  static WeightWindow parse(const std::string &s) {
    auto dots = s.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("bad window (expected lo..hi): '" + s + "'");
    return WeightWindow(Weight::parse(s.substr(0, dots)),
                        Weight::parse(s.substr(dots + 2)));
  }
};

/// Raised when a product or action lands on a generator outside the
/// working window. Windows are closed: truncation is an error, never a
/// silent zero.
class window_error : public std::runtime_error {
public:
  window_error(Weight offending, const std::string &what)
      : std::runtime_error("out of window (weight " + offending.str() + "): " + what),
        weight(offending) {}
  Weight weight;
};

} // namespace laa
