#pragma once

#include <optional>
#include <string>

#include "laa/algebra.hpp"

namespace laa {
namespace catalog {

/// Tiny Kaplansky algebra K3: one even half-unit eps and two odd
/// generators a, b with a*b = eps/2.
inline AlgebraSpec k3() {
  std::vector<Generator> gens{
      {GenId{"eps"}, even_parity, Weight::of_int(0)},
      {GenId{"a"}, odd_parity, Weight::of_twice(1)},
      {GenId{"b"}, odd_parity, Weight::of_twice(-1)},
  };
  AlgebraSpec s("K3", ProductStyle::product, gens);
  s.set_product(GenId{"eps"}, GenId{"eps"}, Element::single(GenId{"eps"}));
  s.set_product(GenId{"eps"}, GenId{"a"}, Element::single(GenId{"a"}, half()));
  s.set_product(GenId{"eps"}, GenId{"b"}, Element::single(GenId{"b"}, half()));
  s.set_product(GenId{"a"}, GenId{"b"}, Element::single(GenId{"eps"}, half()));
  s.set_product(GenId{"a"}, GenId{"a"}, Element{});
  s.set_product(GenId{"b"}, GenId{"b"}, Element{});
  return s;
}

namespace detail {
/// Materializes a two-family weight-indexed algebra over a window. The
/// closed-form product is evaluated per generator pair; results landing
/// outside the window become out-of-window markers.
template <class ProductFn>
AlgebraSpec indexed_family(const std::string &name, ProductStyle style,
                           const std::string &even_name, const std::string &odd_name,
                           const WeightWindow &win, ProductFn &&prod) {
  std::vector<Generator> gens;
  for (long long t = win.lo.twice(); t <= win.hi.twice(); ++t) {
    Weight w = Weight::of_twice(t);
    if (t % 2 == 0)
      gens.push_back({GenId{even_name, w}, even_parity, w});
    else
      gens.push_back({GenId{odd_name, w}, odd_parity, w});
  }
  AlgebraSpec s(name, style, gens, win);
  for (const auto &u : s.generators())
    for (const auto &v : s.generators()) {
      if (s.entry_defined(u.id, v.id)) continue;
      // prod returns (coefficient, target id); zero coefficient = zero product
      auto [c, target] = prod(u, v);
      if (c.is_zero()) {
        s.set_product(u.id, v.id, Element{});
      } else if (win.contains(target.index())) {
        s.set_product(u.id, v.id, Element::single(target, c));
      } else {
        s.set_out_of_window(u.id, v.id, target.index());
      }
    }
  return s;
}
} // namespace detail

/// Conformal Lie antialgebra AK(1) on a window: eps_n * eps_m = eps_{n+m},
/// eps_n * a_i = a_{n+i}/2, a_i * a_j = (j-i)/2 eps_{i+j}. The odd-odd
/// sign follows the convention that makes the enveloping relations and
/// the K(1) comparison hold verbatim.
inline AlgebraSpec ak1(const WeightWindow &win) {
  return detail::indexed_family(
      "AK1", ProductStyle::product, "eps", "a", win,
      [](const Generator &u, const Generator &v) -> std::pair<Rational, GenId> {
        const Weight w = u.weight + v.weight;
        if (u.parity.is_even() && v.parity.is_even())
          return {Rational(1), GenId{"eps", w}};
        if (u.parity.is_even())
          return {half(), GenId{"a", w}};
        if (v.parity.is_even())
          return {half(), GenId{"a", w}};
        // a_i * a_j = (j - i)/2 eps_{i+j}, indices doubled in storage
        Rational c = Rational(v.weight.twice() - u.weight.twice(), 4);
        return {c, GenId{"eps", w}};
      });
}

/// osp(1|2) with the standard five-generator presentation.
inline AlgebraSpec osp12() {
  std::vector<Generator> gens{
      {GenId{"E"}, even_parity, Weight::of_int(1)},
      {GenId{"F"}, even_parity, Weight::of_int(-1)},
      {GenId{"H"}, even_parity, Weight::of_int(0)},
      {GenId{"A"}, odd_parity, Weight::of_twice(1)},
      {GenId{"B"}, odd_parity, Weight::of_twice(-1)},
  };
  AlgebraSpec s("osp12", ProductStyle::bracket, gens);
  auto one = [](const char *g, long long n = 1) {
    return Element::single(GenId{g}, Rational(n));
  };
  s.set_product(GenId{"H"}, GenId{"E"}, one("E", 2));
  s.set_product(GenId{"H"}, GenId{"F"}, one("F", -2));
  s.set_product(GenId{"E"}, GenId{"F"}, one("H"));
  s.set_product(GenId{"H"}, GenId{"A"}, one("A"));
  s.set_product(GenId{"E"}, GenId{"A"}, Element{});
  s.set_product(GenId{"F"}, GenId{"A"}, one("B"));
  s.set_product(GenId{"H"}, GenId{"B"}, one("B", -1));
  s.set_product(GenId{"E"}, GenId{"B"}, one("A"));
  s.set_product(GenId{"F"}, GenId{"B"}, Element{});
  s.set_product(GenId{"A"}, GenId{"B"}, one("H", -1));
  s.set_product(GenId{"A"}, GenId{"A"}, one("E", 2));
  s.set_product(GenId{"B"}, GenId{"B"}, one("F", -2));
  s.set_product(GenId{"E"}, GenId{"E"}, Element{});
  s.set_product(GenId{"F"}, GenId{"F"}, Element{});
  s.set_product(GenId{"H"}, GenId{"H"}, Element{});
  return s;
}

/// Conformal (centerless Neveu-Schwarz) Lie superalgebra K(1) on a
/// window: [x_n,x_m] = (m-n)/2 x_{n+m}, [x_n,a_i] = (i-n/2)/2 a_{n+i},
/// [a_i,a_j] = x_{i+j}.
inline AlgebraSpec k1(const WeightWindow &win) {
  return detail::indexed_family(
      "K1", ProductStyle::bracket, "x", "a", win,
      [](const Generator &u, const Generator &v) -> std::pair<Rational, GenId> {
        const Weight w = u.weight + v.weight;
        const long long tu = u.weight.twice(), tv = v.weight.twice();
        if (u.parity.is_even() && v.parity.is_even())
          return {Rational(tv - tu, 4), GenId{"x", w}};
        if (u.parity.is_even())
          return {Rational(2 * tv - tu, 8), GenId{"a", w}};
        if (v.parity.is_even())
          return {Rational(-(2 * tu - tv), 8), GenId{"a", w}};
        return {Rational(1), GenId{"x", w}};
      });
}

/// Looks up a catalog algebra by name. AK1 and K1 require a window.
inline AlgebraSpec get(const std::string &name,
                       const std::optional<WeightWindow> &win = std::nullopt) {
  if (name == "K3") return k3();
  if (name == "osp12") return osp12();
  if (name == "AK1" || name == "K1") {
    if (!win)
      throw std::domain_error("catalog algebra " + name + " needs a weight window");
    return name == "AK1" ? ak1(*win) : k1(*win);
  }
  throw std::domain_error("unknown catalog algebra '" + name + "'");
}

} // namespace catalog
} // namespace laa
