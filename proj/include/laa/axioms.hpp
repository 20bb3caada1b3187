#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "laa/algebra.hpp"

namespace laa {

enum class CheckStatus { pass, fail };

/// A failing tuple together with both evaluated sides.
struct Witness {
  std::vector<GenId> tuple;
  Element lhs;
  Element rhs;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i)
      s += (i ? "," : "") + tuple[i].str();
    s += "): lhs = " + element_str(lhs) + ", rhs = " + element_str(rhs);
    return s;
  }
};

struct AxiomCheck {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  long checked = 0;
  long skipped = 0; // tuples dropped by the closed-window contract
  std::optional<Witness> witness;

  bool passed() const { return status == CheckStatus::pass; }
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    for (const auto &c : checks)
      if (!c.passed()) return false;
    return true;
  }
  const AxiomCheck *find(const std::string &id) const {
    for (const auto &c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
  long total_skipped() const {
    long n = 0;
    for (const auto &c : checks) n += c.skipped;
    return n;
  }

  std::string str() const {
    std::ostringstream os;
    for (const auto &c : checks) {
      os << c.id << ": " << (c.passed() ? "pass" : "FAIL") << " (" << c.checked
         << " checked";
      if (c.skipped) os << ", " << c.skipped << " skipped";
      os << ")";
      if (c.witness) os << "  witness " << c.witness->str();
      os << "\n";
    }
    return os.str();
  }
};

namespace axiom_detail {

/// Evaluates one identity instance on a tuple; window errors mark the
/// tuple inadmissible. The first failure in enumeration order becomes
/// the witness; scanning continues so counts cover the full range.
class Scan {
public:
  explicit Scan(std::string id) { check_.id = std::move(id); }

  void tuple(const std::vector<GenId> &t,
             const std::function<std::pair<Element, Element>()> &eval) {
    try {
      auto [lhs, rhs] = eval();
      ++check_.checked;
      if (lhs != rhs && check_.status == CheckStatus::pass) {
        check_.status = CheckStatus::fail;
        check_.witness = Witness{t, lhs, rhs};
      }
    } catch (const window_error &) {
      ++check_.skipped;
    }
  }

  AxiomCheck done() { return std::move(check_); }

private:
  AxiomCheck check_;
};

} // namespace axiom_detail

/// a*b = (-1)^{p(a)p(b)} b*a on all ordered generator pairs.
inline AxiomReport check_supercommutativity(const AlgebraSpec &spec) {
  axiom_detail::Scan scan("SUPER");
  for (const auto &u : spec.generators())
    for (const auto &v : spec.generators())
      scan.tuple({u.id, v.id}, [&] {
        Element lhs = spec.product_gen(u.id, v.id);
        Element rhs = spec.product_gen(v.id, u.id);
        rhs *= Rational(koszul_sign(u.parity, v.parity));
        return std::make_pair(lhs, rhs);
      });
  return AxiomReport{{scan.done()}};
}

/// LA0-LA3 plus the weak variant LA1'. Axioms are reported separately;
/// each identity is evaluated on every admissible in-window tuple.
inline AxiomReport check_lie_antialgebra(const AlgebraSpec &spec) {
  if (!spec.is_product_style())
    throw std::domain_error("antialgebra axioms need a product-style table");
  auto evens = spec.even_generators();
  auto odds = spec.odd_generators();
  auto prodg = [&](const GenId &u, const GenId &v) { return spec.product_gen(u, v); };
  auto prod = [&](const Element &u, const Element &v) { return spec.product(u, v); };

  AxiomReport report;

  {
    axiom_detail::Scan s("LA0");
    for (const auto &x1 : evens)
      for (const auto &x2 : evens)
        for (const auto &x3 : evens)
          s.tuple({x1.id, x2.id, x3.id}, [&] {
            Element lhs = prod(Element::single(x1.id), prodg(x2.id, x3.id));
            Element rhs = prod(prodg(x1.id, x2.id), Element::single(x3.id));
            return std::make_pair(lhs, rhs);
          });
    report.checks.push_back(s.done());
  }
  {
    axiom_detail::Scan s("LA1");
    for (const auto &x1 : evens)
      for (const auto &x2 : evens)
        for (const auto &y : odds)
          s.tuple({x1.id, x2.id, y.id}, [&] {
            Element lhs = prod(Element::single(x1.id), prodg(x2.id, y.id));
            Element rhs = prod(prodg(x1.id, x2.id), Element::single(y.id));
            rhs *= half();
            return std::make_pair(lhs, rhs);
          });
    report.checks.push_back(s.done());
  }
  {
    axiom_detail::Scan s("LA1'");
    for (const auto &x1 : evens)
      for (const auto &x2 : evens)
        for (const auto &y : odds)
          s.tuple({x1.id, x2.id, y.id}, [&] {
            Element lhs = prod(Element::single(x1.id), prodg(x2.id, y.id)) +
                          prod(Element::single(x2.id), prodg(x1.id, y.id));
            Element rhs = prod(prodg(x1.id, x2.id), Element::single(y.id));
            return std::make_pair(lhs, rhs);
          });
    report.checks.push_back(s.done());
  }
  {
    axiom_detail::Scan s("LA2");
    for (const auto &x : evens)
      for (const auto &y1 : odds)
        for (const auto &y2 : odds)
          s.tuple({x.id, y1.id, y2.id}, [&] {
            Element lhs = prod(Element::single(x.id), prodg(y1.id, y2.id));
            Element rhs = prod(prodg(x.id, y1.id), Element::single(y2.id)) +
                          prod(Element::single(y1.id), prodg(x.id, y2.id));
            return std::make_pair(lhs, rhs);
          });
    report.checks.push_back(s.done());
  }
  {
    axiom_detail::Scan s("LA3");
    for (const auto &y1 : odds)
      for (const auto &y2 : odds)
        for (const auto &y3 : odds)
          s.tuple({y1.id, y2.id, y3.id}, [&] {
            Element lhs = prod(Element::single(y1.id), prodg(y2.id, y3.id)) +
                          prod(Element::single(y2.id), prodg(y3.id, y1.id)) +
                          prod(Element::single(y3.id), prodg(y1.id, y2.id));
            return std::make_pair(lhs, Element{});
          });
    report.checks.push_back(s.done());
  }
  return report;
}

/// SJ1 (supercommutativity) and the quartic super Jordan identity SJ2
/// on all homogeneous generator quadruples.
inline AxiomReport check_jordan_superalgebra(const AlgebraSpec &spec) {
  if (!spec.is_product_style())
    throw std::domain_error("Jordan axioms need a product-style table");

  AxiomReport report = check_supercommutativity(spec);
  report.checks.front().id = "SJ1";

  auto prodg = [&](const GenId &u, const GenId &v) { return spec.product_gen(u, v); };
  auto prod = [&](const Element &u, const Element &v) { return spec.product(u, v); };
  auto sgn = [](int exponent) { return Rational(exponent % 2 ? -1 : 1); };

  axiom_detail::Scan s("SJ2");
  const auto &gens = spec.generators();
  for (const auto &a : gens)
    for (const auto &b : gens)
      for (const auto &c : gens)
        for (const auto &d : gens)
          s.tuple({a.id, b.id, c.id, d.id}, [&] {
            const int pa = a.parity.value(), pb = b.parity.value(),
                      pc = c.parity.value(), pd = d.parity.value();
            Element lhs = prod(prodg(a.id, b.id), prodg(c.id, d.id));
            {
              Element t = prod(prodg(a.id, c.id), prodg(b.id, d.id));
              t *= sgn(pb * pc);
              lhs += t;
            }
            {
              Element t = prod(prodg(a.id, d.id), prodg(b.id, c.id));
              t *= sgn((pb + pc) * pd);
              lhs += t;
            }
            Element rhs = prod(prod(prodg(a.id, b.id), Element::single(c.id)),
                               Element::single(d.id));
            {
              Element t = prod(prod(prodg(a.id, d.id), Element::single(c.id)),
                               Element::single(b.id));
              t *= sgn((pb + pc) * pd + pb * pc);
              rhs += t;
            }
            {
              Element t = prod(prod(prodg(b.id, d.id), Element::single(c.id)),
                               Element::single(a.id));
              t *= sgn((pb + pc + pd) * pa + pc * pd);
              rhs += t;
            }
            return std::make_pair(lhs, rhs);
          });
  report.checks.push_back(s.done());
  return report;
}

/// Graded antisymmetry and the generalized Jacobi identity.
inline AxiomReport check_lie_superalgebra(const AlgebraSpec &spec) {
  if (spec.is_product_style())
    throw std::domain_error("Lie superalgebra axioms need a bracket-style table");
  auto bkt = [&](const GenId &u, const GenId &v) { return spec.product_gen(u, v); };
  auto bkte = [&](const Element &u, const Element &v) { return spec.product(u, v); };
  auto sgn = [](int exponent) { return Rational(exponent % 2 ? -1 : 1); };

  AxiomReport report;
  const auto &gens = spec.generators();
  {
    axiom_detail::Scan s("ANTISYM");
    for (const auto &x : gens)
      for (const auto &y : gens)
        s.tuple({x.id, y.id}, [&] {
          Element lhs = bkt(x.id, y.id);
          Element rhs = bkt(y.id, x.id);
          rhs *= -sgn(x.parity.value() * y.parity.value());
          return std::make_pair(lhs, rhs);
        });
    report.checks.push_back(s.done());
  }
  {
    axiom_detail::Scan s("JACOBI");
    for (const auto &x : gens)
      for (const auto &y : gens)
        for (const auto &z : gens)
          s.tuple({x.id, y.id, z.id}, [&] {
            const int px = x.parity.value(), py = y.parity.value(),
                      pz = z.parity.value();
            Element lhs;
            {
              Element t = bkte(bkt(x.id, y.id), Element::single(z.id));
              t *= sgn(px * pz);
              lhs += t;
            }
            {
              Element t = bkte(bkt(y.id, z.id), Element::single(x.id));
              t *= sgn(py * px);
              lhs += t;
            }
            {
              Element t = bkte(bkt(z.id, x.id), Element::single(y.id));
              t *= sgn(pz * py);
              lhs += t;
            }
            return std::make_pair(lhs, Element{});
          });
    report.checks.push_back(s.done());
  }
  return report;
}

struct HalfUnitResult {
  bool holds = true;
  long checked = 0;
  std::optional<Witness> witness;
};

/// eps*x = x on evens and eps*a = a/2 on odds, over every in-window
/// generator. The candidate must be even.
inline HalfUnitResult check_half_unit(const AlgebraSpec &spec, const GenId &e) {
  if (!spec.is_product_style())
    throw std::domain_error("half-unit check needs a product-style table");
  if (!spec.parity_of(e).is_even())
    throw std::domain_error("half-unit candidate " + e.str() + " is odd");
  HalfUnitResult res;
  for (const auto &g : spec.generators()) {
    if (!spec.product_in_window(e, g.id)) continue;
    Element lhs = spec.product_gen(e, g.id);
    Element rhs = Element::single(g.id, g.parity.is_even() ? Rational(1) : half());
    ++res.checked;
    if (lhs != rhs && res.holds) {
      res.holds = false;
      res.witness = Witness{{e, g.id}, lhs, rhs};
    }
  }
  return res;
}

} // namespace laa
