#include <catch2/catch_amalgamated.hpp>

#include "laa/algebra.hpp"
#include "laa/catalog.hpp"
#include "laa/axioms.hpp"
#include "laa/parse.hpp"

using namespace laa;

namespace {
const GenId eps{"eps"}, a{"a"}, b{"b"};
Element one(const GenId &g, Rational c = Rational(1)) { return Element::single(g, c); }
GenId ak_eps(long long n) { return GenId{"eps", Weight::of_int(n)}; }
GenId ak_a2(long long t) { return GenId{"a", Weight::of_twice(t)}; }
} // namespace

TEST_CASE("K3 catalog table") {
  auto k3 = catalog::k3();
  CHECK(k3.generators().size() == 3);
  CHECK(k3.parity_of(eps).is_even());
  CHECK(k3.weight_of(a) == Weight::of_twice(1));
  CHECK(k3.weight_of(b) == Weight::of_twice(-1));

  CHECK(k3.product_gen(a, b) == one(eps, half()));
  CHECK(k3.product_gen(b, a) == one(eps, Rational(-1, 2)));
  CHECK(k3.product_gen(a, a).is_zero());
  CHECK(k3.product_gen(b, b).is_zero());
  CHECK(k3.product_gen(eps, eps) == one(eps));
  CHECK(k3.product_gen(eps, a) == one(a, half()));
  CHECK(k3.product_gen(a, eps) == one(a, half()));
}

TEST_CASE("product is bilinear and parity/weight homomorphic") {
  auto k3 = catalog::k3();
  Element u = one(a) + one(b, Rational(3));
  Element up = one(a, Rational(2)) + one(eps, half());
  Element v = one(b, Rational(1, 3)) + one(eps, Rational(-2));

  CHECK(k3.product(u + up, v) == k3.product(u, v) + k3.product(up, v));

  for (const auto &gu : k3.generators())
    for (const auto &gv : k3.generators()) {
      Element p = k3.product_gen(gu.id, gv.id);
      if (p.is_zero()) continue;
      CHECK(*k3.parity(p) == gu.parity + gv.parity);
      CHECK(*k3.weight(p) == gu.weight + gv.weight);
    }
}

TEST_CASE("AK1 catalog over a window") {
  WeightWindow win(Weight::of_int(-3), Weight::of_int(3));
  auto ak1 = catalog::ak1(win);

  // eps_2 * a_{1/2} = 1/2 a_{5/2}
  CHECK(ak1.product_gen(ak_eps(2), ak_a2(1)) == one(ak_a2(5), half()));
  // a_{1/2} * a_{3/2} = 1/2 (j - i) eps_2 with j - i = 1
  CHECK(ak1.product_gen(ak_a2(1), ak_a2(3)) == one(ak_eps(2), half()));
  // diagonal odd products vanish identically
  CHECK(ak1.product_gen(ak_a2(1), ak_a2(1)).is_zero());

  SECTION("closed window: products landing outside raise window_error") {
    CHECK_THROWS_AS(ak1.product_gen(ak_eps(2), ak_eps(2)), window_error);
    CHECK_THROWS_AS(ak1.product_gen(ak_a2(5), ak_eps(3)), window_error);
    try {
      ak1.product_gen(ak_eps(2), ak_eps(2));
    } catch (const window_error &we) {
      CHECK(we.weight == Weight::of_int(4));
    }
  }
  SECTION("unknown generator is a domain error, not a window error") {
    CHECK_THROWS_AS(ak1.product_gen(GenId{"eps", Weight::of_int(9)}, ak_a2(1)),
                    std::domain_error);
  }
}

TEST_CASE("AK1 contains a rescaled copy of K3") {
  // eps -> eps_0, a -> a_{1/2}, b -> -a_{-1/2}; the sign on b makes the
  // map a homomorphism for the section-4 odd-odd convention.
  WeightWindow win(Weight::of_int(-2), Weight::of_int(2));
  auto k3 = catalog::k3();
  auto ak1 = catalog::ak1(win);

  auto embed = [&](const GenId &g) -> Element {
    if (g == eps) return one(ak_eps(0));
    if (g == a) return one(ak_a2(1));
    return one(ak_a2(-1), Rational(-1));
  };
  for (const auto &gu : k3.generators())
    for (const auto &gv : k3.generators()) {
      Element lhs = ak1.product(embed(gu.id), embed(gv.id));
      Element rhs;
      for (const auto &[g, c] : k3.product_gen(gu.id, gv.id).terms()) {
        Element t = embed(g);
        t *= c;
        rhs += t;
      }
      INFO(gu.id.str() << " * " << gv.id.str());
      CHECK(lhs == rhs);
    }
}

TEST_CASE("osp12 and K1 catalog tables") {
  auto osp = catalog::osp12();
  CHECK(osp.product_gen(GenId{"A"}, GenId{"B"}) == one(GenId{"H"}, Rational(-1)));
  CHECK(osp.product_gen(GenId{"B"}, GenId{"A"}) == one(GenId{"H"}, Rational(-1)));
  CHECK(osp.product_gen(GenId{"H"}, GenId{"E"}) == one(GenId{"E"}, Rational(2)));
  CHECK(osp.product_gen(GenId{"E"}, GenId{"H"}) == one(GenId{"E"}, Rational(-2)));
  CHECK(osp.product_gen(GenId{"A"}, GenId{"A"}) == one(GenId{"E"}, Rational(2)));

  WeightWindow win(Weight::of_int(-3), Weight::of_int(3));
  auto k1 = catalog::k1(win);
  GenId x1{"x", Weight::of_int(1)}, xm1{"x", Weight::of_int(-1)};
  // [x_1, x_{-1}] = 1/2 (m - n) x_0 with n=1, m=-1
  CHECK(k1.product_gen(x1, xm1) == one(GenId{"x", Weight::of_int(0)}, Rational(-1)));
  // [x_2, a_{1/2}] = 1/2 (1/2 - 1) a_{5/2} = -1/4 a_{5/2}
  CHECK(k1.product_gen(GenId{"x", Weight::of_int(2)}, GenId{"a", Weight::of_twice(1)}) ==
        one(GenId{"a", Weight::of_twice(5)}, Rational(-1, 4)));
  // [a_i, a_j] = x_{i+j}
  CHECK(k1.product_gen(GenId{"a", Weight::of_twice(1)}, GenId{"a", Weight::of_twice(3)}) ==
        one(GenId{"x", Weight::of_int(2)}));
  CHECK(k1.product_gen(GenId{"a", Weight::of_twice(1)}, GenId{"a", Weight::of_twice(1)}) ==
        one(GenId{"x", Weight::of_int(1)}));
}

TEST_CASE("catalog::get surface") {
  CHECK(catalog::get("K3").name() == "K3");
  CHECK_THROWS_AS(catalog::get("AK1"), std::domain_error);
  CHECK_THROWS_AS(catalog::get("nope"), std::domain_error);
}

TEST_CASE("adjoin_unit") {
  SECTION("zero algebra on one odd generator") {
    AlgebraSpec zero("Z", ProductStyle::product,
                     {{GenId{"c"}, odd_parity, Weight::of_int(0)}});
    zero.set_product(GenId{"c"}, GenId{"c"}, Element{});
    auto res = adjoin_unit(zero);
    CHECK_FALSE(res.already_half_unital);
    CHECK(res.spec.product_gen(res.unit, GenId{"c"}) == one(GenId{"c"}, half()));
    CHECK(check_half_unit(res.spec, res.unit).holds);
  }
  SECTION("K3 gains a second even generator") {
    auto res = adjoin_unit(catalog::k3());
    CHECK(res.already_half_unital); // eps already acts as a half-unit
    CHECK(res.spec.even_generators().size() == 2);
    CHECK(res.spec.product_gen(res.unit, a) == one(a, half()));
    CHECK(res.spec.product_gen(res.unit, eps) == one(eps));
    CHECK(check_half_unit(res.spec, res.unit).holds);
  }
}

TEST_CASE("load_spec round-trips the K3 document") {
  const char *doc = R"(# the tiny Kaplansky algebra
algebra K3
even eps : weight 0
odd  a   : weight 1/2
odd  b   : weight -1/2
eps*eps = eps
eps*a   = 1/2 a
eps*b   = 1/2 b
a*b     = 1/2 eps
)";
  auto spec = load_spec(doc);
  auto k3 = catalog::k3();
  CHECK(spec.generators().size() == 3);
  for (const auto &u : k3.generators())
    for (const auto &v : k3.generators())
      CHECK(spec.product_gen(u.id, v.id) == k3.product_gen(u.id, v.id));
}

TEST_CASE("load_spec rejects supercommutativity violations") {
  const char *doc = R"(algebra bad
even eps : weight 0
odd  a   : weight 1/2
odd  b   : weight -1/2
a*b = eps
b*a = eps
)";
  CHECK_THROWS_AS(load_spec(doc), parse_error);
}

TEST_CASE("load_spec defaults omitted products to zero") {
  const char *doc = R"(algebra tiny
even eps : weight 0
odd  a   : weight 1/2
eps*eps = eps
)";
  auto spec = load_spec(doc);
  CHECK(spec.product_gen(GenId{"a"}, GenId{"a"}).is_zero());
  CHECK(spec.product_gen(GenId{"eps"}, GenId{"a"}).is_zero());
}

TEST_CASE("load_spec reports weight inhomogeneity with position") {
  const char *doc = R"(algebra bad
even eps : weight 1
odd  a   : weight 1/2
odd  b   : weight -1/2
a*b = eps
)";
  try {
    load_spec(doc);
    FAIL("expected parse_error");
  } catch (const parse_error &e) {
    CHECK(e.line == 5);
  }
}
