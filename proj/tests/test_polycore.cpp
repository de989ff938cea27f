#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geoprove/errors.hpp"
#include "geoprove/expr_parse.hpp"
#include "geoprove/polynomial.hpp"
#include "geoprove/rational_function.hpp"
#include "test_util.hpp"

using namespace geoprove;
using namespace geoprove::testutil;

TEST_CASE("arithmetic basics") {
  auto t = table({"x", "y"});
  CHECK(P(t, "(x - y) + (x + y)").str() == "2*x");
  Polynomial p = P(t, "x^2 - y + 3");
  CHECK(p + Polynomial::zero(t) == p);

  auto t2 = table({"a", "b", "c", "d"});
  CHECK(P(t2, "(b*c - a*d) + (a*d)").str() == "b*c");

  // variable-table mismatch is an error
  CHECK_THROWS_AS(P(t, "x") + P(table({"x", "z"}), "x"), MathError);
}

TEST_CASE("exact division") {
  auto t = table({"x", "y"});
  Polynomial p = P(t, "x^2 - y^2");
  Polynomial q = P(t, "x - y");
  CHECK(exact_divide(p, q) == P(t, "x + y"));
  CHECK(!try_exact_divide(P(t, "x^2 + y"), q).has_value());
  CHECK_THROWS_AS(exact_divide(p, Polynomial::zero(t)), MathError);

  // round trip through multiplication
  Polynomial a = P(t, "2*x^2 - y + 1");
  Polynomial b = P(t, "x*y + 3");
  CHECK(exact_divide(a * b, b) == a);
}

TEST_CASE("gcd on constructed factorizations") {
  auto t = table({"x", "y"});
  // oracle: both inputs are built by multiplying known factors, and the
  // result is checked to divide both.
  Polynomial f = P(t, "x - y");
  Polynomial g1 = f * P(t, "x + y");
  Polynomial g2 = f * P(t, "x");
  Polynomial g = gcd(g1, g2);
  CHECK(g == canonicalize(f));
  CHECK(try_exact_divide(g1, g).has_value());
  CHECK(try_exact_divide(g2, g).has_value());

  CHECK(gcd(P(t, "x + 1"), P(t, "x + 2")).is_one());
  Polynomial p = P(t, "6*x^2 - 6*y^2");
  CHECK(gcd(p, Polynomial::zero(t)) == P(t, "x^2 - y^2"));
  CHECK(gcd(Polynomial::zero(t), p) == P(t, "x^2 - y^2"));
  CHECK_THROWS_AS(gcd(Polynomial::zero(t), Polynomial::zero(t)), MathError);
}

TEST_CASE("squarefree part") {
  auto t4 = table({"a", "b", "c", "d"});
  Polynomial e = P(t4, "b*c - a*d");
  CHECK(squarefree_part(e * e) == canonicalize(e));
  CHECK(squarefree_part(e * e).str() == "a*d - b*c");

  auto t = table({"x", "y"});
  Polynomial q = P(t, "(x - y) * (x + y)^2");
  CHECK(squarefree_part(q) == P(t, "x^2 - y^2"));
  CHECK(squarefree_part(P(t, "x - y")) == P(t, "x - y"));
  CHECK_THROWS_AS(squarefree_part(Polynomial::zero(t)), MathError);
}

TEST_CASE("m.c.s.") {
  auto t = table({"x", "y"});
  std::vector<Polynomial> s = {P(t, "x - y"), P(t, "(x + y)^2")};
  CHECK(mcs(s) == P(t, "x^2 - y^2"));

  auto t3 = table({"a", "b", "c"});
  std::vector<Polynomial> iso = {P(t3, "a^2 + b^2 - 2*b*c"), P(t3, "a^2 + b^2 - c^2"),
                                 P(t3, "2*b - c")};
  Polynomial m = mcs(iso);
  CHECK(m == canonicalize(iso[0] * iso[1] * iso[2]));
  CHECK(m.total_degree() == 5);

  Polynomial p = P(t, "(x + y)^3");
  std::vector<Polynomial> single = {p};
  CHECK(mcs(single) == squarefree_part(p));
  CHECK_THROWS_AS(mcs(std::vector<Polynomial>{}), MathError);
  CHECK_THROWS_AS(mcs(std::vector<Polynomial>{Polynomial::zero(t)}), MathError);
}

TEST_CASE("total degree") {
  auto t4 = table({"a", "b", "c", "d"});
  CHECK(P(t4, "b*c - a*d").total_degree() == 2);
  auto t3 = table({"a", "b", "c"});
  CHECK(P(t3, "(a^2 + b^2 - 2*b*c) * (a^2 + b^2 - c^2) * (2*b - c)").total_degree() == 5);
  CHECK(Polynomial::zero(t3).total_degree() == kNegInfinity);
  CHECK(kNegInfinity < 0);
}

TEST_CASE("substitute") {
  auto t = table({"a", "b"});
  Polynomial p = P(t, "a - b");
  std::map<std::string, RationalFunction> bind;
  bind.emplace("b", RationalFunction(P(t, "a^2")));
  RationalFunction r = substitute(p, bind);
  CHECK(r.is_polynomial());
  CHECK(r.num() == P(t, "a - a^2"));

  auto t4 = table({"a", "b", "c", "d"});
  std::map<std::string, RationalFunction> zero2;
  zero2.emplace("a", RationalFunction::zero(t4));
  zero2.emplace("c", RationalFunction::zero(t4));
  CHECK(substitute(P(t4, "b*c - a*d"), zero2).is_zero());

  CHECK(substitute(p, {}).num() == p);

  std::map<std::string, RationalFunction> bad;
  bad.emplace("zz", RationalFunction::zero(t));
  CHECK_THROWS_AS(substitute(p, bad), MathError);
}

TEST_CASE("homogeneity") {
  auto t = table({"a", "b", "c"});
  Homogeneity h = homogeneity(P(t, "a^2 - b*c"));
  CHECK(h.homogeneous);
  CHECK(h.degree == 2);
  CHECK_FALSE(homogeneity(P(t, "a^2 - b")).homogeneous);
  Homogeneity hz = homogeneity(Polynomial::zero(t));
  CHECK(hz.homogeneous);
  CHECK(hz.all_degrees);
}

TEST_CASE("homogeneous components") {
  auto t = table({"a", "b", "c"});
  auto parts = homogeneous_components(P(t, "a^2 + b^2 - c + 1"));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].first == 2);
  CHECK(parts[0].second == P(t, "a^2 + b^2"));
  CHECK(parts[1].first == 1);
  CHECK(parts[1].second == P(t, "-c"));
  CHECK(parts[2].first == 0);
  CHECK(parts[2].second == P(t, "1"));

  auto single = homogeneous_components(P(t, "a*b - c^2"));
  CHECK(single.size() == 1);

  // oracle: expand the product, then partition
  Polynomial prod = P(t, "a + 1") * P(t, "a - 1");
  auto pp = homogeneous_components(prod);
  REQUIRE(pp.size() == 2);
  CHECK(pp[0].second == P(t, "a^2"));
  CHECK(pp[1].second == P(t, "-1"));

  Polynomial sum(t);
  for (auto& [d, part] : pp) sum += part;
  CHECK(sum == prod);
}

TEST_CASE("canonicalize") {
  auto t4 = table({"a", "b", "c", "d"});
  CHECK(canonicalize(P(t4, "-2*b*c + 2*a*d")).str() == "a*d - b*c");
  auto t = table({"x"});
  CHECK(canonicalize(P(t, "1/2 * x")).str() == "x");
  Polynomial p = P(t4, "a*d - b*c");
  CHECK(canonicalize(p) == p);  // idempotent on canonical input
  CHECK_THROWS_AS(canonicalize(Polynomial::zero(t)), MathError);
}

TEST_CASE("textual form round trip") {
  auto t = table({"a", "b", "c"});
  const std::string s = "a^2 + b^2 - 2*b*c";
  CHECK(P(t, s).str() == s);
  CHECK(P(t, "2bc") == P(t, "2*b*c"));
  CHECK(P(t, "a(b + c)") == P(t, "a*b + a*c"));
  CHECK(P(t, "-a^2").str() == "-a^2");
  CHECK(Polynomial::zero(t).str() == "0");
  CHECK(P(t, "3/4*a").str() == "3/4*a");
  CHECK_THROWS_AS(P(t, "a + q"), ParseError);
  CHECK_THROWS_AS((void)parse_polynomial("a / b", t), MathError);
}

TEST_CASE("rational functions") {
  auto t = table({"a", "b"});
  RationalFunction f(P(t, "a^2 - b^2"), P(t, "a - b"));
  CHECK(f.is_polynomial());
  CHECK(f.num() == P(t, "a + b"));

  RationalFunction g(P(t, "b"), P(t, "2*a"));
  CHECK(g.den().str() == "a");
  CHECK(g.num().str() == "1/2*b");
  CHECK_THROWS_AS(RationalFunction(P(t, "a"), Polynomial::zero(t)), MathError);

  RationalFunction sum = g + g;
  CHECK(sum.num().str() == "b");
  CHECK(sum.den().str() == "a");

  std::vector<Rational> pt = {rat(2), rat(6)};
  CHECK(g.evaluate(pt) == rat(3, 2));
}

TEST_CASE("randomized algebra properties (smoke)") {
  auto t = table({"x", "y"});
  auto pool = factor_pool(t);
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    Polynomial p = random_product(rng, pool);
    Polynomial q = random_product(rng, pool);
    Polynomial g = gcd(p, q);
    CHECK(try_exact_divide(p, g).has_value());
    CHECK(try_exact_divide(q, g).has_value());

    Polynomial sf = squarefree_part(p);
    CHECK(squarefree_part(sf) == sf);
    CHECK(is_squarefree(sf));
    unsigned k = 1 + iter % 4;
    CHECK(squarefree_part(p.pow(k)) == sf);

    // total degree is additive on products
    CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
  }
}

TEST_CASE("mcs invariants (smoke)") {
  auto t = table({"x", "y"});
  auto pool = factor_pool(t);
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Polynomial> s = {random_product(rng, pool), random_product(rng, pool),
                                 random_product(rng, pool)};
    Polynomial m = mcs(s);
    Polynomial l = lcm(lcm(s[0], s[1]), s[2]);
    CHECK(try_exact_divide(l, m).has_value());
    CHECK(squarefree_part(m) == m);

    std::vector<Polynomial> perm = {s[2], s[0], s[1], s[0]};  // permuted + duplicated
    CHECK(mcs(perm) == m);
    for (const auto& p : s) CHECK(try_exact_divide(m, squarefree_part(p)).has_value());
  }
}

TEST_CASE("homogeneous factor extraction stays homogeneous (smoke)") {
  auto t = table({"x", "y", "z"});
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 40; ++iter) {
    Polynomial h1 = random_homogeneous(rng, t, 2);
    Polynomial h2 = random_homogeneous(rng, t, 3);
    Polynomial h3 = random_homogeneous(rng, t, 2);
    Polynomial f = h1 * h2;
    Polynomial g = gcd(f, h2 * h3);
    CHECK(homogeneity(g).homogeneous);
    CHECK(homogeneity(exact_divide(f, g)).homogeneous);
    CHECK(homogeneity(squarefree_part(f)).homogeneous);
  }
}

TEST_CASE("inhomogeneous times anything nonzero stays inhomogeneous (smoke)") {
  auto t = table({"x", "y"});
  std::mt19937_64 rng(33);
  int checked = 0;
  while (checked < 40) {
    Polynomial p = random_poly(rng, t);
    Polynomial q = random_poly(rng, t);
    if (homogeneity(p).homogeneous) continue;
    ++checked;
    CHECK_FALSE(homogeneity(p * q).homogeneous);
  }
}

TEST_CASE("substitute commutes with evaluation") {
  auto t = table({"x", "y"});
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 40; ++iter) {
    Polynomial p = random_poly(rng, t);
    // binding y := x^2 - 1
    std::map<std::string, RationalFunction> bind;
    Polynomial rhs = P(t, "x^2 - 1");
    bind.emplace("y", RationalFunction(rhs));
    RationalFunction sub = substitute(p, bind);
    Rational x0 = random_rational(rng);
    std::vector<Rational> direct_pt = {x0, evaluate(rhs, {x0, rat(0)})};
    CHECK(sub.evaluate({x0, rat(0)}) == evaluate(p, direct_pt));
  }
}
