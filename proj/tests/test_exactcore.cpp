#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sltensor/linalg.hpp"
#include "sltensor/poly.hpp"
#include "sltensor/subset.hpp"

#include <random>

using namespace sltensor;

namespace {

MultiPoly t(int n, int i) { return MultiPoly::variable(n, i); }
MultiPoly c(int n, const Rational& q) { return MultiPoly::constant(n, q); }

MultiPoly random_poly(std::mt19937_64& rng, int n, bool laurent = false) {
  std::uniform_int_distribution<int> e(laurent ? -2 : 0, 3), q(-5, 5), terms(0, 4);
  MultiPoly p(n, laurent);
  for (int k = terms(rng); k > 0; --k) {
    MultiIndex m(n);
    for (auto& x : m) x = e(rng);
    p.add_term(m, Rational(q(rng), 1 + (q(rng) + 5) % 3));
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK(floor_of(Rational(-1, 2)) == -1);
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(falling(Rational(5), 3) == 60);
}

TEST_CASE("poly arithmetic") {
  const int n = 2;
  CHECK((t(n, 0) + t(n, 1)) * (t(n, 0) - t(n, 1)) == t(n, 0) * t(n, 0) - t(n, 1) * t(n, 1));
  MultiPoly p = t(n, 0) * t(n, 0) * t(n, 1) - c(n, 3);
  CHECK(p + MultiPoly(n) == p);
  MultiPoly lhs = (Rational(1, 2) * t(1, 0)) * (Rational(2, 3) * (t(1, 0) * t(1, 0)));
  CHECK(lhs == MultiPoly::monomial({3}, Rational(1, 3)));
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 3);
  CHECK(MultiPoly(n).degree() == -1);
}

TEST_CASE("poly text form") {
  MultiPoly p = MultiPoly::monomial({2, 1, 0}, 1) + MultiPoly::monomial({0, 0, 1}, Rational(-1, 2));
  CHECK(p.str() == "-1/2*t3 + t1^2*t2");  // exponent tuples in lex order
  CHECK(MultiPoly(2).str() == "0");
}

TEST_CASE("poly diff") {
  CHECK(MultiPoly::monomial({2, 1}).diff(0) == MultiPoly::monomial({1, 1}, 2));
  CHECK(MultiPoly::monomial({-2}, 1, true).diff(0) == MultiPoly::monomial({-3}, -2, true));
  CHECK(MultiPoly::monomial({3, 0}).diff(1).is_zero());
}

TEST_CASE("poly eval") {
  MultiPoly p = MultiPoly::monomial({2, 0}) + MultiPoly::monomial({0, 1});
  CHECK(p.eval({2, 3}) == 7);
  CHECK(c(2, Rational(5, 7)).eval({Rational(-4), Rational(1, 9)}) == Rational(5, 7));
  CHECK(MultiPoly::monomial({-1}, 1, true).eval({Rational(1, 2)}) == 2);
  CHECK_THROWS_AS(MultiPoly::monomial({-1}, 1, true).eval({Rational(0)}), InvalidInput);
}

TEST_CASE("laurent flag is enforced") {
  MultiPoly p(1);
  CHECK_THROWS_AS(p.add_term({-1}, 1), InvalidInput);
  CHECK_THROWS_AS(MultiPoly(1) + MultiPoly(2), InvalidInput);
}

TEST_CASE("property: ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const bool laurent = trial % 2;
    auto p = random_poly(rng, 2, laurent), q = random_poly(rng, 2, laurent), r = random_poly(rng, 2, laurent);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q).diff(0) == p.diff(0) * q + p * q.diff(0));
    std::vector<Rational> pt{Rational(2, 3), Rational(-5, 2)};
    CHECK((p * q + r).eval(pt) == p.eval(pt) * q.eval(pt) + r.eval(pt));
    MultiPoly pq = p * q;
    for (const auto& [m, coef] : pq.terms()) CHECK(coef != 0);
  }
}

TEST_CASE("shifted polynomial") {
  MultiPoly p = MultiPoly::monomial({2, 0}) + MultiPoly::monomial({0, 1});
  std::vector<Rational> pt{Rational(3), Rational(-1, 3)};
  CHECK(p.shifted({1, -2}).eval(pt) == p.eval({pt[0] - 1, pt[1] + 2}));
}

TEST_CASE("subsets") {
  Subset s = Subset::parse("1,3", 3);
  CHECK(s.contains(0));
  CHECK(!s.contains(1));
  CHECK(s.str() == "{1,3}");
  CHECK(Subset::parse("all", 2).full());
  CHECK(Subset::parse("", 2).empty());
  CHECK(s.complement().str() == "{2}");
  CHECK_THROWS_AS(Subset::parse("4", 3), InvalidInput);
  CHECK(all_subsets(3).size() == 8);
}

TEST_CASE("exact linear algebra") {
  MatrixX<Rational> a(2, 3);
  a << 1, 2, 3, 2, 4, 6;
  CHECK(rank(a) == 1);
  auto k = kernel(a);
  CHECK(k.cols() == 2);
  CHECK(is_zero(a * k));
  MatrixX<Rational> b(2, 2);
  b << Rational(1, 3), 1, 0, 2;
  VectorX<Rational> rhs(2);
  rhs << 1, 4;
  auto x = solve(b, rhs);
  REQUIRE(x);
  CHECK((*x)(1) == 2);
  CHECK((*x)(0) == -3);
}
