#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sltensor/glmodule.hpp"

#include <algorithm>

using namespace sltensor;

namespace {

// Weyl dimension formula evaluated independently of the library.
Integer weyl_dim_oracle(const std::vector<int>& lam) {
  const int n = static_cast<int>(lam.size());
  Rational num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lam[i] - lam[j] + j - i;
      den *= j - i;
    }
  return boost::multiprecision::numerator(num / den);
}

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("one-dimensional modules") {
  auto v = GlModule::one_dim(2, Rational(1, 3));
  CHECK(v.dim() == 1);
  CHECK(v.E(0, 0)(0, 0) == Rational(1, 3));
  CHECK(v.E(1, 1)(0, 0) == Rational(1, 3));
  CHECK(v.E(0, 1)(0, 0) == 0);
  CHECK(v.E(1, 0)(0, 0) == 0);
  for (auto a : {Rational(0), Rational(-2), Rational(4, 3)}) CHECK(verify_gl_relations(GlModule::one_dim(3, a)).ok);
}

TEST_CASE("exterior powers") {
  auto v = GlModule::exterior(2, 1);
  CHECK(v.dim() == 2);
  CHECK(v.E(0, 1)(0, 1) == 1);  // E12 e2 = e1
  auto top = GlModule::exterior(2, 2);
  CHECK(top.dim() == 1);
  CHECK(top.E(0, 0)(0, 0) == 1);
  CHECK(top.E(1, 1)(0, 0) == 1);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      auto w = GlModule::exterior(n, k);
      CHECK(w.dim() == binomial(n, k));
      CHECK(verify_gl_relations(w).ok);
    }
  CHECK_THROWS_AS(GlModule::exterior(2, 3), InvalidInput);
  CHECK(GlModule::exterior_algebra(3).dim() == 8);
  CHECK(verify_gl_relations(GlModule::exterior_algebra(3)).ok);
}

TEST_CASE("highest weight modules") {
  auto nat = GlModule::highest_weight({1, 0});
  CHECK(nat.dim() == 2);
  CHECK(GlModule::highest_weight({2, 0}).dim() == 3);
  CHECK(GlModule::highest_weight({1, 1, 0}).dim() == 3);
  CHECK_THROWS_AS(GlModule::highest_weight({Rational(1, 2), 0}), InvalidInput);
  CHECK_THROWS_AS(GlModule::highest_weight({0, 1}), InvalidInput);
}

TEST_CASE("property: highest weight dimensions match the Weyl formula") {
  std::vector<std::vector<int>> grid = {{2, 1}, {3, 1}, {3, 0}, {2, 1, 0}, {2, 2, 0}, {3, 1, 0}, {1, 1, 1}, {4, 2}};
  for (const auto& lam : grid) {
    std::vector<Rational> q(lam.begin(), lam.end());
    auto v = GlModule::highest_weight(q);
    CHECK(v.dim() == weyl_dim_oracle(lam));
    CHECK(weyl_dimension(q) == Rational(weyl_dim_oracle(lam)));
    CHECK(verify_gl_relations(v).ok);
    // The given weight is the unique lexicographic maximum.
    auto w = v.weights();
    CHECK(*std::max_element(w.begin(), w.end()) == q);
    CHECK(std::count(w.begin(), w.end(), q) == 1);
  }
  auto shifted = GlModule::highest_weight({Rational(5, 2), Rational(3, 2)});
  CHECK(shifted.dim() == 2);
  CHECK(verify_gl_relations(shifted).ok);
}

TEST_CASE("tensor products and trace shifts") {
  auto v = GlModule::tensor(GlModule::exterior(3, 1), GlModule::exterior(3, 2));
  CHECK(v.dim() == 9);
  CHECK(verify_gl_relations(v).ok);
  auto w = GlModule::exterior(2, 1).shifted_by_trace(Rational(1, 2));
  CHECK(verify_gl_relations(w).ok);
  CHECK(w.weight(0) == std::vector<Rational>{Rational(3, 2), Rational(1, 2)});
  auto parsed = parse_module_spec("tensor(wedge:1,va:1/2)", 2);
  CHECK(parsed.dim() == 2);
  CHECK(parsed.weights() == w.weights());
}

TEST_CASE("corrupted matrices are rejected with a witness") {
  auto v = GlModule::exterior(3, 1);
  v.mutable_E(0, 1)(0, 1) = 2;
  auto verdict = verify_gl_relations(v);
  CHECK(!verdict.ok);
  REQUIRE(!verdict.bracket_failures.empty());
  auto q = verdict.bracket_failures.front();
  CHECK(((q[0] == 1 && q[1] == 2) || (q[2] == 1 && q[3] == 2)));

  std::vector<RatMatrix> action;
  auto good = GlModule::exterior(2, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) action.push_back(good.E(i, j));
  action[1](0, 1) = 3;
  CHECK_THROWS_AS(GlModule::from_matrices(2, action, good.weights()), InvalidInput);
  action[1](0, 1) = 1;
  CHECK(GlModule::from_matrices(2, action, good.weights()).dim() == 2);
}

TEST_CASE("module specs") {
  CHECK(parse_module_spec("va:1/3", 2).dim() == 1);
  CHECK(parse_module_spec("wedge:*", 2).dim() == 4);
  CHECK(parse_module_spec("hw:2,1", 2).dim() == 2);
  CHECK_THROWS_AS(parse_module_spec("hw:2", 2), InvalidInput);
  CHECK_THROWS_AS(parse_module_spec("bogus:1", 2), InvalidInput);
  CHECK(is_dominant({3, 1, 1}));
  CHECK(!is_dominant({Rational(5, 2), 1}));
}
