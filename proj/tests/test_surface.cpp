#include "doctest.h"

#include <random>

#include "covertower/automorphism.hpp"
#include "covertower/linalg.hpp"
#include "covertower/surface.hpp"

using namespace covertower;

namespace {

GroupWord random_word(std::mt19937_64& rng, int ngen, int len) {
  std::uniform_int_distribution<int> pick(1, ngen);
  std::bernoulli_distribution inv(0.5);
  std::vector<Letter> out;
  for (int i = 0; i < len; ++i) out.push_back(inv(rng) ? -pick(rng) : pick(rng));
  return GroupWord(out);
}

HomologyClass random_class(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::int64_t> pick(-5, 5);
  std::vector<std::int64_t> v;
  for (int i = 0; i < n; ++i) v.push_back(pick(rng));
  return HomologyClass(v);
}

}  // namespace

TEST_CASE("surface basics") {
  CHECK_THROWS_AS(Surface(1), Error);
  Surface s(2);
  CHECK(s.euler_characteristic() == -2);
  CHECK(s.homology_rank() == 4);
  CHECK(Surface(3).num_generators() == 6);
}

TEST_CASE("free reduction") {
  Surface s(2);
  CHECK(reduce_word(s, GroupWord{1, -1}).empty());
  CHECK(reduce_word(s, GroupWord{1, 2, -2, 3}) == GroupWord{1, 3});
  CHECK(reduce_word(s, GroupWord{}).empty());
  CHECK_THROWS_AS(reduce_word(s, GroupWord{5}), Error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto w = random_word(rng, 4, 12);
    auto r = reduce_word(s, w);
    CHECK(reduce_word(s, r) == r);
    CHECK(reduce_word(s, w * w.inverse()).empty());
    CHECK(abelianize(s, r) == abelianize(s, w));
  }
}

TEST_CASE("relator") {
  Surface s(2);
  CHECK(surface_relator(s) == GroupWord{1, 2, -1, -2, 3, 4, -3, -4});
  CHECK(abelianize(s, surface_relator(s)).is_zero());
  CHECK(surface_relator(Surface(3)).size() == 12);
}

TEST_CASE("abelianization is additive") {
  Surface s(3);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto w1 = random_word(rng, 6, 9);
    auto w2 = random_word(rng, 6, 9);
    CHECK(abelianize(s, w1 * w2) == abelianize(s, w1) + abelianize(s, w2));
  }
}

TEST_CASE("intersection form") {
  Surface s(2);
  auto a1 = HomologyClass::basis(s, 0);
  auto b1 = HomologyClass::basis(s, 1);
  auto a2 = HomologyClass::basis(s, 2);
  CHECK(intersection_form(a1, b1) == 1);
  CHECK(intersection_form(b1, a1) == -1);
  CHECK(intersection_form(a1, a2) == 0);
  CHECK_THROWS_AS(intersection_form(a1, HomologyClass({1, 0})), Error);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto u = random_class(rng, 4), v = random_class(rng, 4), w = random_class(rng, 4);
    const std::int64_t m = static_cast<std::int64_t>(rng() % 7) - 3;
    const std::int64_t n = static_cast<std::int64_t>(rng() % 7) - 3;
    CHECK(intersection_form(u, u) == 0);
    CHECK(intersection_form(u, v) == -intersection_form(v, u));
    CHECK(intersection_form(m * u + n * v, w) ==
          m * intersection_form(u, w) + n * intersection_form(v, w));
  }
}

TEST_CASE("symplectic gram is unimodular") {
  for (int g = 2; g <= 4; ++g) {
    auto gram = symplectic_gram(Surface(g));
    CHECK(determinant(gram) == 1);
    for (std::size_t i = 0; i < gram.size(); ++i) {
      for (std::size_t j = 0; j < gram.size(); ++j) {
        const bool block = i / 2 == j / 2 && i != j;
        const std::int64_t expect = block ? (i < j ? 1 : -1) : 0;
        CHECK(gram[i][j] == expect);
      }
    }
  }
}

TEST_CASE("shipped automorphisms") {
  Surface s(2);
  auto auts = genus2_automorphisms();
  REQUIRE(auts.size() == 7);
  for (const auto& a : auts) {
    INFO(a.name);
    CHECK_FALSE(check_automorphism(a).has_value());
    for (int k = 1; k <= 4; ++k) {
      CHECK(a.apply_inverse(a.apply(GroupWord{k})) == GroupWord{k});
      CHECK(a.apply(a.apply_inverse(GroupWord{k})) == GroupWord{k});
    }
    // Symplectic up to the orientation sign.
    const int sign = orientation_sign(a);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        auto u = HomologyClass::basis(s, i), v = HomologyClass::basis(s, j);
        CHECK(intersection_form(a.act_on_homology(u), a.act_on_homology(v)) ==
              sign * intersection_form(u, v));
      }
    }
  }
  CHECK(orientation_sign(auts.back()) == -1);
}

TEST_CASE("handle rotation acts as a quarter turn on homology") {
  Surface s(2);
  auto r = handle_rotation(s, 1);
  CHECK_FALSE(check_automorphism(r).has_value());
  CHECK(r.act_on_homology(HomologyClass::basis(s, 0)) == HomologyClass::basis(s, 1));
  CHECK(r.act_on_homology(HomologyClass::basis(s, 1)) == -1 * HomologyClass::basis(s, 0));
}

TEST_CASE("smith form") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto snf = smith_form(m, 3);
  REQUIRE(snf.diagonal.size() == 3);
  CHECK(snf.diagonal[0] == 2);
  CHECK(snf.diagonal[1] == 6);
  CHECK(snf.diagonal[2] == 12);
  // Q Q^-1 = I
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < 3; ++k) acc += snf.column_transform[i][k] * snf.column_inverse[k][j];
      CHECK(acc == (i == j ? 1 : 0));
    }
  }
  CHECK(determinant(m) == -144);
}
