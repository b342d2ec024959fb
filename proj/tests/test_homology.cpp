#include "doctest.h"

#include "covertower/enumerate.hpp"
#include "covertower/homology.hpp"
#include "oracles.hpp"

using namespace covertower;

namespace {

const Surface S2(2);

CoverSpec single_swap(int generator) {
  std::vector<Perm> perms(4, Perm{0, 1});
  perms[static_cast<std::size_t>(generator - 1)] = Perm{1, 0};
  return CoverSpec(S2, perms);
}

std::vector<std::vector<std::int64_t>> gram(const std::vector<CoverCycle>& basis) {
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& x : basis) {
    std::vector<std::int64_t> row;
    for (const auto& y : basis) row.push_back(pairing_on_cover(x, y));
    m.push_back(row);
  }
  return m;
}

std::vector<CoverSpec> covers_upto3() { return enumerate_covers_up_to(S2, 3); }

}  // namespace

TEST_CASE("complex invariants") {
  for (const auto& c : covers_upto3()) {
    CoverComplex k(c);
    CHECK(k.euler_characteristic() == c.degree() * (2 - 2 * 2));
    CHECK(k.genus_from_euler() == c.genus());
    for (int f = 0; f < k.num_faces(); ++f) {
      auto face = k.face_boundary(f);
      CHECK(face.size() == 8);
      std::vector<std::int64_t> chain(static_cast<std::size_t>(k.num_edges()), 0);
      for (auto [e, s] : face) chain[static_cast<std::size_t>(e)] += s;
      CHECK_NOTHROW(CoverCycle(make_complex(c), chain));
    }
    // The rotation uses every dart once.
    CHECK(k.rotation().size() == 8);
  }
}

TEST_CASE("trivial cover: basis and pairing agree with the symplectic form") {
  auto k = make_complex(CoverSpec::trivial(S2));
  auto basis = homology_basis(k);
  CHECK(basis.size() == 4);
  CHECK(torsion_coefficients(k).empty());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      auto u = HomologyClass::basis(S2, i), v = HomologyClass::basis(S2, j);
      CHECK(pairing_on_cover(transfer(u, k), transfer(v, k)) == intersection_form(u, v));
    }
  }
  auto a1 = transfer(HomologyClass::basis(S2, 0), k);
  auto b1 = transfer(HomologyClass::basis(S2, 1), k);
  CHECK(pairing_on_cover(a1, b1) == 1);
}

TEST_CASE("homology rank, torsion and unimodularity on every cover of degree <= 3") {
  for (const auto& c : covers_upto3()) {
    auto k = make_complex(c);
    auto basis = homology_basis(k);
    CHECK(static_cast<int>(basis.size()) == 2 * c.genus());
    CHECK(torsion_coefficients(k).empty());
    auto g = gram(basis);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(g[i][i] == 0);
      for (std::size_t j = 0; j < g.size(); ++j) CHECK(g[i][j] == -g[j][i]);
    }
    const auto det = determinant(g);
    CHECK((det == 1 || det == -1));
    // Coordinates of the basis are the unit vectors.
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto coords = homology_coordinates(basis[i]);
      for (std::size_t j = 0; j < coords.size(); ++j) CHECK(coords[j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("transfer laws on every cover of degree <= 3") {
  for (const auto& c : covers_upto3()) {
    auto k = make_complex(c);
    const int d = c.degree();
    for (int i = 0; i < 4; ++i) {
      auto u = HomologyClass::basis(S2, i);
      CHECK(pushforward(transfer(u, k)) == d * u);
      for (int j = 0; j < 4; ++j) {
        auto v = HomologyClass::basis(S2, j);
        CHECK(pairing_on_cover(transfer(u, k), transfer(v, k)) == d * intersection_form(u, v));
      }
    }
  }
}

TEST_CASE("two-sheet a1 cover examples") {
  auto k = make_complex(single_swap(1));
  auto a1 = HomologyClass::basis(S2, 0);
  auto b1 = HomologyClass::basis(S2, 1);
  CHECK(pairing_on_cover(transfer(a1, k), transfer(b1, k)) == 2);
  CHECK(transfer(HomologyClass::zero(S2), k) == CoverCycle::zero(k));
  auto t = transfer(a1, k);
  CHECK(t.coeff(1, 0) == 1);
  CHECK(t.coeff(1, 1) == 1);
  CHECK(t.coeff(2, 0) == 0);
  // One lift of the a1 loop closes after two sheets.
  CoverCycle lift(k, k->path_chain(GroupWord{1, 1}));
  CHECK(pushforward(lift) == 2 * a1);
  // A face boundary pushes forward to zero and is a boundary.
  CoverCycle face(k, k->path_chain(surface_relator(S2), 1));
  CHECK(pushforward(face).is_zero());
  CHECK(is_boundary(face));
  CHECK_FALSE(is_boundary(lift));
  CHECK(pairing_on_cover(lift, lift) == 0);
}

TEST_CASE("pairing is a homology invariant") {
  for (const auto& c : enumerate_covers(S2, 2)) {
    auto k = make_complex(c);
    auto basis = homology_basis(k);
    for (int f = 0; f < k->num_faces(); ++f) {
      CoverCycle face(k, k->path_chain(surface_relator(S2), f));
      for (const auto& b : basis) {
        CHECK(pairing_on_cover(face, b) == 0);
        CHECK(pairing_on_cover(b, face) == 0);
        CHECK(homologous(b + face, b));
      }
    }
  }
}

TEST_CASE("errors") {
  auto k1 = make_complex(single_swap(1));
  auto k2 = make_complex(single_swap(2));
  std::vector<std::int64_t> open(static_cast<std::size_t>(k1->num_edges()), 0);
  open[0] = 1;
  // Edge (a1, sheet 0) runs from sheet 0 to sheet 1; not closed.
  CHECK_THROWS_AS(CoverCycle(k1, open), Error);
  CHECK_THROWS_AS(pairing_on_cover(CoverCycle::zero(k1), CoverCycle::zero(k2)), Error);
}

TEST_CASE("lift_cycle is the full preimage") {
  auto fine = single_swap(1);
  auto arrow = arrow_to_base(fine);
  auto base = make_complex(CoverSpec::trivial(S2));
  auto kf = make_complex(fine);
  for (int i = 0; i < 4; ++i) {
    auto u = HomologyClass::basis(S2, i);
    CHECK(lift_cycle(transfer(u, base), arrow, kf) == transfer(u, kf));
  }
}
