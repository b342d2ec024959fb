#include "doctest.h"

#include <random>

#include "covertower/enumerate.hpp"
#include "covertower/marking.hpp"
#include "covertower/traintrack.hpp"

using namespace covertower;

namespace {

const Surface S2(2);

CoverSpec single_swap(int generator) {
  std::vector<Perm> perms(4, Perm{0, 1});
  perms[static_cast<std::size_t>(generator - 1)] = Perm{1, 0};
  return CoverSpec(S2, perms);
}

// Extreme rays of {w >= 0, S w = 0} are the solutions with minimal support;
// a support carries a ray iff S restricted to it has a one-dimensional
// kernel spanned by a strictly positive vector.
std::vector<std::vector<BigInt>> minimal_support_rays(const TrainTrack& t) {
  const auto s = t.switch_matrix();
  const int n = t.num_branches();
  std::vector<std::pair<unsigned, std::vector<BigInt>>> found;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> cols;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) cols.push_back(i);
    }
    std::vector<std::vector<Rational>> m;
    for (const auto& row : s) {
      std::vector<Rational> r;
      for (int c : cols) r.emplace_back(row[static_cast<std::size_t>(c)]);
      m.push_back(r);
    }
    if (m.empty()) m.push_back(std::vector<Rational>(cols.size(), 0));
    auto ns = null_space(m, cols.size());
    if (ns.size() != 1) continue;
    auto v = ns[0];
    if (v[0] < 0) {
      for (auto& x : v) x = -x;
    }
    if (!std::all_of(v.begin(), v.end(), [](const Rational& x) { return x > 0; })) continue;
    bool minimal = true;
    for (const auto& [other, ray] : found) {
      if ((other & mask) == other) minimal = false;
    }
    if (!minimal) continue;
    BigInt l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    std::vector<BigInt> ray(static_cast<std::size_t>(n), 0);
    BigInt g = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      ray[static_cast<std::size_t>(cols[i])] = numerator(Rational(v[i] * l));
      g = gcd(g, ray[static_cast<std::size_t>(cols[i])]);
    }
    for (auto& x : ray) x /= g;
    found.emplace_back(mask, ray);
  }
  std::vector<std::vector<BigInt>> out;
  for (auto& [m, r] : found) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

Weights random_cone_point(const TrainTrack& t, std::mt19937_64& rng) {
  auto rays = extreme_rays(t);
  Weights w(static_cast<std::size_t>(t.num_branches()), Rational(0));
  for (const auto& r : rays) {
    const auto k = static_cast<std::int64_t>(rng() % 5);
    for (std::size_t i = 0; i < r.size(); ++i) w[i] += k * Rational(r[i]);
  }
  return w;
}

}  // namespace

TEST_CASE("weight validation on the three-branch track") {
  auto t = three_branch_track(S2);
  CHECK_FALSE(validate_weights(t, to_weights({0, 0, 0})).has_value());
  CHECK_FALSE(validate_weights(t, to_weights({2, 1, 1})).has_value());
  auto bad = validate_weights(t, to_weights({1, 1, 1}));
  REQUIRE(bad.has_value());
  CHECK(bad->code() == ErrorCode::SwitchViolation);
  CHECK(validate_weights(t, to_weights({0, 1, -1}))->code() == ErrorCode::NegativeWeight);
  CHECK(validate_weights(t, to_weights({1, 1}))->code() == ErrorCode::DimensionMismatch);
  CHECK_FALSE(validate_weights(t, {Rational(3, 2), Rational(1, 2), Rational(1)}).has_value());
}

TEST_CASE("chart dimensions") {
  CHECK(chart_dimension(three_branch_track(S2)) == 2);
  // k isolated loops, no switches.
  std::vector<Branch> loops{{GroupWord{1}, 0}, {GroupWord{2}, 0}, {GroupWord{3, 4}, 0}};
  auto t = TrainTrack::on_base(S2, {}, loops);
  CHECK(chart_dimension(t) == 3);
  auto lifted = lift_track(three_branch_track(S2), single_swap(1));
  CHECK(lifted.track.num_branches() == 6);
  CHECK(chart_dimension(lifted.track) == 3);
  CHECK(chart_dimension(lifted.track) >= chart_dimension(three_branch_track(S2)));
}

TEST_CASE("invalid tracks") {
  // Dangling end.
  CHECK_THROWS_AS(TrainTrack::on_base(S2, {Switch{0, {HalfBranch{0, false}}, {}}}, {Branch{GroupWord{1}, -1}}),
                  Error);
  // Half-branch used twice.
  CHECK_THROWS_AS(TrainTrack::on_base(S2, {Switch{0, {HalfBranch{0, false}}, {HalfBranch{0, false}}}},
                                      {Branch{GroupWord{1}, -1}}),
                  Error);
  // Branch word does not reach the end switch's sheet.
  std::vector<Switch> sw{Switch{0, {HalfBranch{0, false}}, {}}, Switch{0, {HalfBranch{0, true}}, {}}};
  CHECK_THROWS_AS(TrainTrack(single_swap(1), sw, {Branch{GroupWord{1}, -1}}), Error);
  // Loop that does not close on the cover.
  CHECK_THROWS_AS(TrainTrack(single_swap(1), {}, {Branch{GroupWord{1}, 0}}), Error);
}

TEST_CASE("extreme rays agree with the minimal-support oracle") {
  auto base = three_branch_track(S2);
  CHECK(extreme_rays(base) == minimal_support_rays(base));
  CHECK(extreme_rays(base) == std::vector<std::vector<BigInt>>{{1, 0, 1}, {1, 1, 0}});
  for (const auto& c : enumerate_covers_up_to(S2, 2)) {
    auto lifted = lift_track(base, c).track;
    CHECK(extreme_rays(lifted) == minimal_support_rays(lifted));
  }
  auto fp = fiber_product(single_swap(1), single_swap(2));
  auto l4 = lift_track(base, fp).track;
  CHECK(extreme_rays(l4) == minimal_support_rays(l4));
  CHECK_THROWS_AS(extreme_rays(l4, 1), Error);
}

TEST_CASE("lift through the trivial cover is the identity") {
  auto t = three_branch_track(S2);
  auto l = lift_track(t, CoverSpec::trivial(S2));
  CHECK(l.track == t);
  CHECK(l.lift.matrix == identity_carrying(t).matrix);
}

TEST_CASE("lift through the a1 swap cover") {
  auto t = three_branch_track(S2);
  auto l = lift_track(t, single_swap(1));
  CHECK(l.track.num_branches() == 6);
  CHECK(l.track.num_switches() == 4);
  REQUIRE(l.lift.matrix.size() == 6);
  for (std::size_t j = 0; j < 3; ++j) {
    std::int64_t col = 0;
    for (const auto& row : l.lift.matrix) {
      CHECK((row[j] == 0 || row[j] == 1));
      col += row[j];
    }
    CHECK(col == 2);
  }
  // Path lifting by hand: b1 from sheet 1 ends on sheet 2, b3 stays put.
  for (int b = 0; b < 6; ++b) {
    const auto& br = l.track.branches()[static_cast<std::size_t>(b)];
    CHECK(l.track.end_sheet(b) == l.track.cover().act(l.track.start_sheet(b), br.word));
  }
}

TEST_CASE("lifting properties over every cover of degree <= 2") {
  auto t = three_branch_track(S2);
  std::mt19937_64 rng(5);
  for (const auto& c : enumerate_covers_up_to(S2, 2)) {
    auto l = lift_track(t, c);
    const auto d = c.degree();
    for (std::size_t j = 0; j < 3; ++j) {
      std::int64_t col = 0;
      for (const auto& row : l.lift.matrix) {
        CHECK((row[j] == 0 || row[j] == 1));
        col += row[j];
      }
      CHECK(col == d);
    }
    for (int trial = 0; trial < 20; ++trial) {
      auto w = random_cone_point(t, rng);
      REQUIRE_FALSE(validate_weights(t, w).has_value());
      auto lw = l.lift.apply(w);
      CHECK_FALSE(validate_weights(l.track, lw).has_value());
      CHECK_NOTHROW(integer_weights(lw));
      // The lifted weights give the transferred cycle.
      auto base_k = make_complex(CoverSpec::trivial(S2));
      auto k = make_complex(c);
      CHECK(homologous(track_cycle(l.track, lw, k), transfer(track_homology_class(t, w), k)));
      CHECK(pushforward(track_cycle(l.track, lw, k)) == d * track_homology_class(t, w));
      CHECK(track_cycle(t, w, base_k) == transfer(track_homology_class(t, w), base_k));
    }
  }
}

TEST_CASE("lifting commutes with composition of covers") {
  auto t = three_branch_track(S2);
  // Tower: fiber product (degree 4) -> a1 swap (degree 2) -> base.
  auto fp = fiber_product_with_arrows(single_swap(1), single_swap(2));
  auto mid = lift_track(t, single_swap(1));
  auto top = lift_track(mid.track, fp.to_left);
  auto direct = lift_track(t, fp.cover);
  CHECK(top.track == direct.track);
  auto composite = carrying_compose(top.lift, mid.lift);
  CHECK(composite.matrix == direct.lift.matrix);

  // The same through compose_covers and a marking of the middle cover.
  auto mark = standard_marking(single_swap(1));
  std::vector<Perm> tp(6, Perm{0, 1});
  tp[0] = Perm{1, 0};
  auto arrow = compose_covers_with_arrow(CoverSpec(mark.total, tp), single_swap(1), mark.to_total);
  auto via_mid = lift_track(mid.track, arrow);
  auto direct2 = lift_track(t, arrow.from);
  CHECK(via_mid.track == direct2.track);
  CHECK(carrying_compose(via_mid.lift, mid.lift).matrix == direct2.lift.matrix);
  CHECK(arrow.from.degree() == 4);
}

TEST_CASE("carrying maps") {
  auto t = three_branch_track(S2);
  auto id = identity_carrying(t);
  auto l = lift_track(t, single_swap(1));
  CHECK(carrying_compose(l.lift, id).matrix == l.lift.matrix);
  CHECK(carrying_compose(identity_carrying(l.track), l.lift).matrix == l.lift.matrix);
  CHECK_THROWS_AS(carrying_compose(id, l.lift), Error);
  // Swapping b2 and b3 keeps the cone; sending b1 to b2 does not.
  CHECK_NOTHROW(make_carrying(t, t, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  try {
    make_carrying(t, t, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
    FAIL("expected cone violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConeViolation);
  }
  CHECK_THROWS_AS(make_carrying(t, t, {{1, 0, 0}, {0, 1, 0}}), Error);
  CHECK_THROWS_AS(make_carrying(t, t, {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}), Error);
  // Integer weights stay integer.
  auto w = l.lift.apply(to_weights({5, 2, 3}));
  CHECK(integer_weights(w) == std::vector<std::int64_t>{5, 2, 3, 5, 2, 3});
}

TEST_CASE("track homology classes") {
  auto t = three_branch_track(S2);
  CHECK(track_homology_class(t, to_weights({0, 0, 0})).is_zero());
  auto loop = TrainTrack::on_base(S2, {}, {Branch{GroupWord{1}, 0}});
  CHECK(track_homology_class(loop, to_weights({3})) == 3 * HomologyClass::basis(S2, 0));
  CHECK_THROWS_AS(track_homology_class(t, {Rational(1, 2), Rational(1, 2), Rational(0)}), Error);
  // Loops lift to loops joined by two-sided switches.
  auto l = lift_track(loop, single_swap(1));
  CHECK(l.track.num_branches() == 2);
  CHECK(chart_dimension(l.track) == 1);
  auto k = make_complex(single_swap(1));
  auto lw = l.lift.apply(to_weights({3}));
  CHECK(homologous(track_cycle(l.track, lw, k), transfer(3 * HomologyClass::basis(S2, 0), k)));
}
