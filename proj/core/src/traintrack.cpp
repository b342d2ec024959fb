#include "covertower/traintrack.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace covertower {

TrainTrack::TrainTrack(CoverSpec cover, std::vector<Switch> switches,
                       std::vector<Branch> branches)
    : cover_(std::move(cover)), switches_(std::move(switches)), branches_(std::move(branches)) {
  const auto nb = branches_.size();
  ends_.assign(nb, {-1, -1});
  std::vector<int> seen(2 * nb, 0);
  for (std::size_t s = 0; s < switches_.size(); ++s) {
    const auto& sw = switches_[s];
    if (sw.sheet < 0 || sw.sheet >= cover_.degree()) {
      throw Error(ErrorCode::InvalidTrack, "switch " + std::to_string(s + 1) + " has no such sheet");
    }
    for (const auto* side : {&sw.side_a, &sw.side_b}) {
      for (const auto& hb : *side) {
        if (hb.branch < 0 || static_cast<std::size_t>(hb.branch) >= nb) {
          throw Error(ErrorCode::InvalidTrack, "slot refers to a missing branch");
        }
        auto& slot = seen[2 * static_cast<std::size_t>(hb.branch) + (hb.at_end ? 1 : 0)];
        if (slot++) {
          throw Error(ErrorCode::InvalidTrack,
                      "branch " + std::to_string(hb.branch + 1) + " end used twice");
        }
        auto& e = ends_[static_cast<std::size_t>(hb.branch)];
        (hb.at_end ? e.second : e.first) = static_cast<int>(s);
      }
    }
  }
  for (std::size_t b = 0; b < nb; ++b) {
    const auto& br = branches_[b];
    for (Letter x : br.word.letters()) {
      if (!cover_.base().contains(x)) {
        throw Error(ErrorCode::InvalidTrack, "branch word leaves the surface's generators");
      }
    }
    const bool has_start = seen[2 * b] != 0;
    const bool has_end = seen[2 * b + 1] != 0;
    if (has_start != has_end) {
      throw Error(ErrorCode::InvalidTrack,
                  "branch " + std::to_string(b + 1) + " has a dangling end");
    }
    if (!has_start) {
      if (br.loop_sheet < 0 || br.loop_sheet >= cover_.degree() ||
          cover_.act(br.loop_sheet, br.word) != br.loop_sheet) {
        throw Error(ErrorCode::InvalidTrack,
                    "free branch " + std::to_string(b + 1) + " is not a closed loop");
      }
    } else if (br.loop_sheet >= 0) {
      throw Error(ErrorCode::InvalidTrack, "attached branch carries a loop sheet");
    }
    if (cover_.act(start_sheet(static_cast<int>(b)), br.word) != end_sheet(static_cast<int>(b))) {
      throw Error(ErrorCode::InvalidTrack,
                  "branch " + std::to_string(b + 1) + " does not end on its end switch's sheet");
    }
  }
}

TrainTrack TrainTrack::on_base(const Surface& base, std::vector<Switch> switches,
                               std::vector<Branch> branches) {
  return TrainTrack(CoverSpec::trivial(base), std::move(switches), std::move(branches));
}

int TrainTrack::start_sheet(int b) const {
  const int s = start_switch(b);
  return s < 0 ? branches_.at(static_cast<std::size_t>(b)).loop_sheet
               : switches_[static_cast<std::size_t>(s)].sheet;
}

int TrainTrack::end_sheet(int b) const {
  const int s = end_switch(b);
  return s < 0 ? branches_.at(static_cast<std::size_t>(b)).loop_sheet
               : switches_[static_cast<std::size_t>(s)].sheet;
}

IntMatrix TrainTrack::switch_matrix() const {
  IntMatrix m(switches_.size(), std::vector<std::int64_t>(branches_.size(), 0));
  for (std::size_t s = 0; s < switches_.size(); ++s) {
    for (const auto& hb : switches_[s].side_a) m[s][static_cast<std::size_t>(hb.branch)] += 1;
    for (const auto& hb : switches_[s].side_b) m[s][static_cast<std::size_t>(hb.branch)] -= 1;
  }
  return m;
}

std::optional<Error> validate_weights(const TrainTrack& t, const Weights& w) {
  if (static_cast<int>(w.size()) != t.num_branches()) {
    return Error(ErrorCode::DimensionMismatch, "one weight per branch required");
  }
  for (std::size_t b = 0; b < w.size(); ++b) {
    if (w[b] < 0) {
      return Error(ErrorCode::NegativeWeight, "branch " + std::to_string(b + 1));
    }
  }
  const auto m = t.switch_matrix();
  for (std::size_t s = 0; s < m.size(); ++s) {
    Rational acc = 0;
    for (std::size_t b = 0; b < w.size(); ++b) acc += m[s][b] * w[b];
    if (acc != 0) return Error(ErrorCode::SwitchViolation, "switch " + std::to_string(s + 1));
  }
  return std::nullopt;
}

int chart_dimension(const TrainTrack& t) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : t.switch_matrix()) m.emplace_back(row.begin(), row.end());
  return t.num_branches() - static_cast<int>(rank(m));
}

namespace {

using Ray = std::vector<BigInt>;

void make_primitive(Ray& r) {
  BigInt g = 0;
  for (const auto& x : r) g = gcd(g, abs(x));
  if (g > 1) {
    for (auto& x : r) x /= g;
  }
}

std::vector<char> support(const Ray& r) {
  std::vector<char> s(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) s[i] = r[i] != 0;
  return s;
}

}  // namespace

std::vector<std::vector<BigInt>> extreme_rays(const TrainTrack& t, std::uint64_t budget) {
  const std::size_t n = static_cast<std::size_t>(t.num_branches());
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < n; ++i) {
    Ray r(n, 0);
    r[i] = 1;
    rays.push_back(std::move(r));
  }
  for (const auto& h : t.switch_matrix()) {
    std::vector<BigInt> val;
    for (const auto& r : rays) {
      BigInt v = 0;
      for (std::size_t i = 0; i < n; ++i) v += h[i] * r[i];
      val.push_back(v);
    }
    std::vector<Ray> next;
    std::vector<std::vector<char>> supp;
    for (const auto& r : rays) supp.push_back(support(r));
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] == 0) next.push_back(rays[i]);
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        // Adjacent iff no third ray's support fits inside the union.
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          bool inside = true;
          for (std::size_t i = 0; i < n && inside; ++i) {
            if (supp[r][i] && !supp[p][i] && !supp[q][i]) inside = false;
          }
          if (inside) adjacent = false;
        }
        if (!adjacent) continue;
        Ray c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = val[p] * rays[q][i] - val[q] * rays[p][i];
        make_primitive(c);
        next.push_back(std::move(c));
        if (next.size() > budget) {
          throw Error(ErrorCode::SearchBudgetExceeded, "too many extreme rays");
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

Weights CarryingMatrix::apply(const Weights& w) const {
  if (matrix.empty() ? !w.empty() : matrix[0].size() != w.size()) {
    throw Error(ErrorCode::DimensionMismatch, "weight vector does not fit the matrix");
  }
  Weights out(matrix.size(), Rational(0));
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (matrix[i][j] != 0) out[i] += matrix[i][j] * w[j];
    }
  }
  return out;
}

CarryingMatrix make_carrying(TrainTrack source, TrainTrack target, IntMatrix matrix) {
  const auto rows = static_cast<std::size_t>(target.num_branches());
  const auto cols = static_cast<std::size_t>(source.num_branches());
  if (matrix.size() != rows) {
    throw Error(ErrorCode::DimensionMismatch, "carrying matrix needs one row per target branch");
  }
  for (const auto& row : matrix) {
    if (row.size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "carrying matrix needs one column per source branch");
    }
    for (auto x : row) {
      if (x < 0) throw Error(ErrorCode::ConeViolation, "carrying matrix has a negative entry");
    }
  }
  const auto sm = target.switch_matrix();
  for (const auto& ray : extreme_rays(source)) {
    std::vector<BigInt> img(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) img[i] += matrix[i][j] * ray[j];
    }
    for (const auto& srow : sm) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < rows; ++i) acc += srow[i] * img[i];
      if (acc != 0) {
        throw Error(ErrorCode::ConeViolation, "an extreme ray leaves the target cone");
      }
    }
  }
  return CarryingMatrix{std::move(source), std::move(target), std::move(matrix)};
}

CarryingMatrix identity_carrying(const TrainTrack& t) {
  const auto n = static_cast<std::size_t>(t.num_branches());
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return CarryingMatrix{t, t, std::move(m)};
}

CarryingMatrix carrying_compose(const CarryingMatrix& m1, const CarryingMatrix& m2) {
  if (!(m2.target == m1.source)) {
    throw Error(ErrorCode::DimensionMismatch, "carrying maps are not composable");
  }
  const std::size_t rows = m1.matrix.size();
  const std::size_t mid = m2.matrix.size();
  const std::size_t cols = static_cast<std::size_t>(m2.source.num_branches());
  IntMatrix prod(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < mid; ++k) {
      if (m1.matrix[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) prod[i][j] += m1.matrix[i][k] * m2.matrix[k][j];
    }
  }
  return make_carrying(m2.source, m1.target, std::move(prod));
}

TrackLift lift_track(const TrainTrack& t, const CoverArrow& arrow) {
  if (!(t.cover() == arrow.to)) {
    throw Error(ErrorCode::BaseMismatch, "track is not drawn on the arrow's target");
  }
  const CoverSpec& fine = arrow.from;
  const int D = fine.degree();
  const int nb = t.num_branches();

  // Parent switches: the real ones, then one per closed loop.
  std::vector<Switch> parents = t.switches();
  std::vector<int> loop_switch(static_cast<std::size_t>(nb), -1);
  for (int b = 0; b < nb; ++b) {
    if (t.start_switch(b) >= 0) continue;
    loop_switch[static_cast<std::size_t>(b)] = static_cast<int>(parents.size());
    parents.push_back(Switch{t.branches()[static_cast<std::size_t>(b)].loop_sheet,
                             {HalfBranch{b, true}}, {HalfBranch{b, false}}});
  }

  auto over = [&](int u) { return arrow.sheet_map[static_cast<std::size_t>(u)]; };
  std::vector<std::vector<int>> branch_id(static_cast<std::size_t>(D),
                                          std::vector<int>(static_cast<std::size_t>(nb), -1));
  std::vector<std::pair<int, int>> lifted_branches;  // (fine start sheet, parent)
  for (int u = 0; u < D; ++u) {
    for (int b = 0; b < nb; ++b) {
      if (t.start_sheet(b) != over(u)) continue;
      branch_id[static_cast<std::size_t>(u)][static_cast<std::size_t>(b)] =
          static_cast<int>(lifted_branches.size());
      lifted_branches.emplace_back(u, b);
    }
  }
  std::vector<Branch> branches;
  for (auto [u, b] : lifted_branches) {
    branches.push_back(Branch{t.branches()[static_cast<std::size_t>(b)].word, -1});
  }
  std::vector<Switch> switches;
  for (int u = 0; u < D; ++u) {
    for (std::size_t sigma = 0; sigma < parents.size(); ++sigma) {
      const auto& p = parents[sigma];
      if (p.sheet != over(u)) continue;
      Switch sw{u, {}, {}};
      auto lift_slot = [&](const HalfBranch& hb) {
        int start = u;
        if (hb.at_end) {
          start = fine.act(u, t.branches()[static_cast<std::size_t>(hb.branch)].word.inverse());
        }
        return HalfBranch{branch_id[static_cast<std::size_t>(start)][static_cast<std::size_t>(hb.branch)],
                          hb.at_end};
      };
      for (const auto& hb : p.side_a) sw.side_a.push_back(lift_slot(hb));
      for (const auto& hb : p.side_b) sw.side_b.push_back(lift_slot(hb));
      switches.push_back(std::move(sw));
    }
  }
  TrainTrack lifted(fine, std::move(switches), std::move(branches));

  IntMatrix l(lifted_branches.size(), std::vector<std::int64_t>(static_cast<std::size_t>(nb), 0));
  for (std::size_t i = 0; i < lifted_branches.size(); ++i) {
    l[i][static_cast<std::size_t>(lifted_branches[i].second)] = 1;
  }
  auto carrying = make_carrying(t, lifted, std::move(l));
  return TrackLift{std::move(lifted), std::move(carrying)};
}

TrackLift lift_track(const TrainTrack& t, const CoverSpec& cover) {
  if (t.base() != cover.base() || t.cover().degree() != 1) {
    throw Error(ErrorCode::BaseMismatch, "track is not drawn on the cover's base");
  }
  return lift_track(t, arrow_to_base(cover));
}

std::vector<std::int64_t> integer_weights(const Weights& w) {
  std::vector<std::int64_t> out;
  for (const auto& x : w) {
    if (denominator(x) != 1) throw Error(ErrorCode::NonIntegerWeights, "weights must be integers");
    out.push_back(to_int64(numerator(x)));
  }
  return out;
}

Weights to_weights(const std::vector<std::int64_t>& w) {
  Weights out;
  for (auto x : w) out.emplace_back(x);
  return out;
}

HomologyClass track_homology_class(const TrainTrack& t, const Weights& w) {
  if (static_cast<int>(w.size()) != t.num_branches()) {
    throw Error(ErrorCode::DimensionMismatch, "one weight per branch required");
  }
  const auto iw = integer_weights(w);
  auto out = HomologyClass::zero(t.base());
  for (std::size_t b = 0; b < iw.size(); ++b) {
    out += iw[b] * abelianize(t.base(), t.branches()[b].word);
  }
  return out;
}

CoverCycle track_cycle(const TrainTrack& t, const Weights& w, const ComplexPtr& k) {
  if (!(k->cover() == t.cover())) {
    throw Error(ErrorCode::ComplexMismatch, "complex is not the track's cover");
  }
  if (static_cast<int>(w.size()) != t.num_branches()) {
    throw Error(ErrorCode::DimensionMismatch, "one weight per branch required");
  }
  const auto iw = integer_weights(w);
  std::vector<std::int64_t> chain(static_cast<std::size_t>(k->num_edges()), 0);
  for (int b = 0; b < t.num_branches(); ++b) {
    const auto c = iw[static_cast<std::size_t>(b)];
    if (c == 0) continue;
    const auto p = k->path_chain(t.branches()[static_cast<std::size_t>(b)].word, t.start_sheet(b));
    for (std::size_t e = 0; e < chain.size(); ++e) chain[e] += c * p[e];
  }
  return CoverCycle(k, std::move(chain));
}

TrainTrack three_branch_track(const Surface& base) {
  std::vector<Switch> switches{
      Switch{0, {HalfBranch{0, false}}, {HalfBranch{1, false}, HalfBranch{2, false}}},
      Switch{0, {HalfBranch{0, true}}, {HalfBranch{1, true}, HalfBranch{2, true}}},
  };
  std::vector<Branch> branches{
      Branch{GroupWord{letter_a(1)}, -1},
      Branch{GroupWord{letter_a(1)}, -1},
      Branch{GroupWord{}, -1},
  };
  return TrainTrack::on_base(base, std::move(switches), std::move(branches));
}

}  // namespace covertower
