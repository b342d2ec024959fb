#pragma once

#include <optional>
#include <vector>

#include "covertower/config.hpp"
#include "covertower/cover_ops.hpp"
#include "covertower/homology.hpp"
#include "covertower/linalg.hpp"

namespace covertower {

/// One end of a branch: its start (at_end = false) or its end.
struct HalfBranch {
  int branch = 0;
  bool at_end = false;
  friend bool operator==(const HalfBranch&, const HalfBranch&) = default;
};

struct Switch {
  int sheet = 0;
  std::vector<HalfBranch> side_a;
  std::vector<HalfBranch> side_b;
  friend bool operator==(const Switch&, const Switch&) = default;
};

/// A branch runs along `word` in the one-vertex skeleton of the cover's base,
/// starting at the sheet of the switch holding its start. A branch whose ends
/// sit in no switch is a closed loop based at `loop_sheet`.
struct Branch {
  GroupWord word;
  int loop_sheet = -1;
  friend bool operator==(const Branch&, const Branch&) = default;
};

/// Switched graph drawn on a cover (the trivial cover for tracks on the base
/// surface). Construction checks that each half-branch fills exactly one
/// slot and that every branch word leads from its start sheet to its end
/// sheet; throws InvalidTrack otherwise.
class TrainTrack {
 public:
  TrainTrack(CoverSpec cover, std::vector<Switch> switches, std::vector<Branch> branches);
  static TrainTrack on_base(const Surface& base, std::vector<Switch> switches,
                            std::vector<Branch> branches);

  const CoverSpec& cover() const noexcept { return cover_; }
  const Surface& base() const noexcept { return cover_.base(); }
  const std::vector<Switch>& switches() const noexcept { return switches_; }
  const std::vector<Branch>& branches() const noexcept { return branches_; }
  int num_branches() const noexcept { return static_cast<int>(branches_.size()); }
  int num_switches() const noexcept { return static_cast<int>(switches_.size()); }

  /// -1 for closed loops.
  int start_switch(int b) const { return ends_.at(static_cast<std::size_t>(b)).first; }
  int end_switch(int b) const { return ends_.at(static_cast<std::size_t>(b)).second; }
  int start_sheet(int b) const;
  int end_sheet(int b) const;

  /// Row per switch: side-A weights minus side-B weights.
  IntMatrix switch_matrix() const;

  friend bool operator==(const TrainTrack& a, const TrainTrack& b) {
    return a.cover_ == b.cover_ && a.switches_ == b.switches_ && a.branches_ == b.branches_;
  }

 private:
  CoverSpec cover_;
  std::vector<Switch> switches_;
  std::vector<Branch> branches_;
  std::vector<std::pair<int, int>> ends_;
};

using Weights = std::vector<Rational>;

/// NegativeWeight, SwitchViolation or DimensionMismatch; nullopt if w lies in
/// the weight cone.
std::optional<Error> validate_weights(const TrainTrack& t, const Weights& w);

/// Dimension of the span of the weight cone: branches - rank(switch matrix).
int chart_dimension(const TrainTrack& t);

/// Extreme rays of {w >= 0, switch conditions}, primitive integer vectors in
/// a canonical order, from a double-description pass. Throws
/// SearchBudgetExceeded when the intermediate ray count exceeds `budget`.
std::vector<std::vector<BigInt>> extreme_rays(const TrainTrack& t,
                                              std::uint64_t budget = 100000);

/// Nonnegative integer matrix taking the weight cone of `source` into that
/// of `target`; rows are target branches, columns source branches.
struct CarryingMatrix {
  TrainTrack source;
  TrainTrack target;
  IntMatrix matrix;

  Weights apply(const Weights& w) const;
};

/// Validates the matrix on the extreme rays of the source cone. Throws
/// DimensionMismatch or ConeViolation.
CarryingMatrix make_carrying(TrainTrack source, TrainTrack target, IntMatrix matrix);

CarryingMatrix identity_carrying(const TrainTrack& t);

/// m1 o m2, i.e. first m2 then m1. Throws DimensionMismatch when m2's target
/// is not m1's source, ConeViolation if the product fails validation.
CarryingMatrix carrying_compose(const CarryingMatrix& m1, const CarryingMatrix& m2);

struct TrackLift {
  TrainTrack track;
  CarryingMatrix lift;  // source = the input track, target = `track`
};

/// Full preimage of a track under arrow.from -> arrow.to. Lifted switches
/// and branches are ordered by (fine sheet, parent index), so lifting along
/// a composite arrow equals the composite of the lifts exactly. Closed loops
/// acquire one two-sided switch per lift. Throws BaseMismatch if the track
/// is not drawn on arrow.to.
TrackLift lift_track(const TrainTrack& t, const CoverArrow& arrow);
/// Lift of a track drawn on the base through a cover.
TrackLift lift_track(const TrainTrack& t, const CoverSpec& cover);

/// Sum of weight(b) times the abelianized branch word, on the base surface.
/// Throws NonIntegerWeights.
HomologyClass track_homology_class(const TrainTrack& t, const Weights& w);

/// Weighted sum of branch paths on the track's cover; throws NotACycle if
/// the weights do not close up and NonIntegerWeights.
CoverCycle track_cycle(const TrainTrack& t, const Weights& w, const ComplexPtr& k);

/// Two switches, three branches: b1 (word a1) on side A of both switches,
/// b2 (word a1) and b3 (empty word) on side B of both. Switch conditions
/// w1 = w2 + w3 at both ends.
TrainTrack three_branch_track(const Surface& base);

std::vector<std::int64_t> integer_weights(const Weights& w);
Weights to_weights(const std::vector<std::int64_t>& w);

}  // namespace covertower
