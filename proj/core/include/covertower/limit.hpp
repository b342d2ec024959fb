#pragma once

#include <variant>

#include "covertower/cover_ops.hpp"
#include "covertower/homology.hpp"
#include "covertower/linalg.hpp"
#include "covertower/traintrack.hpp"

namespace covertower {

enum class PayloadKind { Homology, Track };

struct WeightedTrack {
  TrainTrack track;
  Weights weights;
};

/// A representative (cover, payload) of an element of the direct limit over
/// all pointed covers of the base. Two representatives are equal in the
/// limit when their lifts to a common cover agree.
class LimitElement {
 public:
  explicit LimitElement(CoverCycle cycle);
  /// Validates the weights; throws as validate_weights reports.
  LimitElement(TrainTrack track, Weights weights);

  /// (trivial cover, u).
  static LimitElement from_class(const Surface& base, const HomologyClass& u);

  PayloadKind kind() const noexcept {
    return payload_.index() == 0 ? PayloadKind::Homology : PayloadKind::Track;
  }
  const CoverSpec& cover() const;
  const Surface& base() const { return cover().base(); }
  /// Throw KindMismatch for the wrong kind.
  const CoverCycle& cycle() const;
  const WeightedTrack& track() const;

 private:
  std::variant<CoverCycle, WeightedTrack> payload_;
};

/// Payload pulled back along arrow (arrow.to must be the element's cover).
LimitElement lift_element(const LimitElement& e, const CoverArrow& arrow);
/// Throws NotARefinement unless `finer` factors through the element's cover.
LimitElement lift_element(const LimitElement& e, const CoverSpec& finer);

/// Lifts both to the fiber product and compares there. Homology payloads are
/// compared as classes. Track payloads must agree switch by switch and
/// weight by weight, with each pair of branch paths differing by a boundary.
/// Throws KindMismatch or IncompatibleTower.
bool limit_equal(const LimitElement& e1, const LimitElement& e2);

/// <u, v> on the fiber product divided by (genus - 1) there. Throws
/// IncompatibleTower for different bases, KindMismatch for track payloads.
Rational normalized_pairing(const LimitElement& e1, const LimitElement& e2);

}  // namespace covertower
