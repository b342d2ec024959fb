#include "covertower/limit.hpp"

#include "covertower/registry.hpp"

namespace covertower {

namespace {

void require_compatible(const LimitElement& e1, const LimitElement& e2) {
  if (e1.base() != e2.base()) {
    throw Error(ErrorCode::IncompatibleTower, "elements live over different bases");
  }
  if (e1.kind() != e2.kind()) {
    throw Error(ErrorCode::KindMismatch, "homology and track payloads do not compare");
  }
}

}  // namespace

LimitElement::LimitElement(CoverCycle cycle) : payload_(std::move(cycle)) {}

LimitElement::LimitElement(TrainTrack track, Weights weights)
    : payload_(WeightedTrack{std::move(track), std::move(weights)}) {
  const auto& wt = std::get<WeightedTrack>(payload_);
  if (auto err = validate_weights(wt.track, wt.weights)) throw *err;
}

LimitElement LimitElement::from_class(const Surface& base, const HomologyClass& u) {
  return LimitElement(transfer(u, CoverRegistry::global().complex(CoverSpec::trivial(base))));
}

const CoverSpec& LimitElement::cover() const {
  if (payload_.index() == 0) return std::get<CoverCycle>(payload_).cover();
  return std::get<WeightedTrack>(payload_).track.cover();
}

const CoverCycle& LimitElement::cycle() const {
  if (payload_.index() != 0) throw Error(ErrorCode::KindMismatch, "payload is a track");
  return std::get<CoverCycle>(payload_);
}

const WeightedTrack& LimitElement::track() const {
  if (payload_.index() != 1) throw Error(ErrorCode::KindMismatch, "payload is a cycle");
  return std::get<WeightedTrack>(payload_);
}

LimitElement lift_element(const LimitElement& e, const CoverArrow& arrow) {
  if (e.kind() == PayloadKind::Homology) {
    return LimitElement(
        lift_cycle(e.cycle(), arrow, CoverRegistry::global().complex(arrow.from)));
  }
  const auto& wt = e.track();
  auto l = lift_track(wt.track, arrow);
  auto w = l.lift.apply(wt.weights);
  return LimitElement(std::move(l.track), std::move(w));
}

LimitElement lift_element(const LimitElement& e, const CoverSpec& finer) {
  return lift_element(e, arrow_to(finer, e.cover()));
}

bool limit_equal(const LimitElement& e1, const LimitElement& e2) {
  require_compatible(e1, e2);
  const auto fp = fiber_product_with_arrows(e1.cover(), e2.cover());
  const auto l1 = lift_element(e1, fp.to_left);
  const auto l2 = lift_element(e2, fp.to_right);
  if (l1.kind() == PayloadKind::Homology) return homologous(l1.cycle(), l2.cycle());

  const auto& [t1, w1] = l1.track();
  const auto& [t2, w2] = l2.track();
  if (t1.switches() != t2.switches() || w1 != w2 ||
      t1.num_branches() != t2.num_branches()) {
    return false;
  }
  const auto k = CoverRegistry::global().complex(fp.cover);
  for (int b = 0; b < t1.num_branches(); ++b) {
    const auto& b1 = t1.branches()[static_cast<std::size_t>(b)];
    const auto& b2 = t2.branches()[static_cast<std::size_t>(b)];
    if (b1.loop_sheet != b2.loop_sheet || t1.start_sheet(b) != t2.start_sheet(b)) return false;
    if (b1.word == b2.word) continue;
    auto diff = k->path_chain(b1.word, t1.start_sheet(b));
    const auto c2 = k->path_chain(b2.word, t2.start_sheet(b));
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= c2[i];
    if (!is_boundary(CoverCycle(k, std::move(diff)))) return false;
  }
  return true;
}

Rational normalized_pairing(const LimitElement& e1, const LimitElement& e2) {
  require_compatible(e1, e2);
  if (e1.kind() != PayloadKind::Homology) {
    throw Error(ErrorCode::KindMismatch, "normalized pairing needs homology payloads");
  }
  const auto fp = fiber_product_with_arrows(e1.cover(), e2.cover());
  const auto l1 = lift_element(e1, fp.to_left);
  const auto l2 = lift_element(e2, fp.to_right);
  return Rational(pairing_on_cover(l1.cycle(), l2.cycle())) /
         Rational(fp.cover.genus() - 1);
}

}  // namespace covertower
