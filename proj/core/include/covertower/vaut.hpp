#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covertower/automorphism.hpp"
#include "covertower/limit.hpp"
#include "covertower/marking.hpp"

namespace covertower {

/// A virtual automorphism: an isomorphism between the subgroups of two
/// covers of equal degree, i.e. two covering arrows out of one total surface.
/// It is stored by edge images, which needs no marking of the total space:
///   forward[e]  image of the Schreier generator of edge e of `left`, a
///               surface-group word lying in the subgroup of `right`
///   backward[e] the same for edges of `right`, landing in `left`.
/// Tree edges map to the empty word.
struct TwoArrowVaut {
  CoverSpec left;
  CoverSpec right;
  std::vector<GroupWord> forward;
  std::vector<GroupWord> backward;

  const Surface& base() const noexcept { return left.base(); }
  Surface total() const { return left.total_surface(); }
};

/// Checks shapes, subgroup membership of every image, that every face of
/// either side maps to a null-homologous loop, and that backward o forward
/// (and forward o backward) fixes every Schreier generator in homology.
/// Returns InvalidIdentification, GenusMismatch or BaseMismatch.
std::optional<Error> validate_vaut(const TwoArrowVaut& v);
/// Builds and validates; throws the error validate_vaut reports.
TwoArrowVaut make_vaut(CoverSpec left, CoverSpec right, std::vector<GroupWord> forward,
                       std::vector<GroupWord> backward);

TwoArrowVaut identity_vaut(const Surface& base);
/// Automorphism of the base group seen as a vaut between trivial covers.
/// Needs inverse images (InvalidAutomorphism otherwise).
TwoArrowVaut vaut_from_automorphism(const SurfaceAutomorphism& a);
/// Restriction of an automorphism to the subgroup of c: left = c and right
/// the cover of a(Stab c).
TwoArrowVaut restrict_automorphism(const SurfaceAutomorphism& a, const CoverSpec& c);
/// Isomorphism between two covers of equal degree through their standard
/// markings: left -> standard surface -> right.
TwoArrowVaut vaut_from_markings(const Marking& left, const Marking& right);

/// Same vaut on the smaller subgroup of `finer`, which must refine v.left.
TwoArrowVaut restrict_vaut(const TwoArrowVaut& v, const CoverSpec& finer);

TwoArrowVaut vaut_inverse(const TwoArrowVaut& v);
/// v1 o v2: act by v2 first. Throws BaseMismatch.
TwoArrowVaut vaut_compose(const TwoArrowVaut& v1, const TwoArrowVaut& v2);

/// Pull e back to the fiber product W of e.cover with v.left, then carry W
/// through the identification to the matching cover of the base. Throws
/// BaseMismatch, or InvalidIdentification when the edge images do not close
/// up on W (an identification that is only a homology isomorphism).
LimitElement vaut_act(const TwoArrowVaut& v, const LimitElement& e);

bool pairing_preserved(const TwoArrowVaut& v, const LimitElement& e1, const LimitElement& e2);

/// Representative-level test: both arrows have the same subgroup.
bool is_mapping_class_like(const TwoArrowVaut& v);

/// Depth-bounded search for a representative over a characteristic cover:
/// K = characteristic refinement of v.left, certified when v maps the
/// subgroup of K onto itself. A negative answer only means "not found".
struct CautCertificate {
  bool certified = false;
  std::optional<CoverSpec> characteristic;
  std::string reason;
};
CautCertificate certify_caut(const TwoArrowVaut& v, const std::vector<SurfaceAutomorphism>& auts,
                             std::uint64_t budget);

/// Cover of the preimage of Stab(fine) under the edge images of `a`, where
/// images[e] lies in the subgroup of the cover that `fine` refines. Sheets
/// are pairs (sheet of a, sheet of fine over the basepoint); `states` lists
/// the pair on each canonical sheet.
struct Transport {
  CoverSpec cover;
  std::vector<std::pair<int, int>> states;
};
Transport transport(const CoverSpec& a, const std::vector<GroupWord>& images,
                    const CoverSpec& fine);

}  // namespace covertower
