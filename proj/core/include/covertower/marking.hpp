#pragma once

#include <optional>
#include <span>
#include <vector>

#include "covertower/cover.hpp"
#include "covertower/cover_ops.hpp"

namespace covertower {

/// An identification of a cover's total space with the standard surface of
/// genus cover.genus(), as a pair of mutually inverse maps
///   to_total:   edge (k, s) of the cover -> word in the total generators
///   from_total: total generator j        -> surface-group word in Stab(0)
/// to_total sends the Schreier generator of each edge to its class in the
/// total surface group (tree edges go to the empty word).
struct Marking {
  CoverSpec cover;
  Surface total;
  std::vector<GroupWord> to_total;
  std::vector<GroupWord> from_total;
};

/// Canonical marking of a cover, found by collapsing a spanning tree,
/// gluing the lifted relator polygons along a dual tree, and bringing the
/// resulting one-face word to the form prod [c_i, d_i] by Nielsen moves.
/// Deterministic; on the trivial cover it is the identity.
Marking standard_marking(const CoverSpec& cover);

/// Checks that from_total lands in the subgroup, that to_total o from_total
/// is the identity on total generators, that from_total o to_total agrees
/// with each Schreier generator in first homology, and that the pulled-back
/// intersection form is standard. Returns InvalidIdentification otherwise.
std::optional<Error> validate_marking(const Marking& m);

/// Cover of the base obtained by composing `top` (a cover of the total
/// surface of `bottom`) with `bottom`. Sheets are pairs (bottom sheet, top
/// sheet); generator x moves (s, t) to (s.x, t.to_total(x, s)).
/// Throws GenusMismatch or InvalidIdentification.
CoverSpec compose_covers(const CoverSpec& top, const CoverSpec& bottom,
                         std::span<const GroupWord> identification);
CoverSpec compose_covers(const CoverSpec& top, const Marking& bottom);

/// Same, together with the projection onto `bottom`.
CoverArrow compose_covers_with_arrow(const CoverSpec& top, const CoverSpec& bottom,
                                     std::span<const GroupWord> identification);

}  // namespace covertower
