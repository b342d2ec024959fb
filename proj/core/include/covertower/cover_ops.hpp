#pragma once

#include <optional>
#include <vector>

#include "covertower/cover.hpp"

namespace covertower {

/// Pointed covering map between two covers of the same base. sheet_map sends
/// sheets of `from` to sheets of `to`, commutes with every generator and
/// fixes the basepoint.
struct CoverArrow {
  CoverSpec from;
  CoverSpec to;
  std::vector<int> sheet_map;

  /// Degree of the arrow: from.degree() / to.degree().
  int degree() const noexcept { return from.degree() / to.degree(); }
  /// Sheets of `from` lying over sheet t of `to`, in increasing order.
  std::vector<int> fiber(int t) const;
};

/// The unique pointed arrow fine -> coarse if Stab_fine(0) is contained in
/// Stab_coarse(0), decided by testing every Schreier generator of the fine
/// stabilizer on the coarse representation. nullopt otherwise.
std::optional<CoverArrow> factors_through(const CoverSpec& fine,
                                          const CoverSpec& coarse);

/// Like factors_through, but throws Error(NotARefinement) on failure.
CoverArrow arrow_to(const CoverSpec& fine, const CoverSpec& coarse);

CoverArrow identity_arrow(const CoverSpec& c);

/// Arrow from c to the trivial cover.
CoverArrow arrow_to_base(const CoverSpec& c);

/// gf: composite of f: a -> b and g: b -> c.
CoverArrow compose_arrows(const CoverArrow& g, const CoverArrow& f);

struct FiberProduct {
  CoverSpec cover;
  CoverArrow to_left;
  CoverArrow to_right;
};

/// Pointed component of the diagonal action on pairs of sheets, i.e. the
/// cover of Stab_P(0) n Stab_Q(0), with its projections to P and Q.
FiberProduct fiber_product_with_arrows(const CoverSpec& p, const CoverSpec& q);

CoverSpec fiber_product(const CoverSpec& p, const CoverSpec& q);

}  // namespace covertower
