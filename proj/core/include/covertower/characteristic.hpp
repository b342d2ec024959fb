#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covertower/automorphism.hpp"
#include "covertower/config.hpp"
#include "covertower/cover.hpp"

namespace covertower {

/// Cover of a^-1(Stab c): generator x acts as the word a(x) does on c.
/// Throws InvalidAutomorphism if those permutations do not kill the relator.
CoverSpec pull_back(const CoverSpec& c, const SurfaceAutomorphism& a);

/// The same cover pointed at `sheet`, i.e. the conjugate subgroup.
CoverSpec repoint(const CoverSpec& c, int sheet);

/// Orbit of c under conjugation and pull-back by each automorphism, sorted.
std::vector<CoverSpec> automorphism_orbit(const CoverSpec& c,
                                          const std::vector<SurfaceAutomorphism>& auts);

/// Why a subgroup fails to be invariant: `moved_by` (a generator letter
/// for conjugation, or an automorphism name) sends `element` out of it.
struct InvarianceWitness {
  std::string moved_by;
  GroupWord element;
};

/// nullopt iff is_characteristic. Throws InvalidAutomorphism.
std::optional<InvarianceWitness> invariance_witness(
    const CoverSpec& c, const std::vector<SurfaceAutomorphism>& auts);

/// True iff Stab(c) is normal and a(h) lies in it for every Schreier
/// generator h and every supplied automorphism a. Relative to the supplied
/// list only. Throws InvalidAutomorphism.
bool is_characteristic(const CoverSpec& c, const std::vector<SurfaceAutomorphism>& auts);

/// Intersection of the subgroups in automorphism_orbit(c, auts): the
/// smallest cover through c whose subgroup is normal and invariant under the
/// supplied automorphisms. Throws SearchBudgetExceeded when an intermediate
/// product exceeds `max_degree` sheets.
CoverSpec characteristic_refinement(const CoverSpec& c,
                                    const std::vector<SurfaceAutomorphism>& auts,
                                    std::uint64_t max_degree = default_degree_budget());

}  // namespace covertower
