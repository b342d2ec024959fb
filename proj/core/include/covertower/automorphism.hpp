#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covertower/error.hpp"
#include "covertower/surface.hpp"

namespace covertower {

/// An automorphism of a surface group given by the images of the 2g
/// generators. `inverse_images` is optional; operations that need the inverse
/// say so.
struct SurfaceAutomorphism {
  std::string name;
  Surface surface;
  std::vector<GroupWord> images;
  std::vector<GroupWord> inverse_images;

  GroupWord apply(const GroupWord& w) const;
  GroupWord apply_inverse(const GroupWord& w) const;
  bool has_inverse() const noexcept { return !inverse_images.empty(); }

  /// Column k is the abelianized image of generator k+1.
  std::vector<std::vector<std::int64_t>> abelianization() const;
  HomologyClass act_on_homology(const HomologyClass& h) const;
};

/// Checks that the images are words over the surface, that the relator maps
/// to a free conjugate of R or R^-1, and (when present) that the inverse
/// images compose with the images to the identity in the free group.
std::optional<Error> check_automorphism(const SurfaceAutomorphism& a);

/// +1 if the relator maps to a conjugate of R, -1 if of R^-1. Throws
/// Error(InvalidAutomorphism) otherwise.
int orientation_sign(const SurfaceAutomorphism& a);

SurfaceAutomorphism identity_automorphism(const Surface& s);
SurfaceAutomorphism inverse(const SurfaceAutomorphism& a);
/// outer o inner: x -> outer(inner(x)).
SurfaceAutomorphism compose(const SurfaceAutomorphism& outer,
                            const SurfaceAutomorphism& inner);

/// Dehn twist along a_i: b_i -> b_i a_i.
SurfaceAutomorphism twist_a(const Surface& s, int handle);
/// Dehn twist along b_i: a_i -> a_i b_i.
SurfaceAutomorphism twist_b(const Surface& s, int handle);
/// Quarter rotation of handle i: a_i -> a_i b_i a_i^-1, b_i -> a_i^-1.
/// On homology a_i -> b_i, b_i -> -a_i.
SurfaceAutomorphism handle_rotation(const Surface& s, int handle);

/// Generating list for genus 2: twists along the Humphries chain
/// b1, a1, b1-b2, a2, b2, the handle swap, and an orientation-reversing
/// involution. Every entry carries its inverse.
std::vector<SurfaceAutomorphism> genus2_automorphisms();

/// genus2_automorphisms() in genus 2; otherwise the twists along every a_i
/// and b_i plus every handle rotation.
std::vector<SurfaceAutomorphism> default_automorphisms(const Surface& s);

}  // namespace covertower
