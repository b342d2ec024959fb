#include "covertower/automorphism.hpp"

#include <string>

namespace covertower {

GroupWord SurfaceAutomorphism::apply(const GroupWord& w) const {
  return substitute(w, images);
}

GroupWord SurfaceAutomorphism::apply_inverse(const GroupWord& w) const {
  if (!has_inverse()) {
    throw Error(ErrorCode::InvalidAutomorphism,
                "automorphism '" + name + "' has no inverse images");
  }
  return substitute(w, inverse_images);
}

std::vector<std::vector<std::int64_t>> SurfaceAutomorphism::abelianization()
    const {
  const int n = surface.num_generators();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (int k = 0; k < n; ++k) {
    const auto col = covertower::abelianize(surface, images[k]);
    for (int i = 0; i < n; ++i) m[i][k] = col.coords[i];
  }
  return m;
}

HomologyClass SurfaceAutomorphism::act_on_homology(
    const HomologyClass& h) const {
  if (static_cast<int>(h.size()) != surface.homology_rank()) {
    throw Error(ErrorCode::DimensionMismatch, "homology class size");
  }
  const auto m = abelianization();
  auto out = HomologyClass::zero(surface);
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t k = 0; k < h.size(); ++k) {
      out.coords[i] += m[i][k] * h.coords[k];
    }
  }
  return out;
}

std::optional<Error> check_automorphism(const SurfaceAutomorphism& a) {
  const int n = a.surface.num_generators();
  if (static_cast<int>(a.images.size()) != n) {
    return Error(ErrorCode::InvalidAutomorphism,
                 "'" + a.name + "' needs " + std::to_string(n) + " images");
  }
  for (const auto& w : a.images) {
    for (Letter x : w.letters()) {
      if (!a.surface.contains(x)) {
        return Error(ErrorCode::InvalidAutomorphism,
                     "'" + a.name + "' image uses letter " + std::to_string(x));
      }
    }
  }
  const auto rel = surface_relator(a.surface);
  if (!free_conjugacy_sign(a.apply(rel), rel)) {
    return Error(ErrorCode::InvalidAutomorphism,
                 "'" + a.name + "' does not map the relator to a conjugate");
  }
  if (a.has_inverse()) {
    if (static_cast<int>(a.inverse_images.size()) != n) {
      return Error(ErrorCode::InvalidAutomorphism,
                   "'" + a.name + "' inverse has wrong arity");
    }
    for (int k = 1; k <= n; ++k) {
      const GroupWord x{k};
      if (a.apply(a.apply_inverse(x)) != x || a.apply_inverse(a.apply(x)) != x) {
        return Error(ErrorCode::InvalidAutomorphism,
                     "'" + a.name + "' inverse images do not invert");
      }
    }
  }
  return std::nullopt;
}

int orientation_sign(const SurfaceAutomorphism& a) {
  const auto rel = surface_relator(a.surface);
  const auto sign = free_conjugacy_sign(a.apply(rel), rel);
  if (!sign) {
    throw Error(ErrorCode::InvalidAutomorphism,
                "'" + a.name + "' does not map the relator to a conjugate");
  }
  return *sign;
}

SurfaceAutomorphism identity_automorphism(const Surface& s) {
  SurfaceAutomorphism a{"id", s, {}, {}};
  for (int k = 1; k <= s.num_generators(); ++k) {
    a.images.push_back(GroupWord{k});
    a.inverse_images.push_back(GroupWord{k});
  }
  return a;
}

SurfaceAutomorphism inverse(const SurfaceAutomorphism& a) {
  if (!a.has_inverse()) {
    throw Error(ErrorCode::InvalidAutomorphism,
                "'" + a.name + "' has no inverse images");
  }
  return SurfaceAutomorphism{a.name + "^-1", a.surface, a.inverse_images,
                             a.images};
}

SurfaceAutomorphism compose(const SurfaceAutomorphism& outer,
                            const SurfaceAutomorphism& inner) {
  if (outer.surface != inner.surface) {
    throw Error(ErrorCode::BaseMismatch, "automorphisms of different surfaces");
  }
  SurfaceAutomorphism out{outer.name + "*" + inner.name, outer.surface, {}, {}};
  for (const auto& w : inner.images) out.images.push_back(outer.apply(w));
  if (outer.has_inverse() && inner.has_inverse()) {
    for (const auto& w : outer.inverse_images) {
      out.inverse_images.push_back(inner.apply_inverse(w));
    }
  }
  return out;
}

namespace {

SurfaceAutomorphism base_identity(const Surface& s, std::string name) {
  auto a = identity_automorphism(s);
  a.name = std::move(name);
  return a;
}

void check_handle(const Surface& s, int handle) {
  if (handle < 1 || handle > s.genus()) {
    throw Error(ErrorCode::GeneratorOutOfRange,
                "handle " + std::to_string(handle) + " out of range");
  }
}

}  // namespace

SurfaceAutomorphism twist_a(const Surface& s, int handle) {
  check_handle(s, handle);
  auto t = base_identity(s, "Ta" + std::to_string(handle));
  const Letter a = letter_a(handle);
  const Letter b = letter_b(handle);
  t.images[b - 1] = GroupWord{b, a};
  t.inverse_images[b - 1] = GroupWord{b, -a};
  return t;
}

SurfaceAutomorphism twist_b(const Surface& s, int handle) {
  check_handle(s, handle);
  auto t = base_identity(s, "Tb" + std::to_string(handle));
  const Letter a = letter_a(handle);
  const Letter b = letter_b(handle);
  t.images[a - 1] = GroupWord{a, b};
  t.inverse_images[a - 1] = GroupWord{a, -b};
  return t;
}

SurfaceAutomorphism handle_rotation(const Surface& s, int handle) {
  check_handle(s, handle);
  auto t = base_identity(s, "R" + std::to_string(handle));
  const Letter a = letter_a(handle);
  const Letter b = letter_b(handle);
  t.images[a - 1] = GroupWord{a, b, -a};
  t.images[b - 1] = GroupWord{-a};
  t.inverse_images[a - 1] = GroupWord{-b};
  t.inverse_images[b - 1] = GroupWord{b, a, -b};
  return t;
}

std::vector<SurfaceAutomorphism> genus2_automorphisms() {
  const Surface s(2);
  constexpr Letter a1 = letter_a(1), b1 = letter_b(1);
  constexpr Letter a2 = letter_a(2), b2 = letter_b(2);

  std::vector<SurfaceAutomorphism> list;
  list.push_back(twist_b(s, 1));
  list.push_back(twist_a(s, 1));

  // Twist along the chain curve of class b1 - b2 linking the two handles.
  auto mix = base_identity(s, "Tc");
  mix.images[a1 - 1] = GroupWord{-b1, -b2, a1, b1, b1};
  mix.images[a2 - 1] = GroupWord{-b2, -b1, a2, b2, b2};
  mix.inverse_images[a1 - 1] = GroupWord{b2, b1, a1, -b1, -b1};
  mix.inverse_images[a2 - 1] = GroupWord{b1, b2, a2, -b2, -b2};
  list.push_back(std::move(mix));

  list.push_back(twist_a(s, 2));
  list.push_back(twist_b(s, 2));

  SurfaceAutomorphism swap{"S12", s, {}, {}};
  swap.images = {GroupWord{a2}, GroupWord{b2}, GroupWord{a1}, GroupWord{b1}};
  swap.inverse_images = swap.images;
  list.push_back(std::move(swap));

  SurfaceAutomorphism flip{"J", s, {}, {}};
  flip.images = {GroupWord{-a2}, GroupWord{a2, b2, -a2}, GroupWord{-a1},
                 GroupWord{a1, b1, -a1}};
  flip.inverse_images = flip.images;
  list.push_back(std::move(flip));
  return list;
}

std::vector<SurfaceAutomorphism> default_automorphisms(const Surface& s) {
  if (s.genus() == 2) return genus2_automorphisms();
  std::vector<SurfaceAutomorphism> list;
  for (int i = 1; i <= s.genus(); ++i) {
    list.push_back(twist_a(s, i));
    list.push_back(twist_b(s, i));
    list.push_back(handle_rotation(s, i));
  }
  return list;
}

}  // namespace covertower
