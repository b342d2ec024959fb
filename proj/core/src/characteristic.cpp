#include "covertower/characteristic.hpp"

#include <algorithm>
#include <set>

#include "covertower/cover_ops.hpp"

namespace covertower {

namespace {

std::vector<Perm> pushed_perms(const CoverSpec& c, const SurfaceAutomorphism& a) {
  if (auto err = check_automorphism(a)) throw Error(ErrorCode::InvalidAutomorphism, err->what());
  if (a.surface != c.base()) {
    throw Error(ErrorCode::InvalidAutomorphism, "'" + a.name + "' acts on another surface");
  }
  std::vector<Perm> perms;
  for (const auto& w : a.images) {
    Perm p(static_cast<std::size_t>(c.degree()));
    for (int s = 0; s < c.degree(); ++s) p[static_cast<std::size_t>(s)] = c.act(s, w);
    perms.push_back(std::move(p));
  }
  if (validate_cover(c.base(), perms)) {
    throw Error(ErrorCode::InvalidAutomorphism,
                "'" + a.name + "' does not induce a representation of the cover");
  }
  return perms;
}

CoverSpec bounded_product(const CoverSpec& p, const CoverSpec& q, std::uint64_t max_degree) {
  return cover_from_action<std::pair<int, int>, SheetPairHash>(
             p.base(), std::pair{0, 0},
             [&](const std::pair<int, int>& st, int k) {
               return std::pair{p.act(st.first, k), q.act(st.second, k)};
             },
             max_degree)
      .first;
}

}  // namespace

CoverSpec pull_back(const CoverSpec& c, const SurfaceAutomorphism& a) {
  return CoverSpec::from_loose(c.base(), pushed_perms(c, a)).first;
}

CoverSpec repoint(const CoverSpec& c, int sheet) {
  return cover_from_action<int, std::hash<int>>(
             c.base(), sheet, [&](int s, int k) { return c.act(s, k); },
             static_cast<std::uint64_t>(c.degree()))
      .first;
}

std::vector<CoverSpec> automorphism_orbit(const CoverSpec& c,
                                          const std::vector<SurfaceAutomorphism>& auts) {
  std::set<CoverSpec> seen{c};
  std::vector<CoverSpec> queue{c};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto cur = queue[i];
    std::vector<CoverSpec> next;
    for (int k = 1; k <= cur.base().num_generators(); ++k) next.push_back(repoint(cur, cur.act(0, k)));
    for (const auto& a : auts) next.push_back(pull_back(cur, a));
    for (auto& n : next) {
      if (seen.insert(n).second) queue.push_back(std::move(n));
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<InvarianceWitness> invariance_witness(
    const CoverSpec& c, const std::vector<SurfaceAutomorphism>& auts) {
  for (const auto& a : auts) (void)pushed_perms(c, a);
  std::vector<GroupWord> gens;
  for (int e = 0; e < c.num_edges(); ++e) {
    if (!c.is_tree_edge(e)) gens.push_back(c.schreier_generator(e));
  }
  for (int k = 1; k <= c.base().num_generators(); ++k) {
    for (Letter x : {k, -k}) {
      for (const auto& h : gens) {
        if (!c.contains(GroupWord{-x} * h * GroupWord{x})) {
          return InvarianceWitness{"conjugation by " + std::to_string(x), h};
        }
      }
    }
  }
  for (const auto& a : auts) {
    for (const auto& h : gens) {
      if (!c.contains(a.apply(h))) return InvarianceWitness{a.name, h};
    }
  }
  return std::nullopt;
}

bool is_characteristic(const CoverSpec& c, const std::vector<SurfaceAutomorphism>& auts) {
  return !invariance_witness(c, auts).has_value();
}

CoverSpec characteristic_refinement(const CoverSpec& c,
                                    const std::vector<SurfaceAutomorphism>& auts,
                                    std::uint64_t max_degree) {
  if (static_cast<std::uint64_t>(c.degree()) > max_degree) {
    throw Error(ErrorCode::SearchBudgetExceeded, "input exceeds the degree budget");
  }
  auto result = c;
  for (const auto& m : automorphism_orbit(c, auts)) {
    if (factors_through(result, m)) continue;
    result = bounded_product(result, m, max_degree);
  }
  return result;
}

}  // namespace covertower
