#include "covertower/cover.hpp"

#include <algorithm>
#include <string>

namespace covertower {

namespace {

bool is_permutation_of_range(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)]) {
      return false;
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

Perm invert(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

// Breadth-first labelling from sheet 0 over columns x1, x1^-1, x2, ...
std::vector<int> bfs_relabel(const std::vector<Perm>& perms,
                             const std::vector<Perm>& inv) {
  const std::size_t d = perms[0].size();
  std::vector<int> relabel(d, -1);
  std::vector<int> order{0};
  relabel[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto s = static_cast<std::size_t>(order[i]);
    for (std::size_t k = 0; k < perms.size(); ++k) {
      for (const Perm* p : {&perms[k], &inv[k]}) {
        const int t = (*p)[s];
        if (relabel[static_cast<std::size_t>(t)] < 0) {
          relabel[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
          order.push_back(t);
        }
      }
    }
  }
  return relabel;
}

}  // namespace

std::optional<Error> validate_cover(const Surface& base,
                                    std::span<const Perm> perms) {
  if (static_cast<int>(perms.size()) != base.num_generators()) {
    return Error(ErrorCode::BadDegree,
                 "expected " + std::to_string(base.num_generators()) +
                     " permutations, got " + std::to_string(perms.size()));
  }
  const std::size_t d = perms[0].size();
  if (d == 0) return Error(ErrorCode::BadDegree, "degree must be at least 1");
  for (const auto& p : perms) {
    if (p.size() != d || !is_permutation_of_range(p)) {
      return Error(ErrorCode::BadDegree,
                   "generator images are not permutations of one sheet set");
    }
  }
  std::vector<Perm> inv;
  for (const auto& p : perms) inv.push_back(invert(p));
  const auto rel = surface_relator(base);
  for (std::size_t s = 0; s < d; ++s) {
    int t = static_cast<int>(s);
    for (Letter x : rel.letters()) {
      t = x > 0 ? perms[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(t)]
                : inv[static_cast<std::size_t>(-x - 1)][static_cast<std::size_t>(t)];
    }
    if (t != static_cast<int>(s)) {
      return Error(ErrorCode::RelatorNotTrivial,
                   "relator moves sheet " + std::to_string(s + 1));
    }
  }
  const std::vector<Perm> all(perms.begin(), perms.end());
  const auto relabel = bfs_relabel(all, inv);
  if (std::find(relabel.begin(), relabel.end(), -1) != relabel.end()) {
    return Error(ErrorCode::NotTransitive, "generated group is not transitive");
  }
  return std::nullopt;
}

std::pair<CoverSpec, std::vector<int>> CoverSpec::from_loose(
    Surface base, std::vector<Perm> perms) {
  if (auto err = validate_cover(base, perms)) throw *err;
  std::vector<Perm> inv;
  for (const auto& p : perms) inv.push_back(invert(p));
  auto relabel = bfs_relabel(perms, inv);
  std::vector<Perm> canon(perms.size(), Perm(perms[0].size()));
  for (std::size_t k = 0; k < perms.size(); ++k) {
    for (std::size_t s = 0; s < perms[k].size(); ++s) {
      canon[k][static_cast<std::size_t>(relabel[s])] =
          relabel[static_cast<std::size_t>(perms[k][s])];
    }
  }
  return {CoverSpec(Canonical{}, std::move(base), std::move(canon)),
          std::move(relabel)};
}

CoverSpec::CoverSpec(Surface base, std::vector<Perm> perms)
    : CoverSpec(from_loose(std::move(base), std::move(perms)).first) {}

CoverSpec::CoverSpec(Canonical, Surface base, std::vector<Perm> perms)
    : base_(std::move(base)), perms_(std::move(perms)) {
  for (const auto& p : perms_) inverse_perms_.push_back(invert(p));
  build_tree();
}

CoverSpec CoverSpec::trivial(const Surface& base) {
  return CoverSpec(Canonical{}, base,
                   std::vector<Perm>(static_cast<std::size_t>(base.num_generators()), Perm{0}));
}

void CoverSpec::build_tree() {
  const int d = degree();
  transversal_.assign(static_cast<std::size_t>(d), GroupWord{});
  tree_edge_.assign(static_cast<std::size_t>(num_edges()), 0);
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  seen[0] = 1;
  // Canonical labels are already breadth-first, so sheets are visited in
  // increasing order.
  for (int s = 0; s < d; ++s) {
    for (int k = 1; k <= base_.num_generators(); ++k) {
      for (Letter x : {k, -k}) {
        const int t = act(s, x);
        if (seen[static_cast<std::size_t>(t)]) continue;
        seen[static_cast<std::size_t>(t)] = 1;
        transversal_[static_cast<std::size_t>(t)] =
            transversal_[static_cast<std::size_t>(s)] * GroupWord{x};
        tree_edge_[static_cast<std::size_t>(x > 0 ? edge_id(k, s) : edge_id(k, t))] = 1;
      }
    }
  }
}

int CoverSpec::act(int sheet, const GroupWord& w) const {
  for (Letter x : w.letters()) {
    if (!base_.contains(x)) {
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "letter " + std::to_string(x) + " out of range");
    }
    sheet = act(sheet, x);
  }
  return sheet;
}

GroupWord CoverSpec::schreier_generator(int edge) const {
  const int k = edge_generator(edge);
  const int s = edge_sheet(edge);
  return transversal(s) * GroupWord{k} * transversal(act(s, k)).inverse();
}

std::size_t CoverHash::operator()(const CoverSpec& c) const noexcept {
  std::size_t h = std::hash<int>{}(c.base().genus());
  for (const auto& p : c.perms()) {
    for (int x : p) h = h * 1000003u ^ std::hash<int>{}(x);
  }
  return h;
}

EdgePath trace_edges(const CoverSpec& c, const GroupWord& w, int start_sheet) {
  EdgePath path;
  int s = start_sheet;
  path.steps.reserve(w.size());
  for (Letter x : w.letters()) {
    if (!c.base().contains(x)) {
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "letter " + std::to_string(x) + " out of range");
    }
    if (x > 0) {
      path.steps.emplace_back(c.edge_id(x, s), 1);
      s = c.act(s, x);
    } else {
      s = c.act(s, x);
      path.steps.emplace_back(c.edge_id(-x, s), -1);
    }
  }
  path.end_sheet = s;
  return path;
}

GroupWord substitute_along(const CoverSpec& c, const GroupWord& w,
                           std::span<const GroupWord> edge_images,
                           int start_sheet) {
  if (static_cast<int>(edge_images.size()) != c.num_edges()) {
    throw Error(ErrorCode::DimensionMismatch, "one image per edge required");
  }
  GroupWord out;
  for (auto [edge, sign] : trace_edges(c, w, start_sheet).steps) {
    const auto& img = edge_images[static_cast<std::size_t>(edge)];
    out *= sign > 0 ? img : img.inverse();
  }
  return out;
}

}  // namespace covertower
