#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "covertower/error.hpp"
#include "covertower/surface.hpp"

namespace covertower {

/// Permutation of {0,...,d-1}: perm[s] is the image of sheet s.
using Perm = std::vector<int>;

/// Checks the representation conditions for 2g generator permutations.
/// Returns BadDegree (malformed permutations), RelatorNotTrivial or
/// NotTransitive; nullopt when the data describes a connected cover.
std::optional<Error> validate_cover(const Surface& base,
                                    std::span<const Perm> perms);

/// A finite pointed cover of a closed surface, stored as the canonical
/// transitive permutation representation of pi_1 on the sheets with the
/// basepoint on sheet 0 (sheet 1 in documents).
///
/// The right action reads words left to right: sheet s moves along the lift
/// of generator k to perm(k)[s]. Stab(0) is the subgroup of the cover.
/// Canonical labelling numbers sheets in breadth-first order from sheet 0,
/// scanning columns a1, a1^-1, b1, b1^-1, ... at each sheet; two covers are
/// pointed-isomorphic iff their canonical forms are equal.
class CoverSpec {
 public:
  /// Validates and canonicalizes. Throws Error on invalid data.
  CoverSpec(Surface base, std::vector<Perm> perms);

  /// Canonicalizes loose input and reports relabel[old_sheet] = new_sheet.
  static std::pair<CoverSpec, std::vector<int>> from_loose(
      Surface base, std::vector<Perm> perms);

  static CoverSpec trivial(const Surface& base);

  const Surface& base() const noexcept { return base_; }
  int degree() const noexcept { return static_cast<int>(perms_[0].size()); }
  /// d (g - 1) + 1.
  int genus() const noexcept { return degree() * (base_.genus() - 1) + 1; }
  Surface total_surface() const { return Surface(genus()); }

  /// Permutation of generator k in 1..2g.
  const Perm& perm(int k) const { return perms_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<Perm>& perms() const noexcept { return perms_; }

  int act(int sheet, Letter x) const {
    return x > 0 ? perms_[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(sheet)]
                 : inverse_perms_[static_cast<std::size_t>(-x - 1)][static_cast<std::size_t>(sheet)];
  }
  int act(int sheet, const GroupWord& w) const;
  /// True iff w lies in the subgroup, i.e. fixes the basepoint sheet.
  bool contains(const GroupWord& w) const { return act(0, w) == 0; }

  // Edges of the lifted one-vertex complex: edge (k, s) runs from sheet s to
  // perm(k)[s]. Edge ids are (k-1)*d + s.
  int num_edges() const noexcept { return base_.num_generators() * degree(); }
  int edge_id(int k, int sheet) const noexcept { return (k - 1) * degree() + sheet; }
  int edge_generator(int edge) const noexcept { return edge / degree() + 1; }
  int edge_sheet(int edge) const noexcept { return edge % degree(); }
  int edge_target(int edge) const { return act(edge_sheet(edge), edge_generator(edge)); }

  /// Breadth-first transversal word u_s with 0 . u_s = s.
  const GroupWord& transversal(int sheet) const {
    return transversal_.at(static_cast<std::size_t>(sheet));
  }
  /// Edges of the breadth-first spanning tree of the Schreier graph.
  bool is_tree_edge(int edge) const { return tree_edge_.at(static_cast<std::size_t>(edge)) != 0; }
  /// Schreier generator u_s x u_{s.x}^-1 of edge (k, s); empty on tree edges.
  GroupWord schreier_generator(int edge) const;

  friend bool operator==(const CoverSpec& a, const CoverSpec& b) {
    return a.base_ == b.base_ && a.perms_ == b.perms_;
  }
  friend std::strong_ordering operator<=>(const CoverSpec& a,
                                          const CoverSpec& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.perms_ <=> b.perms_;
  }

 private:
  struct Canonical {};
  CoverSpec(Canonical, Surface base, std::vector<Perm> perms);
  void build_tree();

  Surface base_;
  std::vector<Perm> perms_;
  std::vector<Perm> inverse_perms_;
  std::vector<GroupWord> transversal_;
  std::vector<char> tree_edge_;
};

struct CoverHash {
  std::size_t operator()(const CoverSpec& c) const noexcept;
};

struct SheetPairHash {
  std::size_t operator()(const std::pair<int, int>& p) const noexcept {
    return std::hash<long long>{}(static_cast<long long>(p.first) << 32 ^
                                  static_cast<unsigned>(p.second));
  }
};

/// Reidemeister-Schreier rewriting: traces w from `start_sheet` and returns
/// the sequence of (edge id, +1/-1) crossed, plus the final sheet.
struct EdgePath {
  std::vector<std::pair<int, int>> steps;
  int end_sheet = 0;
};
EdgePath trace_edges(const CoverSpec& c, const GroupWord& w, int start_sheet = 0);

/// Traces w through c from `start_sheet` and concatenates edge_images[edge]
/// (inverted on backward crossings). Free-reduces the result.
GroupWord substitute_along(const CoverSpec& c, const GroupWord& w,
                           std::span<const GroupWord> edge_images,
                           int start_sheet = 0);

/// Builds the cover generated by a (possibly intransitive) action of the
/// surface group on hashable states: the orbit of `start` under the
/// generators. `step(state, k)` applies generator k (1..2g). Returns the
/// canonical cover and the state sitting on each canonical sheet. Throws
/// SearchBudgetExceeded if the orbit exceeds `max_degree`.
template <class State, class Hash, class Step>
std::pair<CoverSpec, std::vector<State>> cover_from_action(
    const Surface& base, const State& start, Step&& step,
    std::uint64_t max_degree) {
  std::unordered_map<State, int, Hash> index;
  std::vector<State> states{start};
  index.emplace(start, 0);
  const int ngen = base.num_generators();
  std::vector<Perm> perms(static_cast<std::size_t>(ngen));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (int k = 1; k <= ngen; ++k) {
      State next = step(states[i], k);
      auto [it, inserted] = index.emplace(next, static_cast<int>(states.size()));
      if (inserted) {
        if (states.size() >= max_degree) {
          throw Error(ErrorCode::SearchBudgetExceeded,
                      "orbit larger than " + std::to_string(max_degree));
        }
        states.push_back(std::move(next));
      }
      perms[static_cast<std::size_t>(k - 1)].push_back(it->second);
    }
  }
  auto [cover, relabel] = CoverSpec::from_loose(base, std::move(perms));
  std::vector<State> by_sheet(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    by_sheet[static_cast<std::size_t>(relabel[i])] = std::move(states[i]);
  }
  return {std::move(cover), std::move(by_sheet)};
}

}  // namespace covertower
