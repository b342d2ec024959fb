#include "covertower/cover_ops.hpp"

#include <limits>

namespace covertower {

namespace {

void require_same_base(const CoverSpec& a, const CoverSpec& b) {
  if (a.base() != b.base()) {
    throw Error(ErrorCode::BaseMismatch, "covers over different base surfaces");
  }
}

}  // namespace

std::vector<int> CoverArrow::fiber(int t) const {
  std::vector<int> out;
  for (std::size_t s = 0; s < sheet_map.size(); ++s) {
    if (sheet_map[s] == t) out.push_back(static_cast<int>(s));
  }
  return out;
}

std::optional<CoverArrow> factors_through(const CoverSpec& fine,
                                          const CoverSpec& coarse) {
  require_same_base(fine, coarse);
  if (fine.degree() % coarse.degree() != 0) return std::nullopt;
  for (int e = 0; e < fine.num_edges(); ++e) {
    if (fine.is_tree_edge(e)) continue;
    if (!coarse.contains(fine.schreier_generator(e))) return std::nullopt;
  }
  std::vector<int> map(static_cast<std::size_t>(fine.degree()));
  for (int s = 0; s < fine.degree(); ++s) {
    map[static_cast<std::size_t>(s)] = coarse.act(0, fine.transversal(s));
  }
  return CoverArrow{fine, coarse, std::move(map)};
}

CoverArrow arrow_to(const CoverSpec& fine, const CoverSpec& coarse) {
  auto arrow = factors_through(fine, coarse);
  if (!arrow) {
    throw Error(ErrorCode::NotARefinement,
                "cover does not factor through the requested cover");
  }
  return std::move(*arrow);
}

CoverArrow identity_arrow(const CoverSpec& c) {
  std::vector<int> map(static_cast<std::size_t>(c.degree()));
  for (int s = 0; s < c.degree(); ++s) map[static_cast<std::size_t>(s)] = s;
  return CoverArrow{c, c, std::move(map)};
}

CoverArrow arrow_to_base(const CoverSpec& c) {
  return CoverArrow{c, CoverSpec::trivial(c.base()),
                    std::vector<int>(static_cast<std::size_t>(c.degree()), 0)};
}

CoverArrow compose_arrows(const CoverArrow& g, const CoverArrow& f) {
  if (f.to != g.from) {
    throw Error(ErrorCode::BaseMismatch, "arrows are not composable");
  }
  std::vector<int> map(f.sheet_map.size());
  for (std::size_t s = 0; s < map.size(); ++s) {
    map[s] = g.sheet_map[static_cast<std::size_t>(f.sheet_map[s])];
  }
  return CoverArrow{f.from, g.to, std::move(map)};
}

FiberProduct fiber_product_with_arrows(const CoverSpec& p, const CoverSpec& q) {
  require_same_base(p, q);
  auto [cover, states] = cover_from_action<std::pair<int, int>, SheetPairHash>(
      p.base(), std::pair{0, 0},
      [&](const std::pair<int, int>& st, int k) {
        return std::pair{p.act(st.first, k), q.act(st.second, k)};
      },
      std::numeric_limits<std::uint64_t>::max());
  std::vector<int> left(states.size());
  std::vector<int> right(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    left[i] = states[i].first;
    right[i] = states[i].second;
  }
  CoverArrow to_left{cover, p, std::move(left)};
  CoverArrow to_right{cover, q, std::move(right)};
  return FiberProduct{std::move(cover), std::move(to_left), std::move(to_right)};
}

CoverSpec fiber_product(const CoverSpec& p, const CoverSpec& q) {
  return fiber_product_with_arrows(p, q).cover;
}

}  // namespace covertower
