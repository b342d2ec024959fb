#include "covertower/vaut.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "covertower/characteristic.hpp"
#include "covertower/registry.hpp"

namespace covertower {

namespace {

Error bad(const std::string& what) { return Error(ErrorCode::InvalidIdentification, what); }

std::optional<Error> check_side(const CoverSpec& src, const CoverSpec& dst,
                                const std::vector<GroupWord>& images,
                                const std::vector<GroupWord>& back, const char* name) {
  const std::string side(name);
  for (int e = 0; e < src.num_edges(); ++e) {
    const auto& w = images[static_cast<std::size_t>(e)];
    try {
      if (reduce_word(src.base(), w) != w) return bad(side + " image not freely reduced");
    } catch (const Error&) {
      return bad(side + " image uses a letter outside the base");
    }
    if (src.is_tree_edge(e) && !w.empty()) return bad(side + " image of a tree edge");
    if (!dst.contains(w)) {
      return bad(side + " image of edge " + std::to_string(e) + " leaves the subgroup");
    }
  }
  auto& reg = CoverRegistry::global();
  const auto ksrc = reg.complex(src);
  const auto kdst = reg.complex(dst);
  const auto rel = surface_relator(src.base());
  for (int f = 0; f < src.degree(); ++f) {
    const auto img = substitute_along(src, rel, images, f);
    if (!is_boundary(CoverCycle(kdst, kdst->path_chain(img)))) {
      return bad(side + " map sends face " + std::to_string(f) + " to an essential loop");
    }
  }
  for (int e = 0; e < src.num_edges(); ++e) {
    if (src.is_tree_edge(e)) continue;
    const auto round = substitute_along(dst, images[static_cast<std::size_t>(e)], back);
    auto diff = ksrc->path_chain(round);
    const auto orig = ksrc->path_chain(src.schreier_generator(e));
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= orig[i];
    if (!is_boundary(CoverCycle(ksrc, std::move(diff)))) {
      return bad(side + " round trip moves the class of edge " + std::to_string(e));
    }
  }
  return std::nullopt;
}

std::vector<GroupWord> generator_images(const Surface& s) {
  std::vector<GroupWord> out;
  for (int k = 1; k <= s.num_generators(); ++k) out.push_back(GroupWord{k});
  return out;
}

}  // namespace

std::optional<Error> validate_vaut(const TwoArrowVaut& v) {
  if (v.left.base() != v.right.base()) {
    return Error(ErrorCode::BaseMismatch, "arrows over different bases");
  }
  if (v.left.degree() != v.right.degree()) {
    return Error(ErrorCode::GenusMismatch, "arrows have different total genus");
  }
  if (static_cast<int>(v.forward.size()) != v.left.num_edges() ||
      static_cast<int>(v.backward.size()) != v.right.num_edges()) {
    return bad("one image per edge required");
  }
  if (auto err = check_side(v.left, v.right, v.forward, v.backward, "forward")) return err;
  return check_side(v.right, v.left, v.backward, v.forward, "backward");
}

TwoArrowVaut make_vaut(CoverSpec left, CoverSpec right, std::vector<GroupWord> forward,
                       std::vector<GroupWord> backward) {
  TwoArrowVaut v{std::move(left), std::move(right), std::move(forward), std::move(backward)};
  if (auto err = validate_vaut(v)) throw *err;
  return v;
}

TwoArrowVaut identity_vaut(const Surface& base) {
  auto t = CoverSpec::trivial(base);
  return TwoArrowVaut{t, t, generator_images(base), generator_images(base)};
}

TwoArrowVaut vaut_from_automorphism(const SurfaceAutomorphism& a) {
  return restrict_automorphism(a, CoverSpec::trivial(a.surface));
}

TwoArrowVaut restrict_automorphism(const SurfaceAutomorphism& a, const CoverSpec& c) {
  if (!a.has_inverse()) {
    throw Error(ErrorCode::InvalidAutomorphism, a.name + " has no inverse images");
  }
  if (a.surface != c.base()) throw Error(ErrorCode::BaseMismatch, "automorphism of another surface");
  auto right = cover_from_action<int, std::hash<int>>(
                   c.base(), 0,
                   [&](int s, int k) {
                     return c.act(s, a.inverse_images[static_cast<std::size_t>(k - 1)]);
                   },
                   static_cast<std::uint64_t>(c.degree()))
                   .first;
  std::vector<GroupWord> fwd, bwd;
  for (int e = 0; e < c.num_edges(); ++e) fwd.push_back(a.apply(c.schreier_generator(e)));
  for (int e = 0; e < right.num_edges(); ++e) {
    bwd.push_back(a.apply_inverse(right.schreier_generator(e)));
  }
  return make_vaut(c, std::move(right), std::move(fwd), std::move(bwd));
}

TwoArrowVaut vaut_from_markings(const Marking& left, const Marking& right) {
  if (left.total != right.total) {
    throw Error(ErrorCode::GenusMismatch, "markings of surfaces of different genus");
  }
  std::vector<GroupWord> fwd, bwd;
  for (const auto& w : left.to_total) fwd.push_back(substitute(w, right.from_total));
  for (const auto& w : right.to_total) bwd.push_back(substitute(w, left.from_total));
  return make_vaut(left.cover, right.cover, std::move(fwd), std::move(bwd));
}

Transport transport(const CoverSpec& a, const std::vector<GroupWord>& images,
                    const CoverSpec& fine) {
  const auto bound =
      static_cast<std::uint64_t>(a.degree()) * static_cast<std::uint64_t>(fine.degree());
  auto [cover, states] = cover_from_action<std::pair<int, int>, SheetPairHash>(
      a.base(), std::pair{0, 0},
      [&](const std::pair<int, int>& st, int k) {
        const auto& w = images[static_cast<std::size_t>(a.edge_id(k, st.first))];
        return std::pair{a.act(st.first, k), fine.act(st.second, w)};
      },
      bound);
  return Transport{std::move(cover), std::move(states)};
}

TwoArrowVaut restrict_vaut(const TwoArrowVaut& v, const CoverSpec& finer) {
  (void)arrow_to(finer, v.left);
  auto right = transport(v.right, v.backward, finer).cover;
  std::vector<GroupWord> fwd, bwd;
  for (int e = 0; e < finer.num_edges(); ++e) {
    fwd.push_back(substitute_along(v.left, finer.schreier_generator(e), v.forward));
  }
  for (int e = 0; e < right.num_edges(); ++e) {
    bwd.push_back(substitute_along(v.right, right.schreier_generator(e), v.backward));
  }
  return make_vaut(finer, std::move(right), std::move(fwd), std::move(bwd));
}

TwoArrowVaut vaut_inverse(const TwoArrowVaut& v) {
  return TwoArrowVaut{v.right, v.left, v.backward, v.forward};
}

TwoArrowVaut vaut_compose(const TwoArrowVaut& v1, const TwoArrowVaut& v2) {
  if (v1.base() != v2.base()) throw Error(ErrorCode::BaseMismatch, "vauts over different bases");
  // v2 lands in the subgroup of N, where v1 is restricted to start.
  const auto n = fiber_product(v2.right, v1.left);
  const auto outer = restrict_vaut(v1, n);
  const auto inner = restrict_vaut(v2, transport(v2.left, v2.forward, n).cover);
  if (inner.right != n) throw bad("vaut is not injective on the common subgroup");
  std::vector<GroupWord> fwd, bwd;
  for (const auto& w : inner.forward) fwd.push_back(substitute_along(n, w, outer.forward));
  for (const auto& w : outer.backward) bwd.push_back(substitute_along(n, w, inner.backward));
  return make_vaut(inner.left, outer.right, std::move(fwd), std::move(bwd));
}

LimitElement vaut_act(const TwoArrowVaut& v, const LimitElement& e) {
  if (e.base() != v.base()) throw Error(ErrorCode::BaseMismatch, "element over another base");
  const auto fp = fiber_product_with_arrows(e.cover(), v.left);
  const auto& w = fp.cover;
  const auto& to_left = fp.to_right.sheet_map;
  const auto lifted = lift_element(e, fp.to_left);
  const auto image = transport(v.right, v.backward, w);
  const auto& w2 = image.cover;
  if (w2.degree() != w.degree()) throw bad("identification does not carry the cover isomorphically");

  std::unordered_map<std::pair<int, int>, int, SheetPairHash> sheet_of;
  for (std::size_t i = 0; i < image.states.size(); ++i) {
    sheet_of.emplace(image.states[i], static_cast<int>(i));
  }
  // Sheet s of W over sheet a of the left cover goes to the image state
  // (a, s.u_a^-1): the right cover's sheets are matched with the left's by
  // their canonical labels, and W's fiber over the left basepoint is kept.
  std::vector<int> vmap(static_cast<std::size_t>(w.degree()));
  for (int s = 0; s < w.degree(); ++s) {
    const int a = to_left[static_cast<std::size_t>(s)];
    const int t = w.act(s, v.left.transversal(a).inverse());
    vmap[static_cast<std::size_t>(s)] = sheet_of.at({a, t});
  }
  auto V = [&](int s) { return vmap[static_cast<std::size_t>(s)]; };
  // Image of edge (k, s) of W, read in W' from V(s): back to the basepoint
  // fiber along the right transversal, across by the forward image of the
  // Schreier generator, and out again.
  auto edge_word = [&](int k, int s) {
    const int a = to_left[static_cast<std::size_t>(s)];
    const int b = v.left.act(a, k);
    const auto f = v.right.transversal(a).inverse() *
                   v.forward[static_cast<std::size_t>(v.left.edge_id(k, a))] *
                   v.right.transversal(b);
    if (w2.act(V(s), f) != V(w.act(s, k))) throw bad("edge images do not close up");
    return f;
  };

  const auto k2 = CoverRegistry::global().complex(w2);
  if (lifted.kind() == PayloadKind::Homology) {
    const auto& z = lifted.cycle();
    std::vector<std::int64_t> chain(static_cast<std::size_t>(w2.num_edges()), 0);
    for (int edge = 0; edge < w.num_edges(); ++edge) {
      const auto c = z.coeffs()[static_cast<std::size_t>(edge)];
      const int k = w.edge_generator(edge);
      const int s = w.edge_sheet(edge);
      if (c == 0) continue;
      const auto f = edge_word(k, s);
      for (auto [e2, sign] : trace_edges(w2, f, V(s)).steps) {
        chain[static_cast<std::size_t>(e2)] += c * sign;
      }
    }
    return LimitElement(CoverCycle(k2, std::move(chain)));
  }

  const auto& [t, weights] = lifted.track();
  std::vector<Switch> switches = t.switches();
  for (auto& sw : switches) sw.sheet = V(sw.sheet);
  std::vector<Branch> branches;
  for (int b = 0; b < t.num_branches(); ++b) {
    const auto& br = t.branches()[static_cast<std::size_t>(b)];
    GroupWord out;
    int s = t.start_sheet(b);
    for (Letter x : br.word.letters()) {
      if (x > 0) {
        out *= edge_word(x, s);
        s = w.act(s, x);
      } else {
        s = w.act(s, x);
        out *= edge_word(-x, s).inverse();
      }
    }
    branches.push_back(Branch{out, br.loop_sheet < 0 ? -1 : V(br.loop_sheet)});
  }

  // Keep the (sheet, parent) ordering that lifting produces.
  std::vector<int> sw_order(switches.size());
  std::iota(sw_order.begin(), sw_order.end(), 0);
  std::stable_sort(sw_order.begin(), sw_order.end(), [&](int i, int j) {
    return switches[static_cast<std::size_t>(i)].sheet < switches[static_cast<std::size_t>(j)].sheet;
  });
  std::vector<int> br_order(branches.size());
  std::iota(br_order.begin(), br_order.end(), 0);
  std::stable_sort(br_order.begin(), br_order.end(),
                   [&](int i, int j) { return V(t.start_sheet(i)) < V(t.start_sheet(j)); });
  std::vector<int> br_new(branches.size());
  for (std::size_t i = 0; i < br_order.size(); ++i) {
    br_new[static_cast<std::size_t>(br_order[i])] = static_cast<int>(i);
  }
  std::vector<Switch> sorted_sw;
  for (int i : sw_order) {
    auto sw = switches[static_cast<std::size_t>(i)];
    for (auto* side : {&sw.side_a, &sw.side_b}) {
      for (auto& h : *side) h.branch = br_new[static_cast<std::size_t>(h.branch)];
    }
    sorted_sw.push_back(std::move(sw));
  }
  std::vector<Branch> sorted_br;
  Weights sorted_w;
  for (int i : br_order) {
    sorted_br.push_back(branches[static_cast<std::size_t>(i)]);
    sorted_w.push_back(weights[static_cast<std::size_t>(i)]);
  }
  return LimitElement(TrainTrack(w2, std::move(sorted_sw), std::move(sorted_br)),
                      std::move(sorted_w));
}

bool pairing_preserved(const TwoArrowVaut& v, const LimitElement& e1, const LimitElement& e2) {
  return normalized_pairing(vaut_act(v, e1), vaut_act(v, e2)) == normalized_pairing(e1, e2);
}

bool is_mapping_class_like(const TwoArrowVaut& v) { return v.left == v.right; }

CautCertificate certify_caut(const TwoArrowVaut& v, const std::vector<SurfaceAutomorphism>& auts,
                             std::uint64_t budget) {
  CautCertificate out;
  try {
    auto k = characteristic_refinement(v.left, auts, budget);
    const auto image = transport(v.right, v.backward, k).cover;
    out.certified = image == k;
    out.reason = out.certified ? "vaut restricts to an automorphism of a characteristic subgroup"
                               : "image of the characteristic refinement differs";
    out.characteristic = std::move(k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
    out.reason = e.what();
  }
  return out;
}

}  // namespace covertower
