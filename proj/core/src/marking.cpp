#include "covertower/marking.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "covertower/homology.hpp"

namespace covertower {

namespace {

using Word = std::vector<int>;  // signed abstract letter ids, never 0

Word inv(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) {
    for (int x : p) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = cat({w});
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo),
              w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word rotate_to(const Word& w, std::size_t start) {
  Word out(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

std::size_t find_letter(const Word& w, int x) {
  auto it = std::find(w.begin(), w.end(), x);
  if (it == w.end()) {
    throw Error(ErrorCode::InvalidIdentification, "polygon lost a letter");
  }
  return static_cast<std::size_t>(it - w.begin());
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
              w.begin() + static_cast<std::ptrdiff_t>(to));
}

// Tracks a one-relator presentation of the subgroup while it is rewritten by
// Nielsen moves. Letter l stands for the subgroup element def[l] (a word in
// the base generators); orig_in_current[o] writes each starting letter o in
// terms of the current letters.
class NormalForm {
 public:
  Word relator;
  std::map<int, GroupWord> def;
  std::map<int, Word> orig_in_current;
  std::vector<std::pair<int, int>> blocks;  // finished (c, d) letter pairs
  int next_id = 0;

  GroupWord expand(const Word& w) const {
    GroupWord out;
    for (int x : w) {
      const auto& d = def.at(std::abs(x));
      out *= x > 0 ? d : d.inverse();
    }
    return out;
  }

  // Replaces `old` by `expr` everywhere; `fresh` is a new letter whose value
  // is `fresh_def` (a word in the letters present before the move).
  void replace(int old, const Word& expr, int fresh, const Word& fresh_def) {
    def[fresh] = expand(fresh_def);
    auto subst = [&](const Word& w) {
      Word out;
      for (int x : w) {
        if (std::abs(x) == old) {
          out = cat({out, x > 0 ? expr : inv(expr)});
        } else {
          out = cat({out, Word{x}});
        }
      }
      return out;
    };
    relator = cyclic_reduce(subst(relator));
    for (auto& [o, w] : orig_in_current) w = subst(w);
    def.erase(old);
  }

  int fresh() { return ++next_id; }

  // New letter equal to old^-1.
  int flip(int old) {
    const int n = fresh();
    replace(old, Word{-n}, n, Word{-old});
    return n;
  }

  std::size_t block_len() const { return 4 * blocks.size(); }

  void rotate_blocks_first() {
    if (blocks.empty()) return;
    relator = rotate_to(relator, find_letter(relator, blocks.front().first));
  }

  void check_blocks() const {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      auto [c, d] = blocks[i];
      const Word expect{c, d, -c, -d};
      if (relator.size() < 4 * (i + 1) ||
          !std::equal(expect.begin(), expect.end(), relator.begin() + static_cast<std::ptrdiff_t>(4 * i))) {
        throw Error(ErrorCode::InvalidIdentification, "normal form lost a handle");
      }
    }
  }

  // One handle: turns an interleaved pair in the unfinished tail into a
  // commutator block placed right after the finished ones.
  void extract_handle() {
    const std::size_t off = block_len();
    const Word tail = slice(relator, off, relator.size());
    // Already standard at the front of the tail: take it as is.
    if (tail.size() >= 4 && tail[0] > 0 && tail[1] > 0 && tail[2] == -tail[0] &&
        tail[3] == -tail[1]) {
      blocks.emplace_back(tail[0], tail[1]);
      return;
    }
    std::vector<std::size_t> partner(tail.size());
    for (std::size_t i = 0; i < tail.size(); ++i) {
      for (std::size_t j = 0; j < tail.size(); ++j) {
        if (tail[j] == -tail[i]) partner[i] = j;
      }
    }
    std::size_t p1 = 0, p2 = 0;
    bool found = false;
    for (std::size_t i = 0; i < tail.size() && !found; ++i) {
      if (partner[i] < i) continue;
      for (std::size_t j = i + 1; j < partner[i]; ++j) {
        if (partner[j] > partner[i]) {
          p1 = i;
          p2 = j;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      throw Error(ErrorCode::InvalidIdentification,
                  "one-face word has no interleaved pair");
    }
    int a = tail[p1];
    int b = tail[p2];
    if (a < 0) a = flip(-a);
    if (b < 0) b = flip(-b);

    // relator = Bs U a X b Y a^-1 Z b^-1 V. Introduce c = X b Y.
    {
      const std::size_t ia = find_letter(relator, a);
      const std::size_t ib = find_letter(relator, b);
      const std::size_t ia2 = find_letter(relator, -a);
      const Word X = slice(relator, ia + 1, ib);
      const Word Y = slice(relator, ib + 1, ia2);
      const int c = fresh();
      replace(b, cat({inv(X), Word{c}, inv(Y)}), c, cat({X, Word{b}, Y}));
      b = c;
    }
    // relator ~ a c a^-1 Q c^-1 S'. Introduce d = S' a, S' read cyclically.
    int d = 0;
    {
      const std::size_t ic2 = find_letter(relator, -b);
      const std::size_t ia = find_letter(relator, a);
      const Word rot = rotate_to(relator, (ic2 + 1) % relator.size());
      const std::size_t ia_rot = (ia + relator.size() - (ic2 + 1)) % relator.size();
      const Word S = slice(rot, 0, ia_rot);
      d = fresh();
      replace(a, cat({inv(S), Word{d}}), d, cat({S, Word{a}}));
    }
    // Now c^-1 d c d^-1 is a contiguous cyclic block.
    rotate_blocks_first();
    std::size_t p = find_letter(relator, -b);
    if (!blocks.empty() && p < off) {
      throw Error(ErrorCode::InvalidIdentification, "handle overlaps finished blocks");
    }
    if (blocks.empty()) {
      relator = rotate_to(relator, p);
      p = 0;
    }
    const Word block = slice(relator, p, std::min(p + 4, relator.size()));
    if (block != Word{-b, d, b, -d}) {
      throw Error(ErrorCode::InvalidIdentification, "handle move did not close up");
    }
    const int c = flip(b);  // block is now c d c^-1 d^-1
    // Move the block next to the finished ones by conjugating with the
    // stretch M between them.
    const Word M = slice(relator, off, p);
    if (!M.empty()) {
      const int c2 = fresh();
      replace(c, cat({inv(M), Word{c2}, M}), c2, cat({M, Word{c}, inv(M)}));
      const int d2 = fresh();
      replace(d, cat({inv(M), Word{d2}, M}), d2, cat({M, Word{d}, inv(M)}));
      blocks.emplace_back(c2, d2);
    } else {
      blocks.emplace_back(c, d);
    }
    rotate_blocks_first();
    check_blocks();
  }
};

}  // namespace

Marking standard_marking(const CoverSpec& cover) {
  const int d = cover.degree();
  const int ne = cover.num_edges();
  const auto rel = surface_relator(cover.base());

  // Polygons over non-tree edges; letter id = edge + 1.
  std::vector<Word> polys;
  for (int f = 0; f < d; ++f) {
    Word w;
    for (auto [e, s] : trace_edges(cover, rel, f).steps) {
      if (!cover.is_tree_edge(e)) w.push_back(s * (e + 1));
    }
    polys.push_back(std::move(w));
  }
  auto locate = [&](int x) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (std::find(polys[i].begin(), polys[i].end(), x) != polys[i].end()) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };
  // Glue along a dual spanning tree. Each glued edge is eliminated:
  // P = e X and Q = e^-1 Y become X Y, with e = X^-1.
  std::vector<std::pair<int, Word>> eliminated;
  for (int e = 0; e < ne && polys.size() > 1; ++e) {
    if (cover.is_tree_edge(e)) continue;
    const int id = e + 1;
    const int pi = locate(id);
    const int qi = locate(-id);
    if (pi < 0 || qi < 0 || pi == qi) continue;
    const Word P = rotate_to(polys[static_cast<std::size_t>(pi)],
                             find_letter(polys[static_cast<std::size_t>(pi)], id));
    const Word Q = rotate_to(polys[static_cast<std::size_t>(qi)],
                             find_letter(polys[static_cast<std::size_t>(qi)], -id));
    const Word X = slice(P, 1, P.size());
    const Word Y = slice(Q, 1, Q.size());
    eliminated.emplace_back(id, inv(X));
    polys[static_cast<std::size_t>(std::min(pi, qi))] = cat({X, Y});
    polys.erase(polys.begin() + std::max(pi, qi));
  }
  if (polys.size() != 1) {
    throw Error(ErrorCode::InvalidIdentification, "dual graph is disconnected");
  }

  NormalForm nf;
  nf.relator = polys[0];
  nf.next_id = ne + 1;
  std::vector<char> gone(static_cast<std::size_t>(ne + 1), 0);
  for (const auto& [id, w] : eliminated) gone[static_cast<std::size_t>(id)] = 1;
  for (int e = 0; e < ne; ++e) {
    if (cover.is_tree_edge(e) || gone[static_cast<std::size_t>(e + 1)]) continue;
    nf.def[e + 1] = cover.schreier_generator(e);
    nf.orig_in_current[e + 1] = Word{e + 1};
  }
  const std::size_t h2 = static_cast<std::size_t>(2 * cover.genus());
  if (nf.relator.size() != 2 * h2 || nf.def.size() != h2) {
    throw Error(ErrorCode::InvalidIdentification, "one-face word has the wrong length");
  }
  while (nf.block_len() < nf.relator.size()) nf.extract_handle();

  Marking m{cover, cover.total_surface(), {}, {}};
  std::map<int, int> gen_of;  // final letter -> total generator 1..2h
  for (std::size_t i = 0; i < nf.blocks.size(); ++i) {
    auto [c, dd] = nf.blocks[i];
    gen_of[c] = static_cast<int>(2 * i + 1);
    gen_of[dd] = static_cast<int>(2 * i + 2);
    m.from_total.push_back(nf.def.at(c).reduced());
    m.from_total.push_back(nf.def.at(dd).reduced());
  }
  auto to_gens = [&](const Word& w) {
    std::vector<Letter> out;
    for (int x : w) out.push_back(x > 0 ? gen_of.at(x) : -gen_of.at(-x));
    return GroupWord(std::move(out)).reduced();
  };
  m.to_total.assign(static_cast<std::size_t>(ne), GroupWord{});
  std::map<int, GroupWord> resolved;
  for (const auto& [o, w] : nf.orig_in_current) resolved[o] = to_gens(w);
  for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it) {
    GroupWord out;
    for (int x : it->second) {
      const auto& r = resolved.at(std::abs(x));
      out *= x > 0 ? r : r.inverse();
    }
    resolved[it->first] = out;
  }
  for (const auto& [id, w] : resolved) m.to_total[static_cast<std::size_t>(id - 1)] = w;
  return m;
}

std::optional<Error> validate_marking(const Marking& m) {
  auto fail = [](const std::string& why) {
    return Error(ErrorCode::InvalidIdentification, why);
  };
  const auto& c = m.cover;
  const int n = m.total.num_generators();
  if (m.total.genus() != c.genus()) return fail("total surface has the wrong genus");
  if (static_cast<int>(m.to_total.size()) != c.num_edges() ||
      static_cast<int>(m.from_total.size()) != n) {
    return fail("wrong number of words");
  }
  for (const auto& w : m.to_total) {
    for (Letter x : w.letters()) {
      if (!m.total.contains(x)) return fail("to_total uses a letter outside the total surface");
    }
  }
  try {
    auto k = make_complex(c);
    std::vector<CoverCycle> loops;
    for (int j = 1; j <= n; ++j) {
      const auto& w = m.from_total[static_cast<std::size_t>(j - 1)];
      if (!c.contains(w)) return fail("from_total word leaves the subgroup");
      if (substitute_along(c, w, m.to_total) != GroupWord{j}) {
        return fail("to_total does not invert from_total on generator " + std::to_string(j));
      }
      loops.emplace_back(k, k->path_chain(w));
    }
    for (int e = 0; e < c.num_edges(); ++e) {
      const auto back = substitute(m.to_total[static_cast<std::size_t>(e)], m.from_total);
      if (!c.contains(back)) return fail("from_total o to_total leaves the subgroup");
      CoverCycle lhs(k, k->path_chain(back));
      CoverCycle rhs(k, k->path_chain(c.schreier_generator(e)));
      if (!homologous(lhs, rhs)) return fail("edge " + std::to_string(e) + " is not recovered");
    }
    const auto gram = symplectic_gram(m.total);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (pairing_on_cover(loops[static_cast<std::size_t>(i)], loops[static_cast<std::size_t>(j)]) !=
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
          return fail("marking does not carry the standard intersection form");
        }
      }
    }
  } catch (const Error& e) {
    return fail(e.what());
  }
  return std::nullopt;
}

CoverArrow compose_covers_with_arrow(const CoverSpec& top, const CoverSpec& bottom,
                                     std::span<const GroupWord> identification) {
  if (top.base().genus() != bottom.genus()) {
    throw Error(ErrorCode::GenusMismatch,
                "top cover lives over genus " + std::to_string(top.base().genus()) +
                    ", bottom total space has genus " + std::to_string(bottom.genus()));
  }
  if (static_cast<int>(identification.size()) != bottom.num_edges()) {
    throw Error(ErrorCode::InvalidIdentification, "one word per bottom edge required");
  }
  const auto expected = static_cast<std::uint64_t>(top.degree()) *
                        static_cast<std::uint64_t>(bottom.degree());
  try {
    auto [cover, states] = cover_from_action<std::pair<int, int>, SheetPairHash>(
        bottom.base(), std::pair{0, 0},
        [&](const std::pair<int, int>& st, int k) {
          const auto& w = identification[static_cast<std::size_t>(bottom.edge_id(k, st.first))];
          return std::pair{bottom.act(st.first, k), top.act(st.second, w)};
        },
        expected);
    if (static_cast<std::uint64_t>(cover.degree()) != expected) {
      throw Error(ErrorCode::InvalidIdentification, "composite is not connected");
    }
    std::vector<int> map;
    for (const auto& st : states) map.push_back(st.first);
    return CoverArrow{std::move(cover), bottom, std::move(map)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidIdentification) throw;
    throw Error(ErrorCode::InvalidIdentification, e.what());
  }
}

CoverSpec compose_covers(const CoverSpec& top, const CoverSpec& bottom,
                         std::span<const GroupWord> identification) {
  return compose_covers_with_arrow(top, bottom, identification).from;
}

CoverSpec compose_covers(const CoverSpec& top, const Marking& bottom) {
  return compose_covers(top, bottom.cover, bottom.to_total);
}

}  // namespace covertower
