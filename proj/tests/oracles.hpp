#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the search or canonicalization code under test except CoverSpec's
// constructor, which the oracle only uses to dedupe its own results.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "covertower/cover.hpp"

namespace oracle {

using covertower::Perm;

inline std::vector<Perm> all_perms(int d) {
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p); while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

// p then q (right action).
inline Perm then(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

inline bool relator_trivial(const std::vector<Perm>& t) {
  Perm acc(t[0].size());
  std::iota(acc.begin(), acc.end(), 0);
  for (std::size_t i = 0; i + 1 < t.size(); i += 2) {
    const auto& a = t[i];
    const auto& b = t[i + 1];
    acc = then(then(then(then(acc, a), b), inverse(a)), inverse(b));
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != static_cast<int>(i)) return false;
  }
  return true;
}

inline bool transitive(const std::vector<Perm>& t) {
  const std::size_t d = t[0].size();
  std::vector<char> seen(d, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (const auto& p : t) {
      for (int n : {p[static_cast<std::size_t>(s)], inverse(p)[static_cast<std::size_t>(s)]}) {
        if (!seen[static_cast<std::size_t>(n)]) {
          seen[static_cast<std::size_t>(n)] = 1;
          stack.push_back(n);
        }
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

struct HomCount {
  long all = 0;         // homomorphisms to S_d
  long transitive = 0;  // with transitive image
};

// Runs over every tuple in (S_d)^(2g).
inline HomCount count_homs(int genus, int d) {
  const auto perms = all_perms(d);
  const int n = 2 * genus;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  HomCount out;
  for (;;) {
    std::vector<Perm> t;
    for (auto i : idx) t.push_back(perms[i]);
    if (relator_trivial(t)) {
      ++out.all;
      if (transitive(t)) ++out.transitive;
    }
    int k = 0;
    while (k < n && ++idx[static_cast<std::size_t>(k)] == perms.size()) idx[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
  }
  return out;
}

// Brute-force list of pointed covers: every transitive tuple, deduplicated
// by relabelling {1..d-1} (the basepoint 0 stays fixed) and taking the
// lexicographically smallest tuple.
inline std::set<std::vector<Perm>> brute_force_covers(int genus, int d) {
  const auto perms = all_perms(d);
  std::vector<Perm> relabels;
  for (const auto& p : perms) {
    if (p[0] == 0) relabels.push_back(p);
  }
  const int n = 2 * genus;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::set<std::vector<Perm>> out;
  for (;;) {
    std::vector<Perm> t;
    for (auto i : idx) t.push_back(perms[i]);
    if (relator_trivial(t) && transitive(t)) {
      std::vector<Perm> best;
      for (const auto& r : relabels) {
        std::vector<Perm> c;
        for (const auto& p : t) {
          Perm q(p.size());
          for (std::size_t s = 0; s < p.size(); ++s) q[static_cast<std::size_t>(r[s])] = r[static_cast<std::size_t>(p[s])];
          c.push_back(q);
        }
        if (best.empty() || c < best) best = c;
      }
      out.insert(best);
    }
    int k = 0;
    while (k < n && ++idx[static_cast<std::size_t>(k)] == perms.size()) idx[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
  }
  return out;
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace oracle
