#include "covertower/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <string>
#include <thread>

namespace covertower {

namespace {

// Partial coset table: row s, column 2(k-1) for generator k and 2(k-1)+1 for
// its inverse; -1 marks an undefined entry.
struct Table {
  std::vector<int> entries;
  int defined_cosets = 1;
};

class LowIndexSearch {
 public:
  LowIndexSearch(const Surface& base, int degree, std::uint64_t budget,
                 std::atomic<std::uint64_t>& nodes)
      : degree_(degree),
        columns_(2 * base.num_generators()),
        ngen_(base.num_generators()),
        budget_(budget),
        nodes_(nodes) {
    const auto rel = surface_relator(base);
    for (Letter x : rel.letters()) {
      relator_.push_back(2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0));
    }
  }

  Table root() const {
    return Table{std::vector<int>(static_cast<std::size_t>(degree_ * columns_), -1), 1};
  }

  /// Children of a state; complete tables of the right degree go to `done`.
  void expand(const Table& t, std::vector<Table>& children,
              std::vector<Table>& done) const {
    const auto gap = first_gap(t);
    if (!gap) {
      if (t.defined_cosets == degree_) done.push_back(t);
      return;
    }
    const auto [s, c] = *gap;
    const int n = t.defined_cosets;
    for (int target = 0; target <= n && target < degree_; ++target) {
      if (target < n && at(t, target, c ^ 1) != -1) continue;
      if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "low-index search exceeded " + std::to_string(budget_) +
                        " definitions");
      }
      Table child = t;
      if (target == n) ++child.defined_cosets;
      set(child, s, c, target);
      set(child, target, c ^ 1, s);
      if (deduce(child)) children.push_back(std::move(child));
    }
  }

  void run(const Table& t, std::vector<Table>& done) const {
    std::vector<Table> children;
    expand(t, children, done);
    for (const auto& child : children) run(child, done);
  }

  std::vector<Perm> to_perms(const Table& t) const {
    std::vector<Perm> perms(static_cast<std::size_t>(ngen_), Perm(static_cast<std::size_t>(degree_)));
    for (int k = 0; k < ngen_; ++k) {
      for (int s = 0; s < degree_; ++s) {
        perms[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] = at(t, s, 2 * k);
      }
    }
    return perms;
  }

 private:
  int at(const Table& t, int s, int c) const {
    return t.entries[static_cast<std::size_t>(s * columns_ + c)];
  }
  void set(Table& t, int s, int c, int v) const {
    t.entries[static_cast<std::size_t>(s * columns_ + c)] = v;
  }

  std::optional<std::pair<int, int>> first_gap(const Table& t) const {
    for (int s = 0; s < t.defined_cosets; ++s) {
      for (int c = 0; c < columns_; ++c) {
        if (at(t, s, c) == -1) return std::pair{s, c};
      }
    }
    return std::nullopt;
  }

  // Scans the relator from every defined coset, filling single gaps.
  // Returns false on a contradiction.
  bool deduce(Table& t) const {
    const int len = static_cast<int>(relator_.size());
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < t.defined_cosets; ++s) {
        int f = s;
        int i = 0;
        while (i < len && at(t, f, relator_[static_cast<std::size_t>(i)]) != -1) {
          f = at(t, f, relator_[static_cast<std::size_t>(i)]);
          ++i;
        }
        if (i == len) {
          if (f != s) return false;
          continue;
        }
        int b = s;
        int j = len - 1;
        while (j >= i && at(t, b, relator_[static_cast<std::size_t>(j)] ^ 1) != -1) {
          b = at(t, b, relator_[static_cast<std::size_t>(j)] ^ 1);
          --j;
        }
        if (j < i) {
          if (f != b) return false;
        } else if (j == i) {
          const int c = relator_[static_cast<std::size_t>(i)];
          set(t, f, c, b);
          set(t, b, c ^ 1, f);
          changed = true;
        }
      }
    }
    return true;
  }

  int degree_;
  int columns_;
  int ngen_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<int> relator_;
};

}  // namespace

std::vector<CoverSpec> enumerate_covers(const Surface& base, int degree,
                                        const EnumerateOptions& options) {
  if (degree < 1) {
    throw Error(ErrorCode::BadDegree, "degree must be at least 1");
  }
  std::atomic<std::uint64_t> nodes{0};
  const LowIndexSearch search(base, degree, options.budget, nodes);

  std::vector<Table> done;
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    search.run(search.root(), done);
  } else {
    // Split the tree breadth-first into enough independent subtrees.
    std::deque<Table> frontier{search.root()};
    const std::size_t target = 8 * static_cast<std::size_t>(jobs);
    while (!frontier.empty() && frontier.size() < target) {
      Table t = std::move(frontier.front());
      frontier.pop_front();
      std::vector<Table> children;
      search.expand(t, children, done);
      for (auto& c : children) frontier.push_back(std::move(c));
    }
    std::vector<Table> work(std::make_move_iterator(frontier.begin()),
                            std::make_move_iterator(frontier.end()));
    std::vector<std::vector<Table>> results(static_cast<std::size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = static_cast<std::size_t>(w); i < work.size();
               i += static_cast<std::size_t>(jobs)) {
            search.run(work[i], results[static_cast<std::size_t>(w)]);
          }
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& r : results) {
      done.insert(done.end(), std::make_move_iterator(r.begin()),
                  std::make_move_iterator(r.end()));
    }
  }

  std::vector<CoverSpec> covers;
  covers.reserve(done.size());
  for (const auto& t : done) covers.emplace_back(base, search.to_perms(t));
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<CoverSpec> enumerate_covers_up_to(const Surface& base,
                                              int max_degree,
                                              const EnumerateOptions& options) {
  std::vector<CoverSpec> all;
  for (int d = 1; d <= max_degree; ++d) {
    auto covers = enumerate_covers(base, d, options);
    all.insert(all.end(), std::make_move_iterator(covers.begin()),
               std::make_move_iterator(covers.end()));
  }
  return all;
}

}  // namespace covertower
