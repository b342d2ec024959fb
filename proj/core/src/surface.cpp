#include "covertower/surface.hpp"

#include <algorithm>
#include <string>

#include "covertower/error.hpp"

namespace covertower {

Surface::Surface(int genus) : genus_(genus) {
  if (genus < 2) {
    throw Error(ErrorCode::InvalidGenus,
                "genus must be at least 2, got " + std::to_string(genus));
  }
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& x : out) x = -x;
  return GroupWord(std::move(out));
}

GroupWord GroupWord::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter x : letters_) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return GroupWord(std::move(out));
}

GroupWord GroupWord::cyclically_reduced() const {
  const auto r = reduced().letters();
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return GroupWord(std::vector<Letter>(r.begin() + lo, r.begin() + hi));
}

GroupWord& GroupWord::operator*=(const GroupWord& other) {
  for (Letter x : other.letters_) {
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
  return *this;
}

HomologyClass HomologyClass::basis(const Surface& s, int index) {
  auto h = zero(s);
  h.coords.at(static_cast<std::size_t>(index)) = 1;
  return h;
}

bool HomologyClass::is_zero() const noexcept {
  return std::all_of(coords.begin(), coords.end(),
                     [](std::int64_t c) { return c == 0; });
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& other) {
  if (other.size() != size()) {
    throw Error(ErrorCode::DimensionMismatch, "homology class sizes differ");
  }
  for (std::size_t i = 0; i < size(); ++i) coords[i] += other.coords[i];
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& other) {
  if (other.size() != size()) {
    throw Error(ErrorCode::DimensionMismatch, "homology class sizes differ");
  }
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

HomologyClass operator*(std::int64_t k, HomologyClass a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

GroupWord reduce_word(const Surface& s, const GroupWord& w) {
  for (Letter x : w.letters()) {
    if (!s.contains(x)) {
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "letter " + std::to_string(x) + " not in genus-" +
                      std::to_string(s.genus()) + " surface group");
    }
  }
  return w.reduced();
}

GroupWord surface_relator(const Surface& s) {
  std::vector<Letter> r;
  r.reserve(4 * static_cast<std::size_t>(s.genus()));
  for (int i = 1; i <= s.genus(); ++i) {
    r.push_back(letter_a(i));
    r.push_back(letter_b(i));
    r.push_back(-letter_a(i));
    r.push_back(-letter_b(i));
  }
  return GroupWord(std::move(r));
}

HomologyClass abelianize(const Surface& s, const GroupWord& w) {
  auto h = HomologyClass::zero(s);
  for (Letter x : w.letters()) {
    if (!s.contains(x)) {
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "letter " + std::to_string(x) + " out of range");
    }
    h.coords[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  }
  return h;
}

std::int64_t intersection_form(const HomologyClass& u, const HomologyClass& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "intersection_form needs equal even-length vectors");
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) {
    sum += u.coords[i] * v.coords[i + 1] - u.coords[i + 1] * v.coords[i];
  }
  return sum;
}

std::vector<std::vector<std::int64_t>> symplectic_gram(const Surface& s) {
  const int n = s.homology_rank();
  std::vector<std::vector<std::int64_t>> gram(
      n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      gram[i][j] = intersection_form(HomologyClass::basis(s, i),
                                     HomologyClass::basis(s, j));
    }
  }
  return gram;
}

GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images) {
  GroupWord out;
  for (Letter x : w.letters()) {
    const auto k = static_cast<std::size_t>(std::abs(x));
    if (k == 0 || k > images.size()) {
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "substitution has no image for letter " + std::to_string(x));
    }
    out *= x > 0 ? images[k - 1] : images[k - 1].inverse();
  }
  return out;
}

namespace {

bool is_rotation(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<Letter> doubled(b);
  doubled.insert(doubled.end(), b.begin(), b.end());
  return std::search(doubled.begin(), doubled.end(), a.begin(), a.end()) !=
         doubled.end();
}

}  // namespace

std::optional<int> free_conjugacy_sign(const GroupWord& w, const GroupWord& r) {
  const auto cw = w.cyclically_reduced().letters();
  if (is_rotation(cw, r.cyclically_reduced().letters())) return 1;
  if (is_rotation(cw, r.inverse().cyclically_reduced().letters())) return -1;
  return std::nullopt;
}

}  // namespace covertower
