#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace covertower {

/// Signed generator index. For a genus-g surface the generators are
/// a1,b1,...,ag,bg numbered 1..2g (a_i = 2i-1, b_i = 2i); a negative value
/// denotes the inverse generator.
using Letter = int;

/// Closed oriented surface of genus >= 2 with the standard one-relator
/// presentation prod_i [a_i, b_i].
class Surface {
 public:
  explicit Surface(int genus);

  int genus() const noexcept { return genus_; }
  int num_generators() const noexcept { return 2 * genus_; }
  int euler_characteristic() const noexcept { return 2 - 2 * genus_; }
  int homology_rank() const noexcept { return 2 * genus_; }

  bool contains(Letter x) const noexcept {
    return x != 0 && x >= -num_generators() && x <= num_generators();
  }

  friend bool operator==(const Surface&, const Surface&) = default;
  friend auto operator<=>(const Surface&, const Surface&) = default;

 private:
  int genus_;
};

inline constexpr Letter letter_a(int i) { return 2 * i - 1; }
inline constexpr Letter letter_b(int i) { return 2 * i; }

/// A word in a free group on numbered generators. Reduction is free
/// reduction only.
class GroupWord {
 public:
  GroupWord() = default;
  GroupWord(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit GroupWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  GroupWord inverse() const;
  GroupWord reduced() const;
  /// Free reduction followed by removal of cancelling first/last letters.
  GroupWord cyclically_reduced() const;

  /// Appends `other` and freely reduces at the junction.
  GroupWord& operator*=(const GroupWord& other);
  friend GroupWord operator*(GroupWord lhs, const GroupWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Integral first-homology class of a surface in the ordered basis
/// a1,b1,...,ag,bg.
struct HomologyClass {
  std::vector<std::int64_t> coords;

  HomologyClass() = default;
  explicit HomologyClass(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  static HomologyClass zero(const Surface& s) {
    return HomologyClass(std::vector<std::int64_t>(s.homology_rank(), 0));
  }
  static HomologyClass basis(const Surface& s, int index);

  std::size_t size() const noexcept { return coords.size(); }
  bool is_zero() const noexcept;

  HomologyClass& operator+=(const HomologyClass& other);
  HomologyClass& operator-=(const HomologyClass& other);
  friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) {
    a += b;
    return a;
  }
  friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) {
    a -= b;
    return a;
  }
  friend HomologyClass operator*(std::int64_t k, HomologyClass a);

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
};

/// Freely reduces `w` after checking every letter belongs to `s`.
/// Throws Error(GeneratorOutOfRange).
GroupWord reduce_word(const Surface& s, const GroupWord& w);

/// prod_{i=1..g} a_i b_i a_i^-1 b_i^-1.
GroupWord surface_relator(const Surface& s);

HomologyClass abelianize(const Surface& s, const GroupWord& w);

/// Standard symplectic form sum_i (u[a_i] v[b_i] - u[b_i] v[a_i]).
/// Throws Error(DimensionMismatch) for vectors of different or odd length.
std::int64_t intersection_form(const HomologyClass& u, const HomologyClass& v);

/// Gram matrix of intersection_form on the standard basis.
std::vector<std::vector<std::int64_t>> symplectic_gram(const Surface& s);

/// Replaces every generator k (1-based) by images[k-1] and inverse letters by
/// inverse images, then freely reduces.
GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images);

/// +1 if `w` is freely conjugate to `r`, -1 if freely conjugate to r^-1,
/// nullopt otherwise. Decided on cyclically reduced words.
std::optional<int> free_conjugacy_sign(const GroupWord& w, const GroupWord& r);

}  // namespace covertower
