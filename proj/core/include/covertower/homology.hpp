#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "covertower/cover.hpp"
#include "covertower/cover_ops.hpp"
#include "covertower/linalg.hpp"

namespace covertower {

/// Half-edge at a vertex of the lifted complex: the outgoing or incoming end
/// of the lift of generator `generator`.
struct Dart {
  int generator = 1;
  bool outgoing = true;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// The 2-complex of a cover: one vertex per sheet, one edge per (generator,
/// sheet), one 4g-gon per sheet (the lift of the relator starting there).
/// The rotation at each vertex is the lift of the base rotation, so the
/// complex is an oriented closed surface of genus cover.genus().
class CoverComplex {
 public:
  explicit CoverComplex(CoverSpec cover);

  const CoverSpec& cover() const noexcept { return cover_; }
  int num_vertices() const noexcept { return cover_.degree(); }
  int num_edges() const noexcept { return cover_.num_edges(); }
  int num_faces() const noexcept { return cover_.degree(); }
  int euler_characteristic() const noexcept {
    return num_vertices() - num_edges() + num_faces();
  }
  /// Genus read off the Euler characteristic, (2 - chi) / 2.
  int genus_from_euler() const noexcept { return (2 - euler_characteristic()) / 2; }

  /// Counterclockwise dart order, identical at every vertex.
  const std::vector<Dart>& rotation() const noexcept { return rotation_; }
  int dart_edge(int vertex, const Dart& d) const;

  /// Oriented edges (edge id, +1/-1) around face f, starting at vertex f.
  std::vector<std::pair<int, int>> face_boundary(int face) const;

  /// Vertex vector of the boundary of an edge chain.
  std::vector<std::int64_t> boundary(const std::vector<std::int64_t>& chain) const;

  /// Edge chain of the path that reads `w` from `start_sheet`.
  std::vector<std::int64_t> path_chain(const GroupWord& w, int start_sheet = 0) const;

  struct Homology {
    std::vector<int> non_tree_edges;     // cycle coordinates index these
    std::vector<int> coordinate_of_edge;  // -1 on tree edges
    SmithForm smith;                     // of the face boundary matrix
    std::vector<std::int64_t> torsion;   // invariant factors > 1
    std::vector<std::vector<std::int64_t>> basis;  // edge chains
  };
  /// Computed on first use; thread-safe.
  const Homology& homology() const;

 private:
  std::vector<std::int64_t> fundamental_cycle(int edge) const;

  CoverSpec cover_;
  std::vector<Dart> rotation_;
  mutable std::once_flag homology_once_;
  mutable std::unique_ptr<Homology> homology_;
};

using ComplexPtr = std::shared_ptr<const CoverComplex>;
ComplexPtr make_complex(const CoverSpec& cover);

/// Integral 1-cycle on a cover complex.
class CoverCycle {
 public:
  /// Throws NotACycle if the boundary is nonzero, DimensionMismatch on size.
  CoverCycle(ComplexPtr complex, std::vector<std::int64_t> coeffs);
  static CoverCycle zero(ComplexPtr complex);

  const ComplexPtr& complex() const noexcept { return complex_; }
  const CoverSpec& cover() const noexcept { return complex_->cover(); }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::int64_t coeff(int k, int sheet) const {
    return coeffs_[static_cast<std::size_t>(cover().edge_id(k, sheet))];
  }

  CoverCycle& operator+=(const CoverCycle& other);
  CoverCycle& operator-=(const CoverCycle& other);
  friend CoverCycle operator+(CoverCycle a, const CoverCycle& b) { return a += b; }
  friend CoverCycle operator-(CoverCycle a, const CoverCycle& b) { return a -= b; }
  friend CoverCycle operator*(std::int64_t k, CoverCycle a);

  /// Same complex and same chain (not merely homologous).
  friend bool operator==(const CoverCycle& a, const CoverCycle& b) {
    return a.cover() == b.cover() && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same(const CoverCycle& other) const;

  ComplexPtr complex_;
  std::vector<std::int64_t> coeffs_;
};

/// Integral basis of H_1 of the cover, rank 2 * cover.genus().
std::vector<CoverCycle> homology_basis(const ComplexPtr& k);

/// Invariant factors > 1 of H_1 (empty for every closed orientable surface).
std::vector<std::int64_t> torsion_coefficients(const ComplexPtr& k);

/// Coordinates of the class of z in homology_basis.
std::vector<std::int64_t> homology_coordinates(const CoverCycle& z);

bool is_boundary(const CoverCycle& z);
/// Throws ComplexMismatch for cycles on different covers.
bool homologous(const CoverCycle& a, const CoverCycle& b);

/// Algebraic intersection number, computed by pushing c2 off to its left and
/// counting signed crossings around each vertex in rotation order.
/// Throws ComplexMismatch.
std::int64_t pairing_on_cover(const CoverCycle& c1, const CoverCycle& c2);

/// Projection to the base: edge (k, s) maps to generator k.
HomologyClass pushforward(const CoverCycle& c);

/// Full preimage: every base generator loop goes to the sum of its d lifts.
CoverCycle transfer(const HomologyClass& u, const ComplexPtr& k);

/// Full preimage of a cycle on arrow.to inside arrow.from.
CoverCycle lift_cycle(const CoverCycle& c, const CoverArrow& arrow,
                      const ComplexPtr& fine);

}  // namespace covertower
