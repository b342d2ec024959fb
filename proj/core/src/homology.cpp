#include "covertower/homology.hpp"

#include <algorithm>
#include <string>

namespace covertower {

namespace {

// Dart through which a path leaves the vertex when it reads letter x, and the
// one through which it arrives.
Dart departure(Letter x) { return x > 0 ? Dart{x, true} : Dart{-x, false}; }
Dart arrival(Letter x) { return x > 0 ? Dart{x, false} : Dart{-x, true}; }

int dart_index(const Dart& d) { return 2 * (d.generator - 1) + (d.outgoing ? 0 : 1); }

}  // namespace

CoverComplex::CoverComplex(CoverSpec cover) : cover_(std::move(cover)) {
  // Each corner of the relator polygon sits between the arrival dart of one
  // letter and the departure dart of the next. Following corners gives the
  // clockwise order of darts at the single vertex; reversing it gives the
  // counterclockwise rotation.
  const auto rel = surface_relator(cover_.base()).letters();
  const std::size_t m = rel.size();
  std::vector<int> next(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    next[static_cast<std::size_t>(dart_index(arrival(rel[i])))] =
        dart_index(departure(rel[(i + 1) % m]));
  }
  std::vector<Dart> order;
  int cur = 0;
  for (std::size_t i = 0; i < m; ++i) {
    order.push_back(Dart{cur / 2 + 1, cur % 2 == 0});
    cur = next[static_cast<std::size_t>(cur)];
  }
  rotation_.push_back(order[0]);
  for (std::size_t i = m - 1; i > 0; --i) rotation_.push_back(order[i]);
}

int CoverComplex::dart_edge(int vertex, const Dart& d) const {
  if (d.outgoing) return cover_.edge_id(d.generator, vertex);
  return cover_.edge_id(d.generator, cover_.act(vertex, -d.generator));
}

std::vector<std::pair<int, int>> CoverComplex::face_boundary(int face) const {
  return trace_edges(cover_, surface_relator(cover_.base()), face).steps;
}

std::vector<std::int64_t> CoverComplex::boundary(
    const std::vector<std::int64_t>& chain) const {
  if (static_cast<int>(chain.size()) != num_edges()) {
    throw Error(ErrorCode::DimensionMismatch, "chain length differs from edge count");
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(num_vertices()), 0);
  for (int e = 0; e < num_edges(); ++e) {
    const auto c = chain[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    out[static_cast<std::size_t>(cover_.edge_sheet(e))] -= c;
    out[static_cast<std::size_t>(cover_.edge_target(e))] += c;
  }
  return out;
}

std::vector<std::int64_t> CoverComplex::path_chain(const GroupWord& w,
                                                   int start_sheet) const {
  std::vector<std::int64_t> chain(static_cast<std::size_t>(num_edges()), 0);
  for (auto [edge, sign] : trace_edges(cover_, w, start_sheet).steps) {
    chain[static_cast<std::size_t>(edge)] += sign;
  }
  return chain;
}

std::vector<std::int64_t> CoverComplex::fundamental_cycle(int edge) const {
  return path_chain(cover_.schreier_generator(edge));
}

const CoverComplex::Homology& CoverComplex::homology() const {
  std::call_once(homology_once_, [this] {
    auto h = std::make_unique<Homology>();
    h->coordinate_of_edge.assign(static_cast<std::size_t>(num_edges()), -1);
    for (int e = 0; e < num_edges(); ++e) {
      if (cover_.is_tree_edge(e)) continue;
      h->coordinate_of_edge[static_cast<std::size_t>(e)] =
          static_cast<int>(h->non_tree_edges.size());
      h->non_tree_edges.push_back(e);
    }
    const std::size_t n = h->non_tree_edges.size();
    IntMatrix faces;
    for (int f = 0; f < num_faces(); ++f) {
      std::vector<std::int64_t> row(n, 0);
      for (auto [edge, sign] : face_boundary(f)) {
        const int c = h->coordinate_of_edge[static_cast<std::size_t>(edge)];
        if (c >= 0) row[static_cast<std::size_t>(c)] += sign;
      }
      faces.push_back(std::move(row));
    }
    h->smith = smith_form(faces, n);
    for (const auto& d : h->smith.diagonal) {
      if (d > 1) h->torsion.push_back(to_int64(d));
    }
    const auto& qinv = h->smith.column_inverse;
    for (std::size_t j = h->smith.rank(); j < n; ++j) {
      std::vector<std::int64_t> chain(static_cast<std::size_t>(num_edges()), 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (qinv[j][i] == 0) continue;
        const auto k = to_int64(qinv[j][i]);
        const auto cyc = fundamental_cycle(h->non_tree_edges[i]);
        for (std::size_t e = 0; e < chain.size(); ++e) chain[e] += k * cyc[e];
      }
      h->basis.push_back(std::move(chain));
    }
    homology_ = std::move(h);
  });
  return *homology_;
}

ComplexPtr make_complex(const CoverSpec& cover) {
  return std::make_shared<const CoverComplex>(cover);
}

// ---------------------------------------------------------------------------

CoverCycle::CoverCycle(ComplexPtr complex, std::vector<std::int64_t> coeffs)
    : complex_(std::move(complex)), coeffs_(std::move(coeffs)) {
  const auto b = complex_->boundary(coeffs_);
  if (std::any_of(b.begin(), b.end(), [](std::int64_t x) { return x != 0; })) {
    throw Error(ErrorCode::NotACycle, "chain has nonzero boundary");
  }
}

CoverCycle CoverCycle::zero(ComplexPtr complex) {
  const auto n = static_cast<std::size_t>(complex->num_edges());
  return CoverCycle(std::move(complex), std::vector<std::int64_t>(n, 0));
}

void CoverCycle::require_same(const CoverCycle& other) const {
  if (cover() != other.cover()) {
    throw Error(ErrorCode::ComplexMismatch, "cycles live on different covers");
  }
}

CoverCycle& CoverCycle::operator+=(const CoverCycle& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CoverCycle& CoverCycle::operator-=(const CoverCycle& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CoverCycle operator*(std::int64_t k, CoverCycle a) {
  for (auto& c : a.coeffs_) c *= k;
  return a;
}

std::vector<CoverCycle> homology_basis(const ComplexPtr& k) {
  std::vector<CoverCycle> out;
  for (const auto& chain : k->homology().basis) out.emplace_back(k, chain);
  return out;
}

std::vector<std::int64_t> torsion_coefficients(const ComplexPtr& k) {
  return k->homology().torsion;
}

namespace {

// z_nt . Q: coordinates in which boundaries are spanned by d_i e_i.
std::vector<BigInt> smith_coordinates(const CoverCycle& z) {
  const auto& h = z.complex()->homology();
  const std::size_t n = h.non_tree_edges.size();
  std::vector<BigInt> y(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = z.coeffs()[static_cast<std::size_t>(h.non_tree_edges[i])];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n; ++j) y[j] += c * h.smith.column_transform[i][j];
  }
  return y;
}

}  // namespace

std::vector<std::int64_t> homology_coordinates(const CoverCycle& z) {
  const auto y = smith_coordinates(z);
  const std::size_t r = z.complex()->homology().smith.rank();
  std::vector<std::int64_t> out;
  for (std::size_t j = r; j < y.size(); ++j) out.push_back(to_int64(y[j]));
  return out;
}

bool is_boundary(const CoverCycle& z) {
  const auto y = smith_coordinates(z);
  const auto& d = z.complex()->homology().smith.diagonal;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (j < d.size() ? y[j] % d[j] != 0 : y[j] != 0) return false;
  }
  return true;
}

bool homologous(const CoverCycle& a, const CoverCycle& b) {
  return is_boundary(a - b);
}

std::int64_t pairing_on_cover(const CoverCycle& c1, const CoverCycle& c2) {
  if (c1.cover() != c2.cover()) {
    throw Error(ErrorCode::ComplexMismatch, "cycles live on different covers");
  }
  const auto& k = *c1.complex();
  const auto& rot = k.rotation();
  const std::size_t m = rot.size();
  std::int64_t total = 0;
  std::vector<std::int64_t> q(m);
  for (int v = 0; v < k.num_vertices(); ++v) {
    // The pushed copy of c2 enters the vertex region through the corner just
    // clockwise of its arrival dart and leaves through the corner just
    // counterclockwise of its departure dart. h is the resulting flow
    // across each dart; every crossing with c1 along that dart counts.
    std::fill(q.begin(), q.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      const auto c = c2.coeffs()[static_cast<std::size_t>(k.dart_edge(v, rot[i]))];
      if (c == 0) continue;
      if (rot[i].outgoing) {
        q[i] -= c;
      } else {
        q[(i + m - 1) % m] += c;
      }
    }
    std::int64_t h = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto c = c1.coeffs()[static_cast<std::size_t>(k.dart_edge(v, rot[i]))];
      total += (rot[i].outgoing ? c : -c) * h;
      h += q[i];
    }
  }
  return total;
}

HomologyClass pushforward(const CoverCycle& c) {
  const auto& cover = c.cover();
  auto out = HomologyClass::zero(cover.base());
  for (int e = 0; e < cover.num_edges(); ++e) {
    out.coords[static_cast<std::size_t>(cover.edge_generator(e) - 1)] +=
        c.coeffs()[static_cast<std::size_t>(e)];
  }
  return out;
}

CoverCycle transfer(const HomologyClass& u, const ComplexPtr& k) {
  const auto& cover = k->cover();
  if (static_cast<int>(u.size()) != cover.base().homology_rank()) {
    throw Error(ErrorCode::DimensionMismatch, "class is not over the cover's base");
  }
  std::vector<std::int64_t> chain(static_cast<std::size_t>(cover.num_edges()));
  for (int e = 0; e < cover.num_edges(); ++e) {
    chain[static_cast<std::size_t>(e)] =
        u.coords[static_cast<std::size_t>(cover.edge_generator(e) - 1)];
  }
  return CoverCycle(k, std::move(chain));
}

CoverCycle lift_cycle(const CoverCycle& c, const CoverArrow& arrow,
                      const ComplexPtr& fine) {
  if (c.cover() != arrow.to || fine->cover() != arrow.from) {
    throw Error(ErrorCode::ComplexMismatch, "arrow does not match the cycle's cover");
  }
  const auto& f = arrow.from;
  std::vector<std::int64_t> chain(static_cast<std::size_t>(f.num_edges()));
  for (int e = 0; e < f.num_edges(); ++e) {
    const int k = f.edge_generator(e);
    const int s = arrow.sheet_map[static_cast<std::size_t>(f.edge_sheet(e))];
    chain[static_cast<std::size_t>(e)] = c.coeff(k, s);
  }
  return CoverCycle(fine, std::move(chain));
}

}  // namespace covertower
