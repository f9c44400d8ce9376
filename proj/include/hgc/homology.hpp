#pragma once

#include <map>
#include <vector>

#include "hgc/diagram.hpp"
#include "hgc/intmat.hpp"

namespace hgc {

// Integer chain model of the marked surface. The closed model is given a CW
// structure whose 2-cells are the regions; each mark removes an open disk
// from its region's interior, so a marked region's cell picks up one
// "puncture circle" per mark and the punctured surface keeps the big cell
// while dropping the disks around the marks. Non-disk regions contribute
// connector and handle 1-cells so that every region is a single 2-cell with
// an embedded-enough attaching word; connectors cancel in the boundary and
// handles are the region's own homology.
//
// C1 basis layout: edges, then circles, then one puncture circle per mark,
// then handle loops (2 per unit of region genus), then connectors. The
// connectors join the boundary components of each region (walk bases,
// circle bases, mark bases) so that cycles crossing a region between
// different boundary components exist in the complex; they cancel in every
// 2-cell boundary.
class SurfaceChains {
 public:
  explicit SurfaceChains(const Diagram& d) : d_(&d) {
    ne_ = d.edge_count();
    nc_ = int(d.circles.size());
    nmark_ = int(d.marks.size());
    nhandle_ = 0;
    for (const auto& r : d.regions) nhandle_ += 2 * r.genus;
    // 0-cells: vertices, circle bases, mark bases
    n0_ = d.vertex_count + nc_ + nmark_;
    // connectors per region: (#boundary components + #marks) - 1
    for (int r = 0; r < d.region_count(); ++r) {
      std::vector<int> bases = region_bases(r);
      for (size_t j = 1; j < bases.size(); ++j) connectors_.push_back({bases[0], bases[j]});
    }
    n1_ = ne_ + nc_ + nmark_ + nhandle_ + int(connectors_.size());
    build();
  }

  int c1_dim() const { return n1_; }
  int edge_index(int e) const { return e; }
  int circle_index(int c) const { return ne_ + c; }

  // columns = cycle space basis of C1
  const IntMatrix& cycles() const { return cycles_; }
  // rows -> H1(Sigma) coordinates of a cycle-space coordinate vector
  const IntMatrix& h1_of_cycles() const { return h1_map_; }
  int h1_rank() const { return h1_map_.rows(); }

  // H1(Sigma) coordinates of a 1-cycle given in the C1 basis.
  IntVec h1_class(const IntVec& chain) const {
    IntVec coords;
    if (!solve_integer(cycles_, chain, coords)) throw Error("chain is not a cycle");
    return h1_map_.apply(coords);
  }

  // 1-chain of a full curve (its edge cycle or its circle cell).
  IntVec curve_chain(int curve) const {
    IntVec v(n1_, Int(0));
    for (int c = 0; c < nc_; ++c)
      if (d_->circles[c].curve == curve) {
        v[circle_index(c)] = 1;
        return v;
      }
    int d0 = -1;
    for (int dart = 0; dart < d_->dart_count(); dart += 2)
      if (d_->dart_curve(dart) == curve) { d0 = dart; break; }
    require(d0 >= 0, "curve chain", "curve has no support");
    int dart = d0;
    do {
      v[dart >> 1] += (dart & 1) ? -1 : 1;
      dart = d_->curve_next(dart);
    } while (dart != d0);
    return v;
  }

  // Region boundary as a 1-chain (edges, circles and puncture circles; the
  // region's own handles cancel).
  IntVec region_boundary(int r) const { return region_boundary_[r]; }

 private:
  // 0-cell ids of a region's boundary components plus its mark bases
  std::vector<int> region_bases(int r) const {
    std::vector<int> bases;
    for (int w : d_->regions[r].walks) bases.push_back(d_->dart_vertex[d_->walks()[w][0]]);
    for (int c = 0; c < nc_; ++c) {
      if (d_->circles[c].left_region == r) bases.push_back(d_->vertex_count + c);
      if (d_->circles[c].right_region == r) bases.push_back(d_->vertex_count + c);
    }
    for (int m = 0; m < nmark_; ++m)
      if (d_->marks[m].region == r) bases.push_back(d_->vertex_count + nc_ + m);
    return bases;
  }

  void build() {
    // boundary 2-chains per region
    region_boundary_.assign(d_->region_count(), IntVec(n1_, Int(0)));
    for (int r = 0; r < d_->region_count(); ++r) {
      auto& v = region_boundary_[r];
      for (int w : d_->regions[r].walks)
        for (int dart : d_->walks()[w]) v[dart >> 1] += (dart & 1) ? -1 : 1;
      for (int c = 0; c < nc_; ++c) {
        if (d_->circles[c].left_region == r) v[circle_index(c)] += 1;
        if (d_->circles[c].right_region == r) v[circle_index(c)] -= 1;
      }
    }
    for (int m = 0; m < nmark_; ++m)
      region_boundary_[d_->marks[m].region][ne_ + nc_ + m] -= 1;
    // cycle space: kernel of d1 on C1. Edges and connectors have nonzero d1.
    IntMatrix d1m(std::max(n0_, 1), n1_);
    for (int e = 0; e < ne_; ++e) {
      d1m(d_->dart_vertex[2 * e + 1], e) += 1;
      d1m(d_->dart_vertex[2 * e], e) -= 1;
    }
    int conn0 = ne_ + nc_ + nmark_ + nhandle_;
    for (size_t t = 0; t < connectors_.size(); ++t) {
      d1m(connectors_[t].second, conn0 + int(t)) += 1;
      d1m(connectors_[t].first, conn0 + int(t)) -= 1;
    }
    cycles_ = integer_kernel(d1m);
    // express unmarked-surface boundaries in cycle coordinates: every
    // region's big cell is part of the punctured surface
    IntMatrix bmat(cycles_.cols(), d_->region_count());
    for (int r = 0; r < d_->region_count(); ++r) {
      IntVec coords;
      bool ok = solve_integer(cycles_, region_boundary_[r], coords);
      require(ok, "surface chains", "region boundary is not a cycle");
      for (int i = 0; i < cycles_.cols(); ++i) bmat(i, r) = coords[i];
    }
    // H1(Sigma) = cycle space / boundaries; oriented surface => no torsion
    SmithResult s = smith_normal_form(bmat);
    int rank = 0;
    for (const Int& x : s.diagonal)
      if (x != 0) ++rank;
    for (int i = 0; i < rank; ++i)
      require(s.diagonal[i] == 1, "surface chains", "unexpected torsion in H1 of a surface");
    // coordinates: y = U * coords ; free part = rows rank..end of U
    h1_map_ = IntMatrix(cycles_.cols() - rank, cycles_.cols());
    for (int i = rank; i < cycles_.cols(); ++i)
      for (int j = 0; j < cycles_.cols(); ++j) h1_map_(i - rank, j) = s.u(i, j);
  }

  const Diagram* d_;
  int ne_, nc_, nmark_, nhandle_, n0_ = 0, n1_ = 0;
  std::vector<std::pair<int, int>> connectors_;
  std::vector<IntVec> region_boundary_;
  IntMatrix cycles_;
  IntMatrix h1_map_;
};

// Presentation of H1 of the defined sutured manifold: relation matrix of
// the curve classes on a basis of H1 of the marked surface, plus its Smith
// normal form diagonal.
struct AbelianPresentation {
  IntMatrix relations;        // rows = alpha curves then beta curves
  std::vector<int> row_curves;
  std::vector<Int> diagonal;  // d1 | d2 | ... including zeros

  int h1_rank() const { return relations.cols(); }

  // invariant factors > 1 and free rank, for comparisons
  std::pair<std::vector<Int>, int> normal_form() const {
    std::vector<Int> tor;
    int free_rank = relations.cols();
    for (const Int& x : diagonal) {
      if (x != 0) --free_rank;
      if (x > 1) tor.push_back(x);
    }
    return {tor, free_rank};
  }
};

inline AbelianPresentation h1_presentation(const Diagram& d, const SurfaceChains& sc) {
  AbelianPresentation out;
  std::vector<int> rows;
  for (Color col : {Color::Alpha, Color::Beta})
    for (int c : d.curves_of_color(col)) rows.push_back(c);
  out.row_curves = rows;
  out.relations = IntMatrix(int(rows.size()), sc.h1_rank());
  for (size_t i = 0; i < rows.size(); ++i) {
    IntVec cls = sc.h1_class(sc.curve_chain(rows[i]));
    for (int j = 0; j < sc.h1_rank(); ++j) out.relations(int(i), j) = cls[j];
  }
  SmithResult s = smith_normal_form(out.relations);
  out.diagonal = s.diagonal;
  return out;
}

inline AbelianPresentation h1_presentation(const Diagram& d) {
  SurfaceChains sc(d);
  return h1_presentation(d, sc);
}

// The quotient group H1(M) = H1(Sigma)/<curve classes> with canonical coset
// representatives; the carrier for Spin^c difference classes.
class H1Quotient {
 public:
  H1Quotient(const Diagram& d, const SurfaceChains& sc) : sc_(&sc) {
    AbelianPresentation pres = h1_presentation(d, sc);
    int h = pres.relations.cols();
    // subgroup generated by columns of relations^T
    IntMatrix gens = pres.relations.transposed();  // h x r
    SmithResult s = smith_normal_form(gens);       // D = U * gens * V
    u_ = s.u;
    int k = std::min(gens.rows(), gens.cols());
    orders_.assign(h, Int(0));
    for (int i = 0; i < k; ++i) orders_[i] = s.diagonal[i];
  }

  // canonical representative of the class of a 1-cycle chain
  IntVec rep_of_chain(const IntVec& chain) const { return normalize(sc_->h1_class(chain)); }

  IntVec normalize(const IntVec& y) const {
    IntVec w = u_.apply(y);
    for (size_t i = 0; i < w.size(); ++i) {
      if (orders_[i] > 0) {
        w[i] %= orders_[i];
        if (w[i] < 0) w[i] += orders_[i];
      }
    }
    return w;
  }

  IntVec add(const IntVec& a, const IntVec& b) const {
    IntVec s(a.size());
    for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return normalize_rep(s);
  }

  IntVec zero() const { return IntVec(orders_.size(), Int(0)); }

  bool is_zero(const IntVec& rep) const {
    for (const Int& x : rep)
      if (x != 0) return false;
    return true;
  }

 private:
  // normalize a vector already in w-coordinates
  IntVec normalize_rep(IntVec w) const {
    for (size_t i = 0; i < w.size(); ++i) {
      if (orders_[i] > 0) {
        w[i] %= orders_[i];
        if (w[i] < 0) w[i] += orders_[i];
      }
    }
    return w;
  }

  const SurfaceChains* sc_;
  IntMatrix u_;
  std::vector<Int> orders_;
};

// Lattice of periodic domains: integer region-multiplicity vectors with
// boundary in the span of the full curves and zero multiplicity on marked
// regions.
struct PeriodicDomainLattice {
  IntMatrix basis;  // rows = regions, columns = basis vectors
  int rank() const { return basis.cols(); }
};

inline PeriodicDomainLattice periodic_domains(const Diagram& d, const SurfaceChains& sc) {
  int nr = d.region_count();
  std::vector<int> unmarked;
  for (int r = 0; r < nr; ++r)
    if (!d.region_marked(r)) unmarked.push_back(r);
  int ncurve = int(d.curves.size());
  // unknowns: multiplicities on unmarked regions, then curve coefficients
  IntMatrix sys(sc.c1_dim(), int(unmarked.size()) + ncurve);
  for (size_t j = 0; j < unmarked.size(); ++j) {
    IntVec b = sc.region_boundary(unmarked[j]);
    for (int i = 0; i < sc.c1_dim(); ++i) sys(i, int(j)) = b[i];
  }
  for (int c = 0; c < ncurve; ++c) {
    IntVec ch = sc.curve_chain(c);
    for (int i = 0; i < sc.c1_dim(); ++i) sys(i, int(unmarked.size()) + c) = -ch[i];
  }
  IntMatrix ker = integer_kernel(sys);
  // project to region coordinates and reduce to a lattice basis
  IntMatrix proj(nr, ker.cols());
  for (int j = 0; j < ker.cols(); ++j)
    for (size_t i = 0; i < unmarked.size(); ++i) proj(unmarked[i], j) = ker(int(i), j);
  // column staircase to drop dependent columns
  IntMatrix b = proj;
  int col = 0;
  for (int row = 0; row < nr && col < b.cols(); ++row) {
    int nz = -1;
    for (int j = col; j < b.cols(); ++j)
      if (b(row, j) != 0) { nz = j; break; }
    if (nz < 0) continue;
    b.swap_cols(col, nz);
    for (int j = col + 1; j < b.cols(); ++j) {
      while (b(row, j) != 0) {
        Int q = b(row, col) / b(row, j);
        for (int i = 0; i < nr; ++i) b(i, col) -= q * b(i, j);
        b.swap_cols(col, j);
      }
    }
    ++col;
  }
  PeriodicDomainLattice out;
  out.basis = IntMatrix(nr, col);
  for (int j = 0; j < col; ++j)
    for (int i = 0; i < nr; ++i) out.basis(i, j) = b(i, j);
  return out;
}

inline PeriodicDomainLattice periodic_domains(const Diagram& d) {
  SurfaceChains sc(d);
  return periodic_domains(d, sc);
}

// Weak admissibility: every nonzero periodic domain has both positive and
// negative multiplicities, decided exactly on the rational cone.
inline bool is_weakly_admissible(const Diagram& d) {
  PeriodicDomainLattice lat = periodic_domains(d);
  if (lat.rank() == 0) return true;
  return !cone_has_nonneg_nonzero(lat.basis);
}

inline bool is_weakly_admissible(const Diagram& d, const PeriodicDomainLattice& lat) {
  if (lat.rank() == 0) return true;
  return !cone_has_nonneg_nonzero(lat.basis);
}

}  // namespace hgc
