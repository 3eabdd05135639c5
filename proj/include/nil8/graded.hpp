// Z-gradings of the split D7/E7 Chevalley algebras by a single distinguished
// node, the identification of the degree-0 part with sl(m) + sl(n) + Q*z,
// and the equivariant isomorphism from the degree-1 part onto the space of
// skew (2,1)-tensors.
//
// The distinguished node is not hard-coded: for each signature it is found
// as the unique node whose grading gives dim g_1 = C(m,2)*n with uncolored
// diagram A_{m-1} x A_{n-1}.  Chain orientations are pinned down by the
// existence of the equivariant isomorphism, whose solution space is
// certified to be exactly one-dimensional.
#pragma once

#include "nil8/chevalley.hpp"
#include "nil8/tensor.hpp"

#include <array>
#include <map>
#include <memory>

namespace nil8 {

struct GradedAlgebra {
  std::shared_ptr<const ChevalleyAlgebra> chev;
  int node = -1;  // i0, 0-based
  int m = 0, n = 0;
  std::vector<int> degree;             // per basis index
  std::map<int, std::vector<int>> pieces;  // degree -> sorted basis indices

  const LieAlg& alg() const { return chev->algebra(); }
  int dim() const { return chev->dim(); }
  const std::vector<int>& piece(int d) const;

  static GradedAlgebra by_node(std::shared_ptr<const ChevalleyAlgebra> chev, int i0);
  /// D7 for (4,4), E7 for (5,3) and (6,2); searches for the node.
  static GradedAlgebra for_signature(int m, int n);
};

/// Linear isomorphism g_0 -> sl(m) + sl(n) + Q*z, stored per basis element
/// as a flattened (A | B | c) row.  z is the central grading element acting
/// on g_1 as the identity; it maps to (0, 0, 1).
struct G0Identification {
  int m = 0, n = 0;
  std::vector<int> g0_basis;   // ascending basis indices of g_0
  Mat images;                  // one row per g0_basis entry, width m^2+n^2+1
  std::vector<int> pos_in_g0;  // full basis index -> row, -1 outside g_0

  int coord_dim() const { return m * m + n * n + 1; }
  Vec apply(const Vec& full) const;
  Vec image_row(int full_idx) const;
  /// dp(a, b, c) = (a, b + c I): folds the central coordinate into gl(n).
  Vec fold_dp(const Vec& abc) const;
};

G0Identification identify_g0(const GradedAlgebra& g, bool swap_sides, bool rev_u, bool rev_v);

/// Equivariant isomorphism g_1 -> Hom(wedge^2 Q^m, Q^n).  Weight matching is
/// a bijection between root vectors and tensor monomials, so the map is
/// diagonal: x_alpha -> scale_alpha * monomial_alpha.
struct ModuleIso {
  int m = 0, n = 0;
  int full_dim = 0;  // dimension of the ambient graded algebra
  std::vector<int> g1_basis;
  std::vector<std::array<int, 3>> monomial;  // (i, j, k) with global k
  std::vector<Rat> scale;

  SkewTensor apply(const Vec& full) const;
  Vec lift(const SkewTensor& e) const;  // full-dimension vector supported on g_1
};

/// The raw equivariance system over the per-root scales (used by the
/// one-dimensionality certificate and its independent oracle in the tests).
Mat module_iso_equivariance_system(const GradedAlgebra& g, const G0Identification& id,
                                   const std::vector<std::array<int, 3>>& monomials);

struct GradedContext {
  GradedAlgebra g;
  G0Identification id;
  ModuleIso iso;
  int iso_solution_dim = 0;  // certified dimension of the equivariance kernel
};

/// Builds (once per process, cached) the graded context for a signature in
/// {(6,2), (5,3), (4,4)}.
const GradedContext& graded_context(int m, int n);

}  // namespace nil8
