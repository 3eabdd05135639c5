// Structure-constant Lie algebras over Q and the standard structural
// queries: bracket, Jacobi verification, center, derived subalgebra,
// two-step/non-degeneracy predicates, Killing form, base change.
//
// Brackets are stored as sparse rows over the i<j index pairs; the
// antisymmetric half is implied.  The exhaustive Jacobi check has an OpenMP
// variant plus a serial reference used to cross-test it.
#pragma once

#include "nil8/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace nil8 {

struct BracketTerm {
  int k;
  Rat c;
};

/// A linear subspace of Q^ambient, kept as a canonical (RREF) row basis so
/// that equality of subspaces is equality of representations.
class Subspace {
public:
  Subspace() = default;
  Subspace(int ambient, Mat basis_rows)
      : ambient_(ambient), basis_(rowspace_canonical(std::move(basis_rows))) {}
  static Subspace full(int ambient) { return Subspace(ambient, Mat::identity(ambient)); }
  static Subspace zero(int ambient) { return Subspace(ambient, Mat(0, ambient)); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }
  bool contains(const Vec& v) const { return rowspace_contains(basis_, v); }
  bool contains(const Subspace& o) const { return rowspace_contains_all(basis_, o.basis_); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  int ambient_ = 0;
  Mat basis_;
};

class LieAlg {
public:
  explicit LieAlg(int dim);

  int dim() const { return dim_; }

  /// [b_i, b_j] += c * b_k for i != j; the (j,i) half is implied.
  void add_term(int i, int j, int k, const Rat& c);
  void set_label(int i, std::string label);
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sparse terms of [b_i, b_j]; sign handled for either index order.
  std::vector<BracketTerm> bracket_terms(int i, int j) const;
  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Mat ad(const Vec& x) const;
  Mat ad_basis(int i) const;

  /// First (i,j,k), i<j<k, violating the Jacobi identity, or nullopt.
  std::optional<std::array<int, 3>> jacobi_witness() const;
  std::optional<std::array<int, 3>> jacobi_witness_serial() const;

  Subspace center() const;
  Subspace derived() const;
  bool is_two_step() const;
  /// Two-step algebras: derived subalgebra equals the center.
  bool is_nondegenerate_two_step() const;
  /// (L', dim A) with L isomorphic to L' x A, A abelian, L' non-degenerate.
  std::pair<LieAlg, int> degenerate_split() const;

  Mat killing_gram() const;

  /// Structure constants transported along the base change with new basis
  /// vectors b'_i = sum_j g(j,i) b_j.  Throws on singular g.
  LieAlg change_basis(const Mat& g) const;

private:
  std::optional<std::array<int, 3>> jacobi_impl(bool parallel) const;

  int dim_;
  std::vector<std::vector<BracketTerm>> rows_;  // indexed by pair_index(i,j), i<j
  std::vector<std::string> labels_;

  size_t pair_index(int i, int j) const;  // requires i < j
};

/// Gram matrix of F(x,y) = Tr(xy) on a subspace of gl(m) + gl(n), elements
/// flattened as (row-major m x m block, then row-major n x n block).
Mat ambient_trace_form(const Subspace& s, int m, int n);

}  // namespace nil8
