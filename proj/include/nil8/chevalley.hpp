// Chevalley basis {x_b, y_b, h_i} of a split simple Lie algebra over Q with
// integer structure constants.  Signs are fixed by the extraspecial-pair
// convention over the root order (height, then lexicographic): for every
// non-simple positive root g, the decomposition g = a + b with minimal a
// gets N(a,b) = +1, and every other constant follows from the standard
// identities.  All downstream invariants are independent of this choice.
#pragma once

#include "nil8/lie.hpp"
#include "nil8/rootsystem.hpp"

#include <memory>

namespace nil8 {

class ChevalleyAlgebra {
public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  const LieAlg& algebra() const { return alg_; }
  int rank() const { return rs_.rank; }
  int num_positive() const { return static_cast<int>(rs_.positive_roots.size()); }
  int dim() const { return 2 * num_positive() + rs_.rank; }

  // Basis layout: [0,P) x_t, [P,2P) y_t, [2P,2P+rank) h_i.
  int x_index(int t) const { return t; }
  int y_index(int t) const { return num_positive() + t; }
  int h_index(int i) const { return 2 * num_positive() + i; }
  int simple_root_position(int i) const;  // index of alpha_i in positive_roots

  /// N(beta_t, beta_s) for positive roots; 0 when the sum is not a root.
  int n_positive(int t, int s) const { return npos_[static_cast<size_t>(t)][static_cast<size_t>(s)]; }

  /// Degree of basis element `idx` under the grading by node i0 (coefficient
  /// of alpha_i0, negated on the y side, 0 on the Cartan).
  int degree_by_node(int idx, int i0) const;

private:
  RootSystem rs_;
  std::vector<std::vector<int>> npos_;
  LieAlg alg_;

  int n_any(const RootVec& a, bool a_pos, const RootVec& b, bool b_pos) const;
};

/// Process-wide cache; the E7 constants are built once and shared.
std::shared_ptr<const ChevalleyAlgebra> chevalley_cached(const std::string& name);

}  // namespace nil8
