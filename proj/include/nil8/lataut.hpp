// Automorphism group of a positive-definite integral Gram matrix by plain
// backtracking over short-vector candidates.
#pragma once

#include "nil8/mat.hpp"

#include <vector>

namespace nil8 {

using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;  // rows

/// Throws unless all leading principal minors are positive.
void require_positive_definite(const IntMat& gram);

/// All integer vectors v with v^T G v = t, inside the exact box bound
/// |v_i| <= sqrt(t * (G^-1)_ii).  Deterministic lexicographic order.
std::vector<IntVec> vectors_of_norm(const IntMat& gram, long t);

struct AutGroup {
  std::vector<IntMat> elements;  // sorted lexicographically by flattened entries
  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const IntMat& g) const;
};

/// Full automorphism group {g : g^T G g = G} by backtracking on the images
/// of the basis vectors (columns of g).
AutGroup aut_group(const IntMat& gram);

IntMat int_mat_mul(const IntMat& a, const IntMat& b);
long int_mat_det3(const IntMat& a);  // determinant for dim <= 3

}  // namespace nil8
