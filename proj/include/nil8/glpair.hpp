// Elements of gl(m) + gl(n) flattened as a single coordinate vector:
// row-major m x m block, then row-major n x n block.  This is the ambient
// space for tensor stabilizers and triple centralizers.
#pragma once

#include "nil8/mat.hpp"

#include <utility>

namespace nil8 {

inline int glpair_dim(int m, int n) { return m * m + n * n; }

Vec flatten_pair(const Mat& a, const Mat& b);
std::pair<Mat, Mat> unflatten_pair(const Vec& v, int m, int n);
Vec pair_bracket(const Vec& x, const Vec& y, int m, int n);
/// Ad(g_m, g_n) acting componentwise by conjugation.
Vec pair_conjugate(const Vec& x, const Mat& gm, const Mat& gm_inv, const Mat& gn, const Mat& gn_inv, int m, int n);

}  // namespace nil8
