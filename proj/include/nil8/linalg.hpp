// Exact dense linear algebra over the rationals: reduced row echelon form,
// kernels, linear solving, congruence signatures and minimal polynomials.
// The row-elimination inner loop has an OpenMP variant; rref_serial is the
// reference implementation kept for testing and benchmarking against it.
#pragma once

#include "nil8/mat.hpp"

#include <optional>
#include <vector>

namespace nil8 {

struct RrefResult {
  Mat m;
  std::vector<int> pivot_cols;  // pivot column of row r, ascending
  int rank = 0;
};

RrefResult rref(Mat a);         // parallel row updates when the matrix is large
RrefResult rref_serial(Mat a);  // single-threaded reference; identical output

int rank(const Mat& a);

/// Canonical null-space basis: one vector per free column, ascending, with a
/// 1 in the free coordinate.  Satisfies |kernel| + rank = cols.
std::vector<Vec> kernel(const Mat& a);

/// Some solution of a x = b with all free variables set to zero, or nullopt
/// when the system is inconsistent.  Deterministic.
std::optional<Vec> solve(const Mat& a, const Vec& b);

std::optional<Mat> inverse(const Mat& a);
Rat det(Mat a);

struct Signature {
  int pos = 0, neg = 0, zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester signature of a symmetric rational matrix, by exact congruence
/// diagonalization with largest-|pivot| symmetric pivoting.  Throws on
/// non-symmetric input.
Signature signature(const Mat& s);

/// Monic minimal polynomial, coefficients ascending (c0, c1, ..., 1).
std::vector<Rat> minpoly(const Mat& a);

bool minpoly_squarefree(const Mat& a);

std::vector<Rat> poly_derivative(const std::vector<Rat>& p);
std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b);  // monic gcd
Rat poly_eval(const std::vector<Rat>& p, const Rat& x);

/// All roots (with multiplicity) of a monic rational polynomial when it
/// splits over Q; nullopt if some factor has no rational root.
std::optional<std::vector<Rat>> rational_roots_if_split(const std::vector<Rat>& monic);

// --- Row spaces.  A subspace is handled through the canonical (RREF) basis
// --- of the matrix whose rows span it; equality of subspaces is equality of
// --- canonical forms.

Mat rowspace_canonical(const Mat& rows);
bool same_rowspace(const Mat& a, const Mat& b);
bool rowspace_contains(const Mat& rows, const Vec& v);
bool rowspace_contains_all(const Mat& rows, const Mat& others);
Mat rowspace_sum(const Mat& a, const Mat& b);
Mat rowspace_intersection(const Mat& a, const Mat& b);

/// Matrix of the operator `op` restricted to span(basis rows), i.e. the
/// square matrix R with op(basis_i) = sum_j R(j,i) basis_j.  Throws when the
/// span is not op-invariant.
Mat restrict_operator(const Mat& op, const Mat& basis);

}  // namespace nil8
