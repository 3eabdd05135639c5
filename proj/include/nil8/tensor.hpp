// Skew-symmetric (2,1)-tensors e: wedge^2 Q^m -> Q^n, the text grammar used
// in the classification tables, the tensor <-> two-step-algebra
// correspondence, non-degeneracy tests and the tensor stabilizer in
// gl(m) + gl(n).
//
// Index conventions follow the tables: 1 <= i < j <= m on the U side and
// global V indices m < k <= m+n.
#pragma once

#include "nil8/glpair.hpp"
#include "nil8/lie.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace nil8 {

class SkewTensor {
public:
  SkewTensor(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }

  /// Adds c * e_{ij^k}; i > j is normalized by a sign flip, repeated keys
  /// are summed, zero coefficients are dropped.
  void add_term(int i, int j, int k, const Rat& c);
  const std::map<std::tuple<int, int, int>, Rat>& terms() const { return terms_; }
  Rat coeff(int i, int j, int k) const;

  /// Grammar:  expr := ['-'] term (('+'|'-') term)*
  ///           term := [coeff '*']? 'e(' int ',' int ',' int ')'
  ///           coeff := integer or "p/q"
  /// Whitespace is ignored.
  static SkewTensor parse(const std::string& src, int m, int n);
  std::string render() const;

  /// e(e_i ^ e_j) in Q^n, 1-based i, j.
  Vec value(int i, int j) const;

  /// Matrix of beta_*: wedge^2 Q^m -> Q^n over the basis e_i ^ e_j (i<j,
  /// lexicographic columns).
  Mat beta_star() const;

  /// {u : e(u ^ .) = 0}.
  Subspace radical() const;

  /// beta_* surjective and trivial radical.
  bool is_nondegenerate() const;

  /// The (m+n)-dimensional two-step algebra with [e_i, e_j] given by the
  /// tensor and V central.
  LieAlg to_lie() const;

  /// Group action (g_m, g_n) . e with (g.e)(u ^ u') = g_n e(g_m^-1 u ^ g_m^-1 u').
  SkewTensor transformed(const Mat& gm, const Mat& gn) const;

  /// Differential of the action: ((a, b) . e)(u ^ u') =
  /// b e(u ^ u') - e(au ^ u') - e(u ^ au'), plus c * e for the scalar part.
  SkewTensor action_diff(const Mat& a, const Mat& b, const Rat& c) const;

  friend bool operator==(const SkewTensor& x, const SkewTensor& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.terms_ == y.terms_;
  }

private:
  int m_, n_;
  std::map<std::tuple<int, int, int>, Rat> terms_;
};

/// Stabilizer Lie algebra g_e = {(a,b) : b e(u^u') = e(au^u') + e(u^au')},
/// as a subspace of gl(m) + gl(n) in flattened coordinates.
Subspace stabilizer_lie(const SkewTensor& e);

/// Extracts (tensor, base change g) from a non-degenerate two-step algebra:
/// U' extends the center to L by coordinate vectors, V is the derived
/// subalgebra; columns of g are the new basis.  Throws on degenerate input.
std::pair<SkewTensor, Mat> lie_to_tensor(const LieAlg& l);

struct ImpossibilityEntry {
  int m, n;
  std::string obstruction;  // human-readable reason
  int samples;
  int nondegenerate_found;
};

/// Dimension/parity obstructions for signatures (1,7), (2,6), (3,5), (7,1),
/// confirmed on `samples` seeded random tensors per signature with
/// coefficients in {-3..3}.
std::vector<ImpossibilityEntry> impossibility_report(std::uint64_t seed, int samples = 1000);

}  // namespace nil8
