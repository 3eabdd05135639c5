// Signature-(4,4) duality: beta -> beta* on wedge^2 U* modulo the
// annihilator of ker beta_*, and the Pfaffian-pencil classifier that
// separates the four real equivalence classes of the dual (4,2) maps.
#pragma once

#include "nil8/tensor.hpp"

#include <string>
#include <vector>

namespace nil8 {

enum class PencilClass { CommonRadical, DiscZero, DiscPos, DiscNeg };

/// Class names; the +/- calibration against the explicit representatives is
/// frozen in the classifier tests.
std::string pencil_class_label(PencilClass c);

/// Dual tensor of signature (m, C(m,2) - n); requires beta_* surjective.
/// The quotient basis is chosen by greedy pivoting over the monomial order
/// e1*^e2* < e1*^e3* < ..., so the output is deterministic; it is
/// well-defined up to GL on the new V side, which the classifier ignores.
SkewTensor dualize(const SkewTensor& e);

/// For signature (4,2): writes e as a skew pair (A, B), takes
/// q(x,y) = Pf(xA + yB) and classifies by common radical, then by the sign
/// of disc(q).
PencilClass pfaffian_pencil_classify(const SkewTensor& e);

/// Binary quadratic q(x,y) = q2 x^2 + q1 xy + q0 y^2 of the pencil.
std::array<Rat, 3> pfaffian_pencil(const SkewTensor& e);

struct DualityRow {
  std::string row;
  PencilClass cls;
};

struct DualityReport {
  std::vector<DualityRow> rows;
  bool classes_distinct = false;
  bool matches_frozen = false;
};

/// Dualizes the four (4,4) catalog rows and classifies each; the four
/// classes must be pairwise distinct and match the frozen dictionary.
DualityReport verify_duality_table();

}  // namespace nil8
