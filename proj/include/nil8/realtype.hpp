// Exact classification of the reductive centralizer: center vs semisimple
// part, split/compact torus counts from the trace form, simple type from the
// Killing signature, and highest weights of the split cases on U and V.
#pragma once

#include "nil8/lie.hpp"
#include "nil8/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nil8 {

using WeightTuple = std::vector<int>;

struct IdealInfo {
  int dim = 0;
  int rank = 0;
  bool type_a = false;  // all roots of one length (A family); C2 otherwise here
};

struct WeightData {
  std::vector<IdealInfo> ideals;      // canonical order: descending dimension
  std::vector<WeightTuple> u, v;      // one tuple per irreducible constituent
};

struct RealTypeDescriptor {
  int total_dim = 0;
  int center_dim = 0;
  Signature center_sig;  // pos = split tori, neg = compact tori, zero must be 0
  int ss_dim = 0;
  Signature ss_killing_sig;
  std::string type_label;  // e.g. "3*sl2R", "sp4R+sl2R+t", "2t+u"
  int complex_rank = 0;
  bool split_semisimple = false;
  std::optional<WeightData> weights;

  friend bool operator==(const RealTypeDescriptor& a, const RealTypeDescriptor& b) {
    return a.total_dim == b.total_dim && a.center_dim == b.center_dim && a.center_sig == b.center_sig &&
           a.ss_dim == b.ss_dim && a.ss_killing_sig == b.ss_killing_sig && a.type_label == b.type_label;
  }
};

struct Fingerprint {
  int m = 0, n = 0;
  int dim_ge = 0;  // dim of the full tensor stabilizer in gl(m) + gl(n)
  RealTypeDescriptor descriptor;
};

/// (center, semisimple part) of a bracket-closed reductive subspace of
/// gl(m) + gl(n); throws when the two do not decompose g directly.
std::pair<Subspace, Subspace> reductive_split(const Subspace& g, int m, int n);

/// Signature of Tr(xy) on an abelian subspace of ad-semisimple matrices;
/// positive count = split tori, negative = compact tori.
Signature torus_signature(const Subspace& center, int m, int n);

struct SsClass {
  std::string label;
  int complex_rank = 0;
  bool split = false;
  std::vector<int> ideal_dims;
};

/// Type lookup on (dim, Killing signature); covers every label appearing in
/// the catalog and rejects anything else.
SsClass classify_semisimple_data(int dim, const Signature& killing_sig);
SsClass classify_semisimple(const Subspace& ss, int m, int n, Signature* killing_out = nullptr);

/// Highest weights of the U = Q^m and V = Q^n modules under a split
/// semisimple part, with the canonicalized per-ideal coordinate blocks.
WeightData highest_weights(const Subspace& ss, int m, int n);

/// Full invariant pipeline for a non-degenerate tensor of a supported
/// signature.
Fingerprint fingerprint(const SkewTensor& e);

/// Comparison up to the documented ambiguity: permutations of same-shape
/// ideals applied consistently to the U and V columns, plus the diagram flip
/// on A-type ideals of rank >= 2.
bool weights_equivalent(const WeightData& computed, const std::vector<WeightTuple>& expected_u,
                        const std::vector<WeightTuple>& expected_v);

std::string compose_type_label(const std::string& ss_label, const Signature& center_sig);

}  // namespace nil8
