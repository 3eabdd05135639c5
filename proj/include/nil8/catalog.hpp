// The 27 orbit representatives of non-degenerate two-step nilpotent real Lie
// algebras of dimension 8 (signatures (6,2), (5,3), (4,4)), together with
// their expected invariants: reductive centralizer type, highest weights on
// U and V where applicable, component group (carried as untested metadata),
// the stabilizer dimension and, for signature (4,4), the pencil class of the
// dual tensor.
#pragma once

#include "nil8/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nil8 {

using WeightList = std::vector<std::vector<int>>;

struct CatalogEntry {
  int table;          // 1 -> (6,2), 2 -> (5,3), 3 -> (4,4)
  std::string row;    // "1", "1-bis", ...
  int m, n;
  std::string tensor_src;
  std::string expected_type;  // canonical label, e.g. "3*sl2R", "2t+u"
  int expected_gt_dim;
  std::string expected_pi0;   // metadata only, not recomputed here
  std::optional<WeightList> expected_weights_u;
  std::optional<WeightList> expected_weights_v;
  int expected_dim_ge;              // frozen from the independent elimination oracle
  std::string expected_dual_class;  // table 3 only; frozen from the calibration run
  std::string bis_partner;          // other real form in the same complex orbit, or ""

  SkewTensor tensor() const { return SkewTensor::parse(tensor_src, m, n); }
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(int table, const std::string& row);
std::vector<std::pair<const CatalogEntry*, const CatalogEntry*>> bis_pairs();

}  // namespace nil8
