// Simply-laced root systems (A, D, E families) generated from the Cartan
// matrix by root-string closure.  Roots are integer coefficient vectors over
// the simple roots.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace nil8 {

using RootVec = std::vector<int>;

enum class LieFamily { A, D, E };

struct RootSystem {
  LieFamily family;
  int rank;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<RootVec> positive_roots;   // sorted by height, then lexicographically

  static RootSystem build(LieFamily family, int rank);
  static RootSystem build(const std::string& name);  // "A2", "D7", "E7", ...

  int root_index(const RootVec& r) const;  // index into positive_roots, -1 if absent
  bool is_positive_root(const RootVec& r) const;
  int height(const RootVec& r) const;
  bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
  /// <r, alpha_i^vee> for an arbitrary integer vector r.
  int pairing(const RootVec& r, int i) const;
  std::string name() const;

private:
  std::map<RootVec, int> index_;
};

}  // namespace nil8
