#include "nil8/rootsystem.hpp"

#include <algorithm>
#include <stdexcept>

namespace nil8 {

namespace {

std::vector<std::vector<int>> cartan_matrix(LieFamily family, int rank) {
  auto chain = [](std::vector<std::vector<int>>& c, int i, int j) {
    c[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
    c[static_cast<size_t>(j)][static_cast<size_t>(i)] = -1;
  };
  std::vector<std::vector<int>> c(static_cast<size_t>(rank), std::vector<int>(static_cast<size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) c[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
  switch (family) {
    case LieFamily::A:
      if (rank < 1) throw std::invalid_argument("RootSystem: A rank >= 1");
      for (int i = 0; i + 1 < rank; ++i) chain(c, i, i + 1);
      break;
    case LieFamily::D:
      // Bourbaki: chain 1..rank-2 with both rank-1 and rank attached to rank-2.
      if (rank < 4) throw std::invalid_argument("RootSystem: D rank >= 4");
      for (int i = 0; i + 1 < rank - 2; ++i) chain(c, i, i + 1);
      chain(c, rank - 3, rank - 2);
      chain(c, rank - 3, rank - 1);
      break;
    case LieFamily::E:
      // Bourbaki: chain 1-3-4-5-...-rank, node 2 attached to node 4.
      if (rank < 6 || rank > 8) throw std::invalid_argument("RootSystem: E rank in {6,7,8}");
      chain(c, 0, 2);
      for (int i = 2; i + 1 < rank; ++i) chain(c, i, i + 1);
      chain(c, 1, 3);
      break;
  }
  return c;
}

}  // namespace

RootSystem RootSystem::build(LieFamily family, int rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan = cartan_matrix(family, rank);

  std::map<RootVec, int> seen;
  std::vector<RootVec> roots;
  for (int i = 0; i < rank; ++i) {
    RootVec r(static_cast<size_t>(rank), 0);
    r[static_cast<size_t>(i)] = 1;
    seen.emplace(r, 0);
    roots.push_back(std::move(r));
  }
  // Closure by root strings: with p = max{k : r - k*alpha_i is a root}, the
  // string through r has q = p - <r, alpha_i^vee> further roots upward.
  for (size_t t = 0; t < roots.size(); ++t) {
    const RootVec r = roots[t];
    for (int i = 0; i < rank; ++i) {
      int p = 0;
      RootVec down = r;
      while (true) {
        down[static_cast<size_t>(i)] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += r[static_cast<size_t>(j)] * rs.cartan[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (p - pairing > 0) {
        RootVec up = r;
        up[static_cast<size_t>(i)] += 1;
        if (!seen.count(up)) {
          seen.emplace(up, 0);
          roots.push_back(std::move(up));
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [&rs](const RootVec& a, const RootVec& b) {
    const int ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.positive_roots = std::move(roots);
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) rs.index_.emplace(rs.positive_roots[i], static_cast<int>(i));
  return rs;
}

RootSystem RootSystem::build(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("RootSystem: bad name '" + name + "'");
  const int rank = std::stoi(name.substr(1));
  switch (name[0]) {
    case 'A': return build(LieFamily::A, rank);
    case 'D': return build(LieFamily::D, rank);
    case 'E': return build(LieFamily::E, rank);
    default: throw std::invalid_argument("RootSystem: unsupported family '" + name + "'");
  }
}

int RootSystem::root_index(const RootVec& r) const {
  const auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_positive_root(const RootVec& r) const { return index_.count(r) != 0; }

int RootSystem::height(const RootVec& r) const {
  int h = 0;
  for (int v : r) h += v;
  return h;
}

int RootSystem::pairing(const RootVec& r, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += r[static_cast<size_t>(j)] * cartan[static_cast<size_t>(j)][static_cast<size_t>(i)];
  return s;
}

std::string RootSystem::name() const {
  const char f = family == LieFamily::A ? 'A' : family == LieFamily::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(rank);
}

}  // namespace nil8
