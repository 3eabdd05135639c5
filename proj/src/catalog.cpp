#include "nil8/catalog.hpp"

#include <stdexcept>

namespace nil8 {

namespace {

std::optional<WeightList> W(WeightList w) { return std::optional<WeightList>(std::move(w)); }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  // --- signature (6,2) ---
  c.push_back({1, "1", 6, 2, "e(1,2,7)+e(3,4,8)+e(5,6,7)+e(5,6,8)", "3*sl2R", 9, "S3",
               W({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), W({{0, 0, 0}, {0, 0, 0}}), 12, "", "1-bis"});
  c.push_back({1, "1-bis", 6, 2, "e(1,2,7)+e(3,4,8)-e(3,6,7)+e(4,5,7)-e(5,6,8)", "sl2C+sl2R", 9, "",
               std::nullopt, std::nullopt, 12, "", "1"});
  c.push_back({1, "2", 6, 2, "e(1,4,8)+e(1,5,7)+e(2,3,8)+e(4,6,7)", "2*sl2R+t", 7, "1",
               W({{1, 0}, {1, 0}, {0, 1}}), W({{0, 0}, {0, 0}}), 12, "", ""});
  c.push_back({1, "3", 6, 2, "e(1,4,8)+e(1,5,7)+e(2,3,8)+e(2,6,7)+e(3,4,7)", "sl2R+t", 4, "1",
               W({{1}, {1}, {1}}), W({{0}, {0}}), 10, "", ""});
  c.push_back({1, "4", 6, 2, "e(1,3,7)+e(1,6,8)+e(2,4,8)+e(2,5,7)", "2*sl2R+t", 7, "1",
               W({{1, 1}, {0, 1}}), W({{1, 0}}), 11, "", ""});
  c.push_back({1, "5", 6, 2, "e(1,2,8)+e(3,4,7)+e(5,6,7)", "sp4R+sl2R+t", 14, "1",
               W({{1, 0, 0}, {0, 0, 1}}), W({{0, 0, 0}, {0, 0, 0}}), 18, "", ""});
  c.push_back({1, "6", 6, 2, "e(1,2,8)+e(1,6,7)+e(2,5,7)+e(3,4,7)", "2*sl2R+t", 7, "1",
               W({{1, 0}, {1, 0}, {0, 1}}), W({{0, 0}, {0, 0}}), 12, "", ""});
  // --- signature (5,3) ---
  c.push_back({2, "1", 5, 3, "e(1,2,6)+e(1,5,8)+e(2,3,8)+e(2,5,7)+e(3,4,7)+e(4,5,6)", "sl2R", 3, "1",
               W({{4}}), W({{2}}), 4, "", "1-bis"});
  c.push_back({2, "1-bis", 5, 3,
               "e(1,2,6)-e(1,5,8)+2*e(2,3,6)+2*e(2,4,8)+e(2,5,7)-2*e(3,4,7)-2*e(3,5,8)+2*e(4,5,6)",
               "su2", 3, "", std::nullopt, std::nullopt, 4, "", "1"});
  c.push_back({2, "2", 5, 3, "e(1,4,6)+e(1,5,7)+e(2,3,8)+e(2,4,7)+e(3,5,6)", "2t", 2, "C2",
               std::nullopt, std::nullopt, 4, "", "2-bis"});
  c.push_back({2, "2-bis", 5, 3, "e(1,4,6)-e(1,5,7)-e(2,3,8)+e(2,4,6)+e(2,5,7)+e(3,4,7)-e(3,5,6)",
               "t+u", 2, "", std::nullopt, std::nullopt, 4, "", "2"});
  c.push_back({2, "3", 5, 3, "e(1,4,8)+e(1,5,6)+e(2,3,7)+e(2,4,8)+e(3,4,6)", "2t", 2, "C2",
               std::nullopt, std::nullopt, 4, "", "3-bis"});
  c.push_back({2, "3-bis", 5, 3, "e(1,3,8)+e(1,4,7)+e(1,5,6)-e(2,3,7)+e(2,4,8)+e(3,4,6)", "t+u", 2, "",
               std::nullopt, std::nullopt, 4, "", "3"});
  c.push_back({2, "4", 5, 3, "e(1,2,8)+e(1,5,7)+e(2,3,7)+e(2,5,6)+e(3,4,6)", "2t", 2, "1",
               std::nullopt, std::nullopt, 4, "", ""});
  c.push_back({2, "5", 5, 3, "e(1,3,6)+e(1,5,8)+e(2,4,7)+e(2,5,8)", "3t", 3, "S3",
               std::nullopt, std::nullopt, 5, "", "5-bis"});
  c.push_back({2, "5-bis", 5, 3, "e(1,3,6)+e(1,4,8)+e(1,5,7)-e(2,4,7)+e(2,5,8)", "2t+u", 3, "",
               std::nullopt, std::nullopt, 5, "", "5"});
  c.push_back({2, "6", 5, 3, "e(1,3,8)+e(1,5,7)+e(2,3,7)+e(2,4,6)", "3t", 3, "1",
               std::nullopt, std::nullopt, 5, "", ""});
  c.push_back({2, "7", 5, 3, "e(1,3,8)+e(1,4,7)+e(1,5,6)+e(2,3,7)+e(2,4,6)", "2t", 2, "1",
               std::nullopt, std::nullopt, 4, "", ""});
  c.push_back({2, "8", 5, 3, "e(1,2,7)+e(1,5,8)+e(2,5,6)+e(3,4,6)", "2*sl2R+t", 7, "1",
               W({{1, 0}, {0, 1}, {0, 0}}), W({{0, 1}, {0, 0}}), 9, "", ""});
  c.push_back({2, "9", 5, 3, "e(1,2,8)+e(1,3,6)+e(1,5,7)+e(2,4,7)+e(2,5,6)", "sl2R+t", 4, "1",
               W({{2}, {1}}), W({{1}, {0}}), 6, "", ""});
  c.push_back({2, "10", 5, 3, "e(1,2,8)+e(1,4,6)+e(2,3,7)+e(3,5,6)", "sl2R+2t", 5, "1",
               W({{1}, {1}, {0}}), W({{1}, {0}}), 7, "", ""});
  c.push_back({2, "11", 5, 3, "e(1,4,7)+e(1,5,8)+e(2,3,6)", "2*sl2R+2t", 8, "1",
               W({{1, 0}, {0, 1}, {0, 0}}), W({{1, 0}, {0, 0}}), 10, "", ""});
  c.push_back({2, "12", 5, 3, "e(1,2,8)+e(1,4,7)+e(1,5,6)+e(2,3,6)", "3t", 3, "1",
               std::nullopt, std::nullopt, 5, "", ""});
  // --- signature (4,4) ---
  c.push_back({3, "1", 4, 4, "e(1,2,5)+e(1,3,7)+e(2,4,8)+e(3,4,6)", "2*sl2R+t", 7, "C2",
               W({{1, 0}, {0, 1}}), W({{1, 1}}), 8, "", "1-bis"});
  c.push_back({3, "1-bis", 4, 4, "e(1,2,5)+e(1,3,7)-e(1,4,8)-e(2,3,8)-e(2,4,7)+e(3,4,6)", "sl2C+u", 7, "",
               std::nullopt, std::nullopt, 8, "", "1"});
  c.push_back({3, "2", 4, 4, "e(1,2,8)+e(1,3,5)+e(1,4,7)+e(2,3,7)+e(2,4,6)", "sl2R+t", 4, "1",
               W({{1}, {1}}), W({{2}, {0}}), 5, "", ""});
  c.push_back({3, "3", 4, 4, "e(1,2,7)+e(1,3,8)+e(1,4,5)+e(2,3,6)", "sl2R+2t", 5, "1",
               W({{1}, {0}, {0}}), W({{1}, {0}, {0}}), 6, "", ""});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(int table, const std::string& row) {
  for (const auto& e : catalog())
    if (e.table == table && e.row == row) return e;
  throw std::out_of_range("catalog: unknown row " + std::to_string(table) + "/" + row);
}

std::vector<std::pair<const CatalogEntry*, const CatalogEntry*>> bis_pairs() {
  std::vector<std::pair<const CatalogEntry*, const CatalogEntry*>> pairs;
  for (const auto& e : catalog()) {
    if (e.bis_partner.empty() || e.row.find("-bis") != std::string::npos) continue;
    pairs.emplace_back(&e, &catalog_entry(e.table, e.bis_partner));
  }
  return pairs;
}

}  // namespace nil8
