#include "nil8/duality.hpp"

#include "nil8/catalog.hpp"

#include <array>

namespace nil8 {

std::string pencil_class_label(PencilClass c) {
  switch (c) {
    case PencilClass::CommonRadical: return "beta_6_8";
    case PencilClass::DiscZero: return "beta_6_22(0)";
    case PencilClass::DiscPos: return "beta_6_22(+)";
    case PencilClass::DiscNeg: return "beta_6_22(-)";
  }
  return "?";
}

SkewTensor dualize(const SkewTensor& e) {
  const int m = e.m(), n = e.n();
  const int wedge = m * (m - 1) / 2;
  const Mat bstar = e.beta_star();
  if (rank(bstar) != n) throw std::domain_error("dualize: beta_* not surjective");
  const int n2 = wedge - n;

  // Annihilator of ker beta_* inside wedge^2 U*.
  const auto ker = kernel(bstar);  // vectors in wedge^2 U
  Mat kmat(0, wedge);
  for (const Vec& k : ker) kmat.append_row(k);
  Mat ann(0, wedge);
  for (const Vec& a : kernel(kmat)) ann.append_row(a);
  if (ann.rows() != n) throw std::logic_error("dualize: annihilator dimension mismatch");

  // Greedy complement by monomial duals in the fixed order.
  Mat span = rowspace_canonical(ann);
  std::vector<int> chosen;
  for (int t = 0; t < wedge && static_cast<int>(chosen.size()) < n2; ++t) {
    const Vec mono = unit_vec(wedge, t);
    if (!rowspace_contains(span, mono)) {
      span.append_row(mono);
      span = rowspace_canonical(span);
      chosen.push_back(t);
    }
  }
  if (static_cast<int>(chosen.size()) != n2) throw std::logic_error("dualize: complement extraction failed");

  // Express each monomial class in the chosen complement basis: solve
  // against columns [ann | chosen monomials].
  Mat sysm(wedge, wedge);
  for (int c = 0; c < ann.rows(); ++c)
    for (int r = 0; r < wedge; ++r) sysm(r, c) = ann(c, r);
  for (int c = 0; c < n2; ++c) sysm(chosen[static_cast<size_t>(c)], ann.rows() + c) = Rat(1);
  const auto sys_inv = inverse(sysm);
  if (!sys_inv) throw std::logic_error("dualize: annihilator plus complement is not a basis");

  SkewTensor out(m, n2);
  int col = 0;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j, ++col) {
      const Vec coords = sys_inv->apply(unit_vec(wedge, col));
      for (int t = 0; t < n2; ++t) {
        const Rat& c = coords[static_cast<size_t>(ann.rows() + t)];
        if (!c.is_zero()) out.add_term(i, j, m + 1 + t, c);
      }
    }
  return out;
}

std::array<Rat, 3> pfaffian_pencil(const SkewTensor& e) {
  if (e.m() != 4 || e.n() != 2) throw std::invalid_argument("pfaffian_pencil: signature must be (4,2)");
  auto a = [&](int i, int j) { return e.coeff(i, j, 5); };
  auto b = [&](int i, int j) { return e.coeff(i, j, 6); };
  // Pf(M) = m12 m34 - m13 m24 + m14 m23 for M = xA + yB.
  const Rat q2 = a(1, 2) * a(3, 4) - a(1, 3) * a(2, 4) + a(1, 4) * a(2, 3);
  const Rat q0 = b(1, 2) * b(3, 4) - b(1, 3) * b(2, 4) + b(1, 4) * b(2, 3);
  const Rat q1 = a(1, 2) * b(3, 4) + b(1, 2) * a(3, 4) - a(1, 3) * b(2, 4) - b(1, 3) * a(2, 4) +
                 a(1, 4) * b(2, 3) + b(1, 4) * a(2, 3);
  return {q2, q1, q0};
}

PencilClass pfaffian_pencil_classify(const SkewTensor& e) {
  if (e.m() != 4 || e.n() != 2) throw std::invalid_argument("pfaffian_pencil_classify: signature must be (4,2)");
  if (e.radical().dim() > 0) return PencilClass::CommonRadical;
  const auto [q2, q1, q0] = pfaffian_pencil(e);
  const Rat disc = q1 * q1 - Rat(4) * q2 * q0;
  if (disc.is_zero()) return PencilClass::DiscZero;
  return disc.sign() > 0 ? PencilClass::DiscPos : PencilClass::DiscNeg;
}

DualityReport verify_duality_table() {
  DualityReport report;
  std::vector<PencilClass> seen;
  bool all_match = true;
  for (const auto& entry : catalog()) {
    if (entry.table != 3) continue;
    const PencilClass cls = pfaffian_pencil_classify(dualize(entry.tensor()));
    report.rows.push_back({entry.row, cls});
    seen.push_back(cls);
    all_match = all_match && (pencil_class_label(cls) == entry.expected_dual_class);
  }
  report.classes_distinct = true;
  for (size_t i = 0; i < seen.size(); ++i)
    for (size_t j = i + 1; j < seen.size(); ++j)
      if (seen[i] == seen[j]) report.classes_distinct = false;
  report.matches_frozen = all_match && report.rows.size() == 4;
  return report;
}

}  // namespace nil8
