// Homogeneous sl2-triples through a degree-1 element and the centralizer of
// the triple, transported to matrices in gl(m) + gl(n).
#pragma once

#include "nil8/graded.hpp"

namespace nil8 {

struct Sl2Triple {
  Vec h, e, f;  // coordinates in the Chevalley basis; h in g_0, f in g_-1
};

Vec lift_tensor(const GradedContext& ctx, const SkewTensor& e);

/// Embeds a nonzero degree-1 element: h is solved inside W = [e, g_-1] with
/// [h,e] = 2e, then f in g_-1 from [e,f] = h and [h,f] = -2f.  All relations
/// are re-checked exactly before returning.
Sl2Triple embed_triple(const GradedContext& ctx, const Vec& ehat);

struct CentralizerResult {
  Subspace gt;  // subspace of gl(m) + gl(n), flattened; image under dp of the
                // triple centralizer in sl(m) + sl(n) + Q
  int dim() const { return gt.dim(); }
};

CentralizerResult centralizer_triple(const GradedContext& ctx, const Sl2Triple& t);

/// True iff the transported subspace is closed under the matrix bracket.
bool verify_sl2_closure(const CentralizerResult& c, int m, int n);

/// Minimal polynomial of ad(h) on the graded algebra, computed blockwise
/// over the graded pieces (ad(h) preserves each piece).
std::vector<Rat> ad_h_minpoly(const GradedContext& ctx, const Vec& h);

std::vector<Rat> poly_lcm(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace nil8
