#include "nil8/sl2.hpp"

namespace nil8 {

Vec lift_tensor(const GradedContext& ctx, const SkewTensor& e) { return ctx.iso.lift(e); }

Sl2Triple embed_triple(const GradedContext& ctx, const Vec& ehat) {
  const LieAlg& alg = ctx.g.alg();
  const int dim = ctx.g.dim();
  if (static_cast<int>(ehat.size()) != dim) throw std::invalid_argument("embed_triple: coordinate size mismatch");
  if (is_zero(ehat)) throw std::invalid_argument("embed_triple: zero element");

  const std::vector<int>& gm1 = ctx.g.piece(-1);
  const int W = static_cast<int>(gm1.size());
  // W-columns w_b = [ehat, y_b]; solve [sum c_b w_b, ehat] = 2 ehat.
  std::vector<Vec> w(static_cast<size_t>(W));
  Mat hsys(dim, W);
  for (int b = 0; b < W; ++b) {
    w[static_cast<size_t>(b)] = alg.bracket(ehat, unit_vec(dim, gm1[static_cast<size_t>(b)]));
    const Vec col = alg.bracket(w[static_cast<size_t>(b)], ehat);
    for (int r = 0; r < dim; ++r) hsys(r, b) = col[static_cast<size_t>(r)];
  }
  Vec rhs = zero_vec(dim);
  for (int r = 0; r < dim; ++r) rhs[static_cast<size_t>(r)] = Rat(2) * ehat[static_cast<size_t>(r)];
  const auto c = solve(hsys, rhs);
  if (!c) throw std::logic_error("embed_triple: no characteristic h in [e, g_-1]");
  Vec h = zero_vec(dim);
  for (int b = 0; b < W; ++b) axpy(h, (*c)[static_cast<size_t>(b)], w[static_cast<size_t>(b)]);

  // f in g_-1 with [e,f] = h and [h,f] = -2f.
  Mat fsys(2 * dim, W);
  for (int b = 0; b < W; ++b) {
    const Vec yb = unit_vec(dim, gm1[static_cast<size_t>(b)]);
    const Vec c1 = alg.bracket(ehat, yb);
    Vec c2 = alg.bracket(h, yb);
    c2[static_cast<size_t>(gm1[static_cast<size_t>(b)])] += Rat(2);
    for (int r = 0; r < dim; ++r) {
      fsys(r, b) = c1[static_cast<size_t>(r)];
      fsys(dim + r, b) = c2[static_cast<size_t>(r)];
    }
  }
  Vec frhs = zero_vec(2 * dim);
  for (int r = 0; r < dim; ++r) frhs[static_cast<size_t>(r)] = h[static_cast<size_t>(r)];
  const auto fc = solve(fsys, frhs);
  if (!fc) throw std::logic_error("embed_triple: no completion f in g_-1");
  Vec f = zero_vec(dim);
  for (int b = 0; b < W; ++b)
    if (!(*fc)[static_cast<size_t>(b)].is_zero()) f[static_cast<size_t>(gm1[static_cast<size_t>(b)])] = (*fc)[static_cast<size_t>(b)];

  Sl2Triple t{std::move(h), ehat, std::move(f)};
  // Exact postconditions.
  const Vec two_e = Rat(2) * t.e;
  const Vec minus_two_f = Rat(-2) * t.f;
  if (alg.bracket(t.h, t.e) != two_e || alg.bracket(t.h, t.f) != minus_two_f || alg.bracket(t.e, t.f) != t.h)
    throw std::logic_error("embed_triple: triple relations failed");
  return t;
}

CentralizerResult centralizer_triple(const GradedContext& ctx, const Sl2Triple& t) {
  const LieAlg& alg = ctx.g.alg();
  const int dim = ctx.g.dim();
  const std::vector<int>& g0 = ctx.id.g0_basis;
  const int W = static_cast<int>(g0.size());
  Mat sys(3 * dim, W);
  for (int b = 0; b < W; ++b) {
    const Vec zb = unit_vec(dim, g0[static_cast<size_t>(b)]);
    const Vec c1 = alg.bracket(zb, t.h);
    const Vec c2 = alg.bracket(zb, t.e);
    const Vec c3 = alg.bracket(zb, t.f);
    for (int r = 0; r < dim; ++r) {
      sys(r, b) = c1[static_cast<size_t>(r)];
      sys(dim + r, b) = c2[static_cast<size_t>(r)];
      sys(2 * dim + r, b) = c3[static_cast<size_t>(r)];
    }
  }
  const int m = ctx.id.m, n = ctx.id.n;
  Mat basis(0, glpair_dim(m, n));
  for (const Vec& k : kernel(sys)) {
    Vec full = zero_vec(dim);
    for (int b = 0; b < W; ++b) full[static_cast<size_t>(g0[static_cast<size_t>(b)])] = k[static_cast<size_t>(b)];
    basis.append_row(ctx.id.fold_dp(ctx.id.apply(full)));
  }
  return CentralizerResult{Subspace(glpair_dim(m, n), basis)};
}

bool verify_sl2_closure(const CentralizerResult& c, int m, int n) {
  for (int i = 0; i < c.gt.dim(); ++i)
    for (int j = i + 1; j < c.gt.dim(); ++j) {
      const Vec br = pair_bracket(c.gt.basis_vector(i), c.gt.basis_vector(j), m, n);
      if (!c.gt.contains(br)) return false;
    }
  return true;
}

namespace {

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) add_mul(r[i + j], a[i], b[j]);
  return r;
}

std::vector<Rat> poly_divide_exact(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> rem = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1);
  while (rem.size() >= b.size() && !(rem.size() == 1 && rem[0].is_zero())) {
    const Rat f = rem.back() / b.back();
    const size_t shift = rem.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) sub_mul(rem[shift + i], f, b[i]);
    while (rem.size() > 1 && rem.back().is_zero()) rem.pop_back();
    if (rem.size() < b.size()) break;
  }
  return q;
}

}  // namespace

std::vector<Rat> poly_lcm(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  const std::vector<Rat> g = poly_gcd(a, b);
  std::vector<Rat> l = poly_divide_exact(poly_mul(a, b), g);
  const Rat inv = Rat(1) / l.back();
  for (auto& c : l) c *= inv;
  return l;
}

std::vector<Rat> ad_h_minpoly(const GradedContext& ctx, const Vec& h) {
  const LieAlg& alg = ctx.g.alg();
  std::vector<Rat> result{Rat(0), Rat(1)};  // x, refined below; ad h kills h itself
  bool first = true;
  for (const auto& [deg, idxs] : ctx.g.pieces) {
    (void)deg;
    const int d = static_cast<int>(idxs.size());
    // ad(h) restricted to the piece, in piece coordinates.
    Mat block(d, d);
    for (int b = 0; b < d; ++b) {
      Vec img = alg.bracket(h, unit_vec(ctx.g.dim(), idxs[static_cast<size_t>(b)]));
      for (int r = 0; r < d; ++r) {
        block(r, b) = img[static_cast<size_t>(idxs[static_cast<size_t>(r)])];
        img[static_cast<size_t>(idxs[static_cast<size_t>(r)])] = Rat(0);
      }
      if (!is_zero(img)) throw std::invalid_argument("ad_h_minpoly: h does not preserve the grading");
    }
    const std::vector<Rat> p = minpoly(block);
    result = first ? p : poly_lcm(result, p);
    first = false;
  }
  return result;
}

}  // namespace nil8
