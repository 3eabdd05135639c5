#include "nil8/graded.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace nil8 {

const std::vector<int>& GradedAlgebra::piece(int d) const {
  static const std::vector<int> empty;
  const auto it = pieces.find(d);
  return it == pieces.end() ? empty : it->second;
}

GradedAlgebra GradedAlgebra::by_node(std::shared_ptr<const ChevalleyAlgebra> chev, int i0) {
  GradedAlgebra g;
  g.chev = std::move(chev);
  g.node = i0;
  g.degree.resize(static_cast<size_t>(g.chev->dim()));
  for (int idx = 0; idx < g.chev->dim(); ++idx) {
    const int d = g.chev->degree_by_node(idx, i0);
    g.degree[static_cast<size_t>(idx)] = d;
    g.pieces[d].push_back(idx);
  }
  return g;
}

namespace {

// Connected components of the Dynkin diagram with node i0 removed, each
// returned in path order.  Throws if a component is not a path.
std::vector<std::vector<int>> uncolored_chains(const RootSystem& rs, int i0) {
  const int rank = rs.rank;
  std::vector<char> used(static_cast<size_t>(rank), 0);
  used[static_cast<size_t>(i0)] = 1;
  std::vector<std::vector<int>> comps;
  for (int start = 0; start < rank; ++start) {
    if (used[static_cast<size_t>(start)]) continue;
    std::vector<int> comp{start};
    used[static_cast<size_t>(start)] = 1;
    for (size_t t = 0; t < comp.size(); ++t)
      for (int j = 0; j < rank; ++j)
        if (!used[static_cast<size_t>(j)] && j != i0 && rs.adjacent(comp[t], j)) {
          used[static_cast<size_t>(j)] = 1;
          comp.push_back(j);
        }
    // order as a path
    auto degree_in = [&](int v) {
      int d = 0;
      for (int w : comp)
        if (w != v && rs.adjacent(v, w)) ++d;
      return d;
    };
    std::vector<int> ends;
    for (int v : comp)
      if (degree_in(v) <= 1) ends.push_back(v);
    if (comp.size() == 1) {
      comps.push_back(comp);
      continue;
    }
    if (ends.size() != 2) throw std::domain_error("uncolored component is not a path");
    std::vector<int> path{std::min(ends[0], ends[1])};
    std::vector<char> seen(static_cast<size_t>(rank), 0);
    seen[static_cast<size_t>(path[0])] = 1;
    while (path.size() < comp.size()) {
      bool advanced = false;
      for (int w : comp)
        if (!seen[static_cast<size_t>(w)] && rs.adjacent(path.back(), w)) {
          path.push_back(w);
          seen[static_cast<size_t>(w)] = 1;
          advanced = true;
          break;
        }
      if (!advanced) throw std::domain_error("uncolored component is not a path");
    }
    comps.push_back(std::move(path));
  }
  return comps;
}

}  // namespace

GradedAlgebra GradedAlgebra::for_signature(int m, int n) {
  const bool d7 = (m == 4 && n == 4);
  const bool e7 = (m == 6 && n == 2) || (m == 5 && n == 3);
  if (!d7 && !e7) throw std::invalid_argument("GradedAlgebra: unsupported signature");
  auto chev = chevalley_cached(d7 ? "D7" : "E7");
  const RootSystem& rs = chev->roots();
  const int g1_target = m * (m - 1) / 2 * n;
  int found = -1;
  for (int i0 = 0; i0 < rs.rank; ++i0) {
    int g1 = 0;
    for (const auto& r : rs.positive_roots)
      if (r[static_cast<size_t>(i0)] == 1) ++g1;
    if (g1 != g1_target) continue;
    std::vector<std::vector<int>> comps;
    try {
      comps = uncolored_chains(rs, i0);
    } catch (const std::domain_error&) {
      continue;
    }
    if (comps.size() != 2) continue;
    std::vector<size_t> sizes{comps[0].size(), comps[1].size()};
    std::sort(sizes.begin(), sizes.end());
    std::vector<size_t> want{static_cast<size_t>(std::min(m, n) - 1), static_cast<size_t>(std::max(m, n) - 1)};
    if (sizes != want) continue;
    if (found >= 0) throw std::logic_error("GradedAlgebra: distinguished node is not unique");
    found = i0;
  }
  if (found < 0) throw std::logic_error("GradedAlgebra: no node matches the signature");
  GradedAlgebra g = by_node(std::move(chev), found);
  g.m = m;
  g.n = n;
  return g;
}

Vec G0Identification::apply(const Vec& full) const {
  Vec out = zero_vec(coord_dim());
  for (size_t idx = 0; idx < full.size(); ++idx) {
    if (full[idx].is_zero()) continue;
    const int pos = pos_in_g0[idx];
    if (pos < 0) throw std::domain_error("G0Identification::apply: vector not supported on g_0");
    for (int c = 0; c < coord_dim(); ++c) add_mul(out[static_cast<size_t>(c)], full[idx], images(pos, c));
  }
  return out;
}

Vec G0Identification::image_row(int full_idx) const {
  const int pos = pos_in_g0[static_cast<size_t>(full_idx)];
  if (pos < 0) throw std::domain_error("G0Identification::image_row: index outside g_0");
  return images.row(pos);
}

Vec G0Identification::fold_dp(const Vec& abc) const {
  Vec out(abc.begin(), abc.begin() + m * m + n * n);
  const Rat& c = abc[static_cast<size_t>(m * m + n * n)];
  if (!c.is_zero())
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(m * m + i * n + i)] += c;
  return out;
}

namespace {

// Bracket in sl(m) + sl(n) + Q*z on flattened (A | B | c) rows.
Vec abc_bracket(const Vec& x, const Vec& y, int m, int n) {
  auto block = [&](const Vec& v, int off, int d) {
    Mat b(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) b(i, j) = v[static_cast<size_t>(off + i * d + j)];
    return b;
  };
  const Mat am = block(x, 0, m), an = block(x, m * m, n);
  const Mat bm = block(y, 0, m), bn = block(y, m * m, n);
  Vec out = flatten_pair(bracket(am, bm), bracket(an, bn));
  out.push_back(Rat(0));
  return out;
}

Vec elementary_abc(int m, int n, bool m_side, int r, int c) {
  Vec v = zero_vec(m * m + n * n + 1);
  if (m_side)
    v[static_cast<size_t>(r * m + c)] = Rat(1);
  else
    v[static_cast<size_t>(m * m + r * n + c)] = Rat(1);
  return v;
}

}  // namespace

G0Identification identify_g0(const GradedAlgebra& g, bool swap_sides, bool rev_u, bool rev_v) {
  const ChevalleyAlgebra& ch = *g.chev;
  const RootSystem& rs = ch.roots();
  const int m = g.m, n = g.n;
  if (m == 0) throw std::invalid_argument("identify_g0: grading carries no signature");

  auto chains = uncolored_chains(rs, g.node);
  if (chains.size() != 2) throw std::domain_error("identify_g0: expected two uncolored chains");
  if (chains[0].size() < chains[1].size()) std::swap(chains[0], chains[1]);
  // chains[0] is the longer one; the U side has m-1 nodes.
  std::vector<int> u_chain, v_chain;
  if (static_cast<size_t>(m - 1) == chains[0].size() && !swap_sides) {
    u_chain = chains[0];
    v_chain = chains[1];
  } else if (static_cast<size_t>(m - 1) == chains[1].size()) {
    u_chain = swap_sides ? chains[0] : chains[1];
    v_chain = swap_sides ? chains[1] : chains[0];
  } else {
    u_chain = chains[0];
    v_chain = chains[1];
  }
  if (u_chain.size() != static_cast<size_t>(m - 1) || v_chain.size() != static_cast<size_t>(n - 1))
    throw std::domain_error("identify_g0: chain sizes do not match the signature");
  if (rev_u) std::reverse(u_chain.begin(), u_chain.end());
  if (rev_v) std::reverse(v_chain.begin(), v_chain.end());

  G0Identification id;
  id.m = m;
  id.n = n;
  for (int idx = 0; idx < g.dim(); ++idx)
    if (g.degree[static_cast<size_t>(idx)] == 0) id.g0_basis.push_back(idx);
  id.pos_in_g0.assign(static_cast<size_t>(g.dim()), -1);
  for (size_t p = 0; p < id.g0_basis.size(); ++p) id.pos_in_g0[static_cast<size_t>(id.g0_basis[p])] = static_cast<int>(p);
  id.images = Mat(static_cast<int>(id.g0_basis.size()), id.coord_dim());

  auto set_image = [&](int full_idx, const Vec& v) {
    const int pos = id.pos_in_g0[static_cast<size_t>(full_idx)];
    if (pos < 0) throw std::logic_error("identify_g0: image for an element outside g_0");
    id.images.set_row(pos, v);
  };

  // Canonical generators of the two chains.  On the U side x goes to the
  // lowering elementary matrices (so the U-side lowest weight sits at
  // (m-1, m)); on the V side x goes to the raising ones.
  std::vector<Vec> himg(static_cast<size_t>(rs.rank));
  std::vector<char> have_h(static_cast<size_t>(rs.rank), 0);
  for (size_t k = 0; k < u_chain.size(); ++k) {
    const int node = u_chain[k];
    const int t = ch.simple_root_position(node);
    const int kk = static_cast<int>(k);  // chain position, 0-based
    set_image(ch.x_index(t), elementary_abc(m, n, true, kk + 1, kk));
    set_image(ch.y_index(t), elementary_abc(m, n, true, kk, kk + 1));
    Vec h = zero_vec(id.coord_dim());
    h[static_cast<size_t>((kk + 1) * m + (kk + 1))] = Rat(1);
    h[static_cast<size_t>(kk * m + kk)] = Rat(-1);
    himg[static_cast<size_t>(node)] = h;
    have_h[static_cast<size_t>(node)] = 1;
    set_image(ch.h_index(node), h);
  }
  for (size_t k = 0; k < v_chain.size(); ++k) {
    const int node = v_chain[k];
    const int t = ch.simple_root_position(node);
    const int kk = static_cast<int>(k);
    set_image(ch.x_index(t), elementary_abc(m, n, false, kk, kk + 1));
    set_image(ch.y_index(t), elementary_abc(m, n, false, kk + 1, kk));
    Vec h = zero_vec(id.coord_dim());
    h[static_cast<size_t>(m * m + kk * n + kk)] = Rat(1);
    h[static_cast<size_t>(m * m + (kk + 1) * n + (kk + 1))] = Rat(-1);
    himg[static_cast<size_t>(node)] = h;
    have_h[static_cast<size_t>(node)] = 1;
    set_image(ch.h_index(node), h);
  }

  // Central element z = sum c_i h_i with <alpha_j, z> = delta_{j,node}; it
  // acts on g_d by d, and maps to (0, 0, 1).
  Mat zsys(rs.rank, rs.rank);
  Vec zrhs = zero_vec(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    for (int i = 0; i < rs.rank; ++i) zsys(j, i) = Rat(rs.cartan[static_cast<size_t>(j)][static_cast<size_t>(i)]);
    zrhs[static_cast<size_t>(j)] = Rat(j == g.node ? 1 : 0);
  }
  const auto zc = solve(zsys, zrhs);
  if (!zc) throw std::logic_error("identify_g0: Cartan matrix is singular");
  if ((*zc)[static_cast<size_t>(g.node)].is_zero()) throw std::logic_error("identify_g0: z has no h_{i0} component");
  {
    Vec v = zero_vec(id.coord_dim());
    v[static_cast<size_t>(id.coord_dim() - 1)] = Rat(1);  // z -> (0,0,1)
    for (int i = 0; i < rs.rank; ++i) {
      if (i == g.node) continue;
      if (!have_h[static_cast<size_t>(i)]) throw std::logic_error("identify_g0: node outside both chains");
      axpy(v, -(*zc)[static_cast<size_t>(i)], himg[static_cast<size_t>(i)]);
    }
    const Rat inv = Rat(1) / (*zc)[static_cast<size_t>(g.node)];
    for (auto& x : v) x *= inv;
    set_image(ch.h_index(g.node), v);
  }

  // Propagate x/y images over the degree-0 roots by height:
  // x_a = [x_{a-a_j}, x_j] / N(a-a_j, a_j).
  const int P = ch.num_positive();
  for (int t = 0; t < P; ++t) {
    const RootVec& alpha = rs.positive_roots[static_cast<size_t>(t)];
    if (alpha[static_cast<size_t>(g.node)] != 0 || rs.height(alpha) < 2) continue;
    int j = -1, rest = -1;
    for (int i = 0; i < rs.rank && j < 0; ++i) {
      if (i == g.node || alpha[static_cast<size_t>(i)] == 0) continue;
      RootVec r = alpha;
      r[static_cast<size_t>(i)] -= 1;
      const int pos = rs.root_index(r);
      if (pos >= 0) {
        j = i;
        rest = pos;
      }
    }
    if (j < 0) throw std::logic_error("identify_g0: no simple-root step for a degree-0 root");
    const int sj = ch.simple_root_position(j);
    const int nconst = ch.n_positive(rest, sj);
    if (nconst == 0) throw std::logic_error("identify_g0: vanishing Chevalley constant on propagation");
    const Rat inv = Rat(1, nconst);
    Vec xi = abc_bracket(id.image_row(ch.x_index(rest)), id.image_row(ch.x_index(sj)), m, n);
    for (auto& v : xi) v *= inv;
    set_image(ch.x_index(t), xi);
    Vec yi = abc_bracket(id.image_row(ch.y_index(rest)), id.image_row(ch.y_index(sj)), m, n);
    for (auto& v : yi) v *= -inv;
    set_image(ch.y_index(t), yi);
  }

  // Certify: the linear map is a Lie algebra homomorphism on all basis
  // pairs of g_0 and is bijective onto sl(m) + sl(n) + Q*z.
  for (size_t a = 0; a < id.g0_basis.size(); ++a)
    for (size_t b = a + 1; b < id.g0_basis.size(); ++b) {
      const Vec lhs = id.apply(g.alg().bracket_basis(id.g0_basis[a], id.g0_basis[b]));
      const Vec rhs = abc_bracket(id.images.row(static_cast<int>(a)), id.images.row(static_cast<int>(b)), m, n);
      if (lhs != rhs) throw std::logic_error("identify_g0: generator images do not define a homomorphism");
    }
  if (rank(id.images) != static_cast<int>(id.g0_basis.size()))
    throw std::logic_error("identify_g0: identification is not injective");
  return id;
}

namespace {

std::vector<std::array<int, 3>> all_monomials(int m, int n) {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = m + 1; k <= m + n; ++k) out.push_back({i, j, k});
  return out;
}

// Action of a single (A | B | 0) image on the monomial basis, through the
// shared tensor action.
std::vector<std::pair<int, Rat>> act_on_monomial(const Vec& abc, const std::array<int, 3>& mono,
                                                 const std::vector<std::array<int, 3>>& monomials, int m, int n) {
  auto [a, b] = unflatten_pair(Vec(abc.begin(), abc.begin() + m * m + n * n), m, n);
  SkewTensor t(m, n);
  t.add_term(mono[0], mono[1], mono[2], Rat(1));
  const SkewTensor r = t.action_diff(a, b, abc[static_cast<size_t>(m * m + n * n)]);
  std::vector<std::pair<int, Rat>> out;
  for (const auto& [key, c] : r.terms()) {
    const auto [i, j, k] = key;
    const auto it = std::find(monomials.begin(), monomials.end(), std::array<int, 3>{i, j, k});
    if (it == monomials.end()) throw std::logic_error("module_iso: action produced an unassigned monomial");
    out.emplace_back(static_cast<int>(it - monomials.begin()), c);
  }
  return out;
}

}  // namespace

Mat module_iso_equivariance_system(const GradedAlgebra& g, const G0Identification& id,
                                   const std::vector<std::array<int, 3>>& monomials) {
  const ChevalleyAlgebra& ch = *g.chev;
  const RootSystem& rs = ch.roots();
  const std::vector<int>& g1 = g.piece(1);
  const int N = static_cast<int>(g1.size());
  std::vector<int> pos_in_g1(static_cast<size_t>(g.dim()), -1);
  for (int p = 0; p < N; ++p) pos_in_g1[static_cast<size_t>(g1[static_cast<size_t>(p)])] = p;

  std::vector<int> gens;
  for (int i = 0; i < rs.rank; ++i) {
    if (i == g.node) continue;
    const int t = ch.simple_root_position(i);
    gens.push_back(ch.x_index(t));
    gens.push_back(ch.y_index(t));
  }

  Mat sys(0, N);
  for (int gen : gens) {
    const Vec gimg = id.image_row(gen);
    for (int p = 0; p < N; ++p) {
      const int alpha = g1[static_cast<size_t>(p)];
      // LHS: phi([gen, x_alpha]); the bracket is supported on one g_1 element.
      const Vec w = g.alg().bracket_basis(gen, alpha);
      int target = -1;
      Rat cval;
      for (size_t idx = 0; idx < w.size(); ++idx) {
        if (w[idx].is_zero()) continue;
        if (target >= 0) throw std::logic_error("module_iso: bracket with a generator is not monomial");
        if (pos_in_g1[idx] < 0) throw std::logic_error("module_iso: bracket left g_1");
        target = pos_in_g1[idx];
        cval = w[idx];
      }
      // RHS: action of the generator image on the monomial of x_alpha.  The
      // equations compare coefficients monomial by monomial; `monomials`
      // here holds the monomial assigned to each g_1 slot, so slot indices
      // double as monomial indices.
      const auto rhs = act_on_monomial(gimg, monomials[static_cast<size_t>(p)], monomials, id.m, id.n);
      std::map<int, std::map<int, Rat>> per_monomial;  // monomial slot -> (s slot -> coeff)
      if (target >= 0) per_monomial[target][target] += cval;
      for (const auto& [mono_idx, r] : rhs) per_monomial[mono_idx][p] -= r;
      for (auto& [mono_idx, entries] : per_monomial) {
        Vec eq = zero_vec(N);
        bool nonzero = false;
        for (auto& [slot, coeff] : entries) {
          if (coeff.is_zero()) continue;
          eq[static_cast<size_t>(slot)] = coeff;
          nonzero = true;
        }
        if (nonzero) sys.append_row(eq);
      }
    }
  }
  return sys;
}

SkewTensor ModuleIso::apply(const Vec& full) const {
  SkewTensor t(m, n);
  for (size_t p = 0; p < g1_basis.size(); ++p) {
    const Rat& c = full[static_cast<size_t>(g1_basis[p])];
    if (c.is_zero()) continue;
    t.add_term(monomial[p][0], monomial[p][1], monomial[p][2], c * scale[p]);
  }
  return t;
}

Vec ModuleIso::lift(const SkewTensor& e) const {
  if (e.m() != m || e.n() != n) throw std::invalid_argument("ModuleIso::lift: signature mismatch");
  // The map is diagonal over monomials, so lifting divides coefficients.
  Vec out = zero_vec(full_dim);
  for (size_t p = 0; p < g1_basis.size(); ++p) {
    const Rat c = e.coeff(monomial[p][0], monomial[p][1], monomial[p][2]);
    if (!c.is_zero()) out[static_cast<size_t>(g1_basis[p])] = c / scale[p];
  }
  return out;
}

namespace {

std::map<std::pair<int, int>, std::unique_ptr<GradedContext>>& context_cache() {
  static std::map<std::pair<int, int>, std::unique_ptr<GradedContext>> cache;
  return cache;
}

}  // namespace

const GradedContext& graded_context(int m, int n) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& cache = context_cache();
  const auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<GradedContext>();
  ctx->g = GradedAlgebra::for_signature(m, n);
  const GradedAlgebra& g = ctx->g;
  const auto monomials = all_monomials(m, n);
  const std::vector<int>& g1 = g.piece(1);
  const int N = static_cast<int>(g1.size());
  if (static_cast<int>(monomials.size()) != N) throw std::logic_error("graded_context: dim g_1 mismatch");

  const ChevalleyAlgebra& ch = *g.chev;
  const RootSystem& rs = ch.roots();
  bool built = false;
  for (int swap = 0; swap <= (m == n ? 1 : 0) && !built; ++swap)
    for (int rev_u = 0; rev_u <= 1 && !built; ++rev_u)
      for (int rev_v = 0; rev_v <= 1 && !built; ++rev_v) {
        G0Identification id;
        try {
          id = identify_g0(g, swap != 0, rev_u != 0, rev_v != 0);
        } catch (const std::exception&) {
          continue;
        }
        // Weight matching: root vector -> unique monomial of equal weight.
        std::map<std::vector<Rat>, int> mono_by_weight;
        bool ok = true;
        std::vector<Vec> hdiag;  // diagonal data of h_i images, i != node
        std::vector<int> hnodes;
        for (int i = 0; i < rs.rank; ++i) {
          if (i == g.node) continue;
          hnodes.push_back(i);
          hdiag.push_back(id.image_row(ch.h_index(i)));
        }
        for (size_t q = 0; q < monomials.size(); ++q) {
          std::vector<Rat> w;
          for (const Vec& h : hdiag) {
            const auto [i, j, k] = monomials[q];
            Rat val = -h[static_cast<size_t>((i - 1) * m + (i - 1))] - h[static_cast<size_t>((j - 1) * m + (j - 1))] +
                      h[static_cast<size_t>(m * m + (k - m - 1) * n + (k - m - 1))];
            w.push_back(val);
          }
          if (!mono_by_weight.emplace(std::move(w), static_cast<int>(q)).second) ok = false;
        }
        if (!ok) continue;
        std::vector<std::array<int, 3>> mono_of_root(static_cast<size_t>(N));
        std::vector<int> mono_index_of_root(static_cast<size_t>(N), -1);
        for (int p = 0; p < N && ok; ++p) {
          const int idx = g1[static_cast<size_t>(p)];
          std::vector<Rat> w;
          for (int i : hnodes) w.emplace_back(rs.pairing(rs.positive_roots[static_cast<size_t>(idx)], i));
          const auto itw = mono_by_weight.find(w);
          if (itw == mono_by_weight.end()) {
            ok = false;
            break;
          }
          mono_of_root[static_cast<size_t>(p)] = monomials[static_cast<size_t>(itw->second)];
          mono_index_of_root[static_cast<size_t>(p)] = itw->second;
        }
        if (!ok) continue;
        // check injectivity of root -> monomial
        {
          std::vector<int> seen(monomials.size(), 0);
          for (int p = 0; p < N; ++p) {
            if (seen[static_cast<size_t>(mono_index_of_root[static_cast<size_t>(p)])]++) ok = false;
          }
          if (!ok) continue;
        }
        Mat sys;
        try {
          sys = module_iso_equivariance_system(g, id, mono_of_root);
        } catch (const std::exception&) {
          continue;
        }
        const auto k = kernel(sys);
        if (k.size() != 1) continue;
        Vec s = k[0];
        bool all_nonzero = true;
        for (const Rat& v : s) all_nonzero = all_nonzero && !v.is_zero();
        if (!all_nonzero) continue;
        // Normalize on the lowest weight vector x_{i0}.
        const int xi0 = ch.x_index(ch.simple_root_position(g.node));
        int p0 = -1;
        for (int p = 0; p < N; ++p)
          if (g1[static_cast<size_t>(p)] == xi0) p0 = p;
        if (p0 < 0) continue;
        const std::array<int, 3> want{m - 1, m, m + n};
        if (mono_of_root[static_cast<size_t>(p0)] != want) continue;
        const Rat inv = Rat(1) / s[static_cast<size_t>(p0)];
        for (auto& v : s) v *= inv;

        ctx->id = std::move(id);
        ctx->iso.m = m;
        ctx->iso.n = n;
        ctx->iso.full_dim = g.dim();
        ctx->iso.g1_basis = g1;
        ctx->iso.monomial = mono_of_root;
        ctx->iso.scale.assign(s.begin(), s.end());
        ctx->iso_solution_dim = 1;
        built = true;
      }
  if (!built) throw std::logic_error("graded_context: no chain orientation admits the equivariant isomorphism");

  auto [pos, inserted] = cache.emplace(key, std::move(ctx));
  (void)inserted;
  return *pos->second;
}

}  // namespace nil8
