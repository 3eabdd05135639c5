#include "nil8/realtype.hpp"

#include "nil8/graded.hpp"
#include "nil8/sl2.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nil8 {

namespace {

Mat u_block(const Vec& flat, int m, int n) { return unflatten_pair(flat, m, n).first; }
Mat v_block(const Vec& flat, int m, int n) { return unflatten_pair(flat, m, n).second; }

// Block-diagonal action on U + V = Q^(m+n).
Mat action_matrix(const Vec& flat, int m, int n) {
  auto [a, b] = unflatten_pair(flat, m, n);
  Mat full(m + n, m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) full(i, j) = a(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) full(m + i, m + j) = b(i, j);
  return full;
}

Rat pair_trace_product(const Vec& x, const Vec& y, int m, int n) {
  Rat t;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) add_mul(t, x[static_cast<size_t>(i * m + j)], y[static_cast<size_t>(j * m + i)]);
  const int off = m * m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) add_mul(t, x[static_cast<size_t>(off + i * n + j)], y[static_cast<size_t>(off + j * n + i)]);
  return t;
}

struct EigenPart {
  std::vector<Rat> word;  // one eigenvalue per operator, in order
  Mat basis;              // rows, coordinates of the working space
};

// Simultaneous eigenspace refinement for a commuting family of semisimple
// operators with rational spectra.  Throws if some restriction does not
// split over Q.
std::vector<EigenPart> simultaneous_eigen(const std::vector<Mat>& ops, const Mat& initial_basis) {
  std::vector<EigenPart> parts{{{}, rowspace_canonical(initial_basis)}};
  for (const Mat& op : ops) {
    std::vector<EigenPart> next;
    for (const auto& part : parts) {
      if (part.basis.rows() == 0) continue;
      const Mat r = restrict_operator(op, part.basis);
      const auto roots = rational_roots_if_split(minpoly(r));
      if (!roots) throw std::domain_error("simultaneous_eigen: spectrum does not split over Q");
      std::vector<Rat> distinct;
      for (const Rat& x : *roots)
        if (std::find(distinct.begin(), distinct.end(), x) == distinct.end()) distinct.push_back(x);
      std::sort(distinct.begin(), distinct.end());
      int total = 0;
      for (const Rat& lambda : distinct) {
        Mat shifted = r;
        for (int i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;
        Mat sub(0, part.basis.cols());
        for (const Vec& k : kernel(shifted)) {
          Vec v = zero_vec(part.basis.cols());
          for (int i = 0; i < part.basis.rows(); ++i) axpy(v, k[static_cast<size_t>(i)], part.basis.row(i));
          sub.append_row(v);
        }
        if (sub.rows() == 0) continue;
        total += sub.rows();
        EigenPart np{part.word, rowspace_canonical(sub)};
        np.word.push_back(lambda);
        next.push_back(std::move(np));
      }
      if (total != part.basis.rows()) throw std::domain_error("simultaneous_eigen: operator not semisimple on the part");
    }
    parts = std::move(next);
  }
  return parts;
}

}  // namespace

std::pair<Subspace, Subspace> reductive_split(const Subspace& g, int m, int n) {
  const int d = g.dim();
  const int amb = glpair_dim(m, n);
  // Center: coefficients c with sum_i c_i [b_i, b_j] = 0 for every j.
  Mat sys(d * amb, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      const Vec br = pair_bracket(g.basis_vector(i), g.basis_vector(j), m, n);
      for (int c = 0; c < amb; ++c) sys(j * amb + c, i) = br[static_cast<size_t>(c)];
    }
  Mat cbasis(0, amb);
  for (const Vec& k : kernel(sys)) {
    Vec v = zero_vec(amb);
    for (int i = 0; i < d; ++i) axpy(v, k[static_cast<size_t>(i)], g.basis_vector(i));
    cbasis.append_row(v);
  }
  const Subspace center(amb, cbasis);

  Mat ssrows(0, amb);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Vec br = pair_bracket(g.basis_vector(i), g.basis_vector(j), m, n);
      if (!is_zero(br)) ssrows.append_row(br);
    }
  const Subspace ss(amb, ssrows);

  if (center.dim() + ss.dim() != d || rowspace_intersection(center.basis(), ss.basis()).rows() != 0)
    throw std::domain_error("reductive_split: center and derived part do not decompose g (input not reductive)");
  return {center, ss};
}

Signature torus_signature(const Subspace& center, int m, int n) {
  for (int i = 0; i < center.dim(); ++i)
    for (int j = i + 1; j < center.dim(); ++j)
      if (!is_zero(pair_bracket(center.basis_vector(i), center.basis_vector(j), m, n)))
        throw std::domain_error("torus_signature: subspace is not abelian");
  Vec generic = zero_vec(glpair_dim(m, n));
  for (int i = 0; i < center.dim(); ++i) {
    const Vec b = center.basis_vector(i);
    if (!minpoly_squarefree(action_matrix(b, m, n)))
      throw std::domain_error("torus_signature: non-semisimple element in the center");
    axpy(generic, Rat(i + 1), b);
  }
  if (center.dim() > 0 && !minpoly_squarefree(action_matrix(generic, m, n)))
    throw std::domain_error("torus_signature: generic combination is not semisimple");
  const Signature sig = signature(ambient_trace_form(center, m, n));
  if (sig.zero != 0) throw std::domain_error("torus_signature: trace form degenerate on the center");
  return sig;
}

SsClass classify_semisimple_data(int dim, const Signature& sig) {
  struct Entry {
    int dim;
    Signature sig;
    SsClass cls;
  };
  static const std::vector<Entry> table = {
      {0, {0, 0, 0}, {"", 0, true, {}}},
      {3, {2, 1, 0}, {"sl2R", 1, true, {3}}},
      {3, {0, 3, 0}, {"su2", 1, false, {3}}},
      {6, {4, 2, 0}, {"2*sl2R", 2, true, {3, 3}}},
      {6, {3, 3, 0}, {"sl2C", 2, false, {6}}},
      {9, {6, 3, 0}, {"3*sl2R", 3, true, {3, 3, 3}}},
      {9, {5, 4, 0}, {"sl2C+sl2R", 3, false, {6, 3}}},
      {13, {8, 5, 0}, {"sp4R+sl2R", 3, true, {10, 3}}},
  };
  for (const auto& e : table)
    if (e.dim == dim && e.sig == sig) return e.cls;
  throw std::domain_error("classify_semisimple: unknown type (dim " + std::to_string(dim) + ", signature " +
                          std::to_string(sig.pos) + "," + std::to_string(sig.neg) + "," + std::to_string(sig.zero) + ")");
}

namespace {

LieAlg abstract_algebra(const Subspace& s, int m, int n) {
  const int d = s.dim();
  LieAlg l(d);
  const Mat bt = s.basis().transposed();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Vec br = pair_bracket(s.basis_vector(i), s.basis_vector(j), m, n);
      if (is_zero(br)) continue;
      const auto x = solve(bt, br);
      if (!x) throw std::domain_error("abstract_algebra: subspace not closed under bracket");
      for (int k = 0; k < d; ++k)
        if (!(*x)[static_cast<size_t>(k)].is_zero()) l.add_term(i, j, k, (*x)[static_cast<size_t>(k)]);
    }
  return l;
}

}  // namespace

SsClass classify_semisimple(const Subspace& ss, int m, int n, Signature* killing_out) {
  if (ss.dim() == 0) {
    if (killing_out) *killing_out = Signature{0, 0, 0};
    return classify_semisimple_data(0, Signature{0, 0, 0});
  }
  const LieAlg l = abstract_algebra(ss, m, n);
  const Signature sig = signature(l.killing_gram());
  if (killing_out) *killing_out = sig;
  if (sig.zero != 0) throw std::domain_error("classify_semisimple: Killing form degenerate");
  return classify_semisimple_data(ss.dim(), sig);
}

namespace {

// Greedy split-Cartan search inside the semisimple part: commuting elements
// whose (m+n)-matrix has a squarefree minimal polynomial splitting over Q.
// Candidates are the basis vectors followed by two-element combinations with
// coefficients in {-2..2}.  The result is certified afterwards by the
// adjoint eigenspace decomposition, so the heuristic carries no correctness
// burden.
std::vector<Vec> split_cartan(const Subspace& ss, int m, int n, int expected_rank) {
  std::vector<Vec> torus;
  Mat torus_rows(0, glpair_dim(m, n));
  auto try_add = [&](const Vec& cand) -> bool {
    if (is_zero(cand) || rowspace_contains(torus_rows, cand)) return false;
    for (const Vec& t : torus)
      if (!is_zero(pair_bracket(cand, t, m, n))) return false;
    const Mat a = action_matrix(cand, m, n);
    const std::vector<Rat> p = minpoly(a);
    if (poly_gcd(p, poly_derivative(p)).size() != 1) return false;
    if (!rational_roots_if_split(p)) return false;
    torus.push_back(cand);
    torus_rows.append_row(cand);
    return true;
  };
  const std::vector<long> coeffs = {1, -1, 2, -2};
  bool progress = true;
  while (static_cast<int>(torus.size()) < expected_rank && progress) {
    progress = false;
    for (int i = 0; i < ss.dim() && static_cast<int>(torus.size()) < expected_rank; ++i)
      progress = try_add(ss.basis_vector(i)) || progress;
    for (int i = 0; i < ss.dim() && static_cast<int>(torus.size()) < expected_rank; ++i)
      for (int j = i + 1; j < ss.dim() && static_cast<int>(torus.size()) < expected_rank; ++j)
        for (long c1 : coeffs)
          for (long c2 : coeffs) {
            Vec cand = Rat(c1) * ss.basis_vector(i);
            axpy(cand, Rat(c2), ss.basis_vector(j));
            progress = try_add(cand) || progress;
            if (static_cast<int>(torus.size()) >= expected_rank) break;
          }
  }
  if (static_cast<int>(torus.size()) != expected_rank)
    throw std::domain_error("split_cartan: no split Cartan subalgebra found within the search bound");
  return torus;
}

struct RootDatum {
  std::vector<Rat> word;  // coordinates of the root over the torus basis
  Mat space;              // root space, rows in ss coordinates
};

struct IdealDatum {
  IdealInfo info;
  std::vector<int> simple_roots;  // indices into roots, ordered short-first
};

}  // namespace

WeightData highest_weights(const Subspace& ss, int m, int n) {
  const SsClass cls = classify_semisimple(ss, m, n);
  if (!cls.split) throw std::domain_error("highest_weights: semisimple part is not split");
  if (ss.dim() == 0) {
    WeightData w;
    w.u.assign(static_cast<size_t>(m), WeightTuple{});
    w.v.assign(static_cast<size_t>(n), WeightTuple{});
    return w;
  }
  int expected_rank = 0;
  for (int d : cls.ideal_dims) expected_rank += (d == 3 ? 1 : 2);
  const std::vector<Vec> torus = split_cartan(ss, m, n, expected_rank);
  const int r = expected_rank;

  // Adjoint decomposition of ss under the torus.
  std::vector<Mat> ad_ops;
  const Mat bt = ss.basis().transposed();
  for (const Vec& t : torus) {
    Mat op(ss.dim(), ss.dim());
    for (int i = 0; i < ss.dim(); ++i) {
      const auto x = solve(bt, pair_bracket(t, ss.basis_vector(i), m, n));
      if (!x) throw std::logic_error("highest_weights: torus does not normalize ss");
      for (int k = 0; k < ss.dim(); ++k) op(k, i) = (*x)[static_cast<size_t>(k)];
    }
    ad_ops.push_back(std::move(op));
  }
  const auto parts = simultaneous_eigen(ad_ops, Mat::identity(ss.dim()));
  std::vector<RootDatum> roots;
  int zero_dim = 0;
  for (const auto& p : parts) {
    bool zero = true;
    for (const Rat& x : p.word) zero = zero && x.is_zero();
    if (zero)
      zero_dim += p.basis.rows();
    else
      roots.push_back(RootDatum{p.word, p.basis});
  }
  // Certificate that the torus is a split Cartan subalgebra of ss.
  if (zero_dim != r) throw std::domain_error("highest_weights: centralizer of the torus exceeds the torus");
  for (const auto& rd : roots)
    if (rd.space.rows() != 1) throw std::domain_error("highest_weights: root space not one-dimensional");

  // Trace form on the torus and the induced form on root functionals.
  Mat ft(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) ft(i, j) = pair_trace_product(torus[static_cast<size_t>(i)], torus[static_cast<size_t>(j)], m, n);
  const auto ft_inv = inverse(ft);
  if (!ft_inv) throw std::logic_error("highest_weights: trace form degenerate on the torus");
  auto dual_vector = [&](const std::vector<Rat>& alpha) {  // t_alpha coordinates over the torus basis
    Vec a(alpha.begin(), alpha.end());
    return ft_inv->apply(a);
  };
  auto form_star = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    const Vec tb = dual_vector(b);
    Rat s;
    for (int i = 0; i < r; ++i) add_mul(s, a[static_cast<size_t>(i)], tb[static_cast<size_t>(i)]);
    return s;
  };

  // Positivity: first deterministic functional nonzero on every root.
  Vec reg;
  for (long t = 2;; ++t) {
    Vec w(static_cast<size_t>(r));
    Rat p(1);
    for (int i = 0; i < r; ++i) {
      w[static_cast<size_t>(i)] = p;
      p *= Rat(t);
    }
    bool good = true;
    for (const auto& rd : roots) {
      Rat s;
      for (int i = 0; i < r; ++i) add_mul(s, rd.word[static_cast<size_t>(i)], w[static_cast<size_t>(i)]);
      good = good && !s.is_zero();
    }
    if (good) {
      reg = std::move(w);
      break;
    }
    if (t > 100) throw std::logic_error("highest_weights: no regular functional found");
  }
  auto is_positive = [&](const std::vector<Rat>& word) {
    Rat s;
    for (int i = 0; i < r; ++i) add_mul(s, word[static_cast<size_t>(i)], reg[static_cast<size_t>(i)]);
    return s.sign() > 0;
  };

  // Ideals: connected components of the root graph (edges when the sum is a
  // root or the roots are opposite).
  auto word_add = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> s(a);
    for (int i = 0; i < r; ++i) s[static_cast<size_t>(i)] += b[static_cast<size_t>(i)];
    return s;
  };
  auto find_root = [&](const std::vector<Rat>& w) -> int {
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i].word == w) return static_cast<int>(i);
    return -1;
  };
  const int nroots = static_cast<int>(roots.size());
  std::vector<int> comp(static_cast<size_t>(nroots), -1);
  int ncomp = 0;
  for (int seed = 0; seed < nroots; ++seed) {
    if (comp[static_cast<size_t>(seed)] >= 0) continue;
    std::vector<int> stack{seed};
    comp[static_cast<size_t>(seed)] = ncomp;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < nroots; ++b) {
        if (comp[static_cast<size_t>(b)] >= 0) continue;
        const auto sum = word_add(roots[static_cast<size_t>(a)].word, roots[static_cast<size_t>(b)].word);
        bool zero = true;
        for (const Rat& x : sum) zero = zero && x.is_zero();
        if (zero || find_root(sum) >= 0) {
          comp[static_cast<size_t>(b)] = ncomp;
          stack.push_back(b);
        }
      }
    }
    ++ncomp;
  }

  std::vector<IdealDatum> ideals(static_cast<size_t>(ncomp));
  for (int cidx = 0; cidx < ncomp; ++cidx) {
    std::vector<int> pos;
    int count = 0;
    for (int a = 0; a < nroots; ++a) {
      if (comp[static_cast<size_t>(a)] != cidx) continue;
      ++count;
      if (is_positive(roots[static_cast<size_t>(a)].word)) pos.push_back(a);
    }
    // Simple roots: positive roots that are not sums of two positives.
    std::vector<int> simple;
    for (int a : pos) {
      bool decomposable = false;
      for (int b : pos)
        for (int c : pos)
          if (roots[static_cast<size_t>(a)].word == word_add(roots[static_cast<size_t>(b)].word, roots[static_cast<size_t>(c)].word))
            decomposable = true;
      if (!decomposable) simple.push_back(a);
    }
    std::sort(simple.begin(), simple.end(), [&](int a, int b) {
      const Rat la = form_star(roots[static_cast<size_t>(a)].word, roots[static_cast<size_t>(a)].word);
      const Rat lb = form_star(roots[static_cast<size_t>(b)].word, roots[static_cast<size_t>(b)].word);
      if (la != lb) return la < lb;  // short roots first (Bourbaki C2 order)
      return roots[static_cast<size_t>(a)].word < roots[static_cast<size_t>(b)].word;
    });
    IdealDatum ideal;
    ideal.info.rank = static_cast<int>(simple.size());
    ideal.info.dim = count + ideal.info.rank;
    Rat len0 = form_star(roots[static_cast<size_t>(simple[0])].word, roots[static_cast<size_t>(simple[0])].word);
    ideal.info.type_a = true;
    for (int a : simple)
      if (form_star(roots[static_cast<size_t>(a)].word, roots[static_cast<size_t>(a)].word) != len0) ideal.info.type_a = false;
    ideal.simple_roots = std::move(simple);
    ideals[static_cast<size_t>(cidx)] = std::move(ideal);
  }
  // Canonical ideal order: descending dimension, then root data.
  std::vector<int> order(static_cast<size_t>(ncomp));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ideals[static_cast<size_t>(a)].info.dim != ideals[static_cast<size_t>(b)].info.dim)
      return ideals[static_cast<size_t>(a)].info.dim > ideals[static_cast<size_t>(b)].info.dim;
    return roots[static_cast<size_t>(ideals[static_cast<size_t>(a)].simple_roots[0])].word <
           roots[static_cast<size_t>(ideals[static_cast<size_t>(b)].simple_roots[0])].word;
  });

  // Consistency with the Killing-signature classification.
  {
    std::vector<int> dims;
    for (int c : order) dims.push_back(ideals[static_cast<size_t>(c)].info.dim);
    std::vector<int> expect = cls.ideal_dims;
    std::sort(dims.begin(), dims.end(), std::greater<int>());
    std::sort(expect.begin(), expect.end(), std::greater<int>());
    if (dims != expect) throw std::logic_error("highest_weights: ideal dimensions disagree with the type lookup");
  }

  // Coroot evaluation data: h_alpha = 2 t_alpha / (alpha, alpha).
  struct Coroot {
    Vec coords;  // over the torus basis
  };
  std::vector<std::vector<Coroot>> coroots;  // per ideal (in canonical order), per simple root
  for (int c : order) {
    std::vector<Coroot> list;
    for (int a : ideals[static_cast<size_t>(c)].simple_roots) {
      const auto& alpha = roots[static_cast<size_t>(a)].word;
      Vec ta = dual_vector(alpha);
      const Rat len = form_star(alpha, alpha);
      const Rat f = Rat(2) / len;
      for (auto& x : ta) x *= f;
      list.push_back(Coroot{std::move(ta)});
    }
    coroots.push_back(std::move(list));
  }

  // Module decomposition: primitive vectors (killed by all positive root
  // spaces), refined into torus eigenvectors; each contributes its weight
  // labels, one tuple per basis vector.
  auto module_weights = [&](bool u_side) {
    const int dimv = u_side ? m : n;
    Mat killer(0, dimv);
    for (const auto& rd : roots) {
      if (!is_positive(rd.word)) continue;
      for (int i = 0; i < rd.space.rows(); ++i) {
        // root-space vector in ambient coordinates
        Vec amb = zero_vec(glpair_dim(m, n));
        for (int k = 0; k < ss.dim(); ++k) axpy(amb, rd.space(i, k), ss.basis_vector(k));
        const Mat blk = u_side ? u_block(amb, m, n) : v_block(amb, m, n);
        for (int rr = 0; rr < dimv; ++rr) killer.append_row(blk.row(rr));
      }
    }
    Mat prim(0, dimv);
    for (const Vec& k : kernel(killer)) prim.append_row(k);
    std::vector<Mat> ops;
    for (const Vec& t : torus) ops.push_back(u_side ? u_block(t, m, n) : v_block(t, m, n));
    const auto eparts = simultaneous_eigen(ops, prim);
    std::vector<WeightTuple> tuples;
    for (const auto& p : eparts) {
      WeightTuple labels;
      for (size_t ci = 0; ci < coroots.size(); ++ci)
        for (const auto& h : coroots[ci]) {
          Rat val;
          for (int i = 0; i < r; ++i) add_mul(val, h.coords[static_cast<size_t>(i)], p.word[static_cast<size_t>(i)]);
          if (!val.is_integer()) throw std::logic_error("highest_weights: non-integral weight label");
          if (val.sign() < 0) throw std::logic_error("highest_weights: primitive weight not dominant");
          labels.push_back(static_cast<int>(val.num().get_si()));
        }
      for (int copy = 0; copy < p.basis.rows(); ++copy) tuples.push_back(labels);
    }
    std::sort(tuples.begin(), tuples.end());
    return tuples;
  };

  WeightData out;
  for (int c : order) out.ideals.push_back(ideals[static_cast<size_t>(c)].info);
  out.u = module_weights(true);
  out.v = module_weights(false);
  return out;
}

std::string compose_type_label(const std::string& ss_label, const Signature& center_sig) {
  std::vector<std::string> parts;
  if (!ss_label.empty()) parts.push_back(ss_label);
  if (center_sig.pos > 0) parts.push_back((center_sig.pos == 1 ? "" : std::to_string(center_sig.pos)) + "t");
  if (center_sig.neg > 0) parts.push_back((center_sig.neg == 1 ? "" : std::to_string(center_sig.neg)) + "u");
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
  return out;
}

Fingerprint fingerprint(const SkewTensor& e) {
  if (!e.is_nondegenerate()) throw std::domain_error("fingerprint: degenerate tensor");
  const int m = e.m(), n = e.n();
  const GradedContext& ctx = graded_context(m, n);
  Fingerprint fp;
  fp.m = m;
  fp.n = n;
  fp.dim_ge = stabilizer_lie(e).dim();

  const Vec ehat = lift_tensor(ctx, e);
  const Sl2Triple t = embed_triple(ctx, ehat);
  const CentralizerResult cent = centralizer_triple(ctx, t);
  const auto [center, ss] = reductive_split(cent.gt, m, n);

  RealTypeDescriptor& d = fp.descriptor;
  d.total_dim = cent.gt.dim();
  d.center_dim = center.dim();
  d.center_sig = torus_signature(center, m, n);
  d.ss_dim = ss.dim();
  const SsClass cls = classify_semisimple(ss, m, n, &d.ss_killing_sig);
  d.type_label = compose_type_label(cls.label, d.center_sig);
  d.complex_rank = cls.complex_rank + d.center_dim;
  d.split_semisimple = cls.split;
  if (cls.split && ss.dim() > 0) d.weights = highest_weights(ss, m, n);
  return fp;
}

bool weights_equivalent(const WeightData& computed, const std::vector<WeightTuple>& expected_u,
                        const std::vector<WeightTuple>& expected_v) {
  const int k = static_cast<int>(computed.ideals.size());
  int total_rank = 0;
  std::vector<int> offsets;
  for (const auto& ideal : computed.ideals) {
    offsets.push_back(total_rank);
    total_rank += ideal.rank;
  }
  for (const auto& t : expected_u)
    if (static_cast<int>(t.size()) != total_rank) return false;
  for (const auto& t : expected_v)
    if (static_cast<int>(t.size()) != total_rank) return false;

  auto shape = [&](int i) {
    return std::make_tuple(computed.ideals[static_cast<size_t>(i)].dim, computed.ideals[static_cast<size_t>(i)].rank,
                           computed.ideals[static_cast<size_t>(i)].type_a);
  };
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<int> flippable;  // A-type ideals of rank >= 2 admit the diagram flip
  for (int i = 0; i < k; ++i)
    if (computed.ideals[static_cast<size_t>(i)].type_a && computed.ideals[static_cast<size_t>(i)].rank >= 2)
      flippable.push_back(i);

  auto tuples_match = [&](const std::vector<int>& p, unsigned flips, const std::vector<WeightTuple>& comp,
                          const std::vector<WeightTuple>& expected) {
    // transformed computed tuple: block of ideal p[slot] goes to slot
    std::vector<WeightTuple> transformed;
    for (const auto& t : comp) {
      WeightTuple w;
      for (int slot = 0; slot < k; ++slot) {
        const int src = p[static_cast<size_t>(slot)];
        WeightTuple block(t.begin() + offsets[static_cast<size_t>(src)],
                          t.begin() + offsets[static_cast<size_t>(src)] + computed.ideals[static_cast<size_t>(src)].rank);
        for (size_t fi = 0; fi < flippable.size(); ++fi)
          if (flippable[fi] == src && (flips >> fi & 1u)) std::reverse(block.begin(), block.end());
        w.insert(w.end(), block.begin(), block.end());
      }
      transformed.push_back(std::move(w));
    }
    std::vector<WeightTuple> exp = expected;
    std::sort(transformed.begin(), transformed.end());
    std::sort(exp.begin(), exp.end());
    return transformed == exp;
  };

  std::sort(perm.begin(), perm.end());
  do {
    bool shape_ok = true;
    for (int i = 0; i < k; ++i) shape_ok = shape_ok && shape(i) == shape(perm[static_cast<size_t>(i)]);
    if (!shape_ok) continue;
    for (unsigned flips = 0; flips < (1u << flippable.size()); ++flips)
      if (tuples_match(perm, flips, computed.u, expected_u) && tuples_match(perm, flips, computed.v, expected_v))
        return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace nil8
