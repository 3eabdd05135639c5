#include "nil8/lie.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace nil8 {

LieAlg::LieAlg(int dim)
    : dim_(dim),
      rows_(static_cast<size_t>(dim) * (dim > 0 ? dim - 1 : 0) / 2),
      labels_(static_cast<size_t>(dim)) {}

size_t LieAlg::pair_index(int i, int j) const {
  // upper triangle, row-major: (i,j) with i<j
  return static_cast<size_t>(i) * (2 * dim_ - i - 1) / 2 + static_cast<size_t>(j - i - 1);
}

void LieAlg::add_term(int i, int j, int k, const Rat& c) {
  if (i == j) {
    if (!c.is_zero()) throw std::invalid_argument("LieAlg: [x,x] must vanish");
    return;
  }
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw std::out_of_range("LieAlg::add_term: index out of range");
  if (c.is_zero()) return;
  const Rat v = (i < j) ? c : -c;
  auto& row = rows_[pair_index(std::min(i, j), std::max(i, j))];
  for (auto& t : row)
    if (t.k == k) {
      t.c += v;
      if (t.c.is_zero()) row.erase(std::remove_if(row.begin(), row.end(), [k](const BracketTerm& b) { return b.k == k; }), row.end());
      return;
    }
  row.push_back(BracketTerm{k, v});
  std::sort(row.begin(), row.end(), [](const BracketTerm& a, const BracketTerm& b) { return a.k < b.k; });
}

void LieAlg::set_label(int i, std::string label) { labels_[static_cast<size_t>(i)] = std::move(label); }

std::vector<BracketTerm> LieAlg::bracket_terms(int i, int j) const {
  if (i == j) return {};
  if (i < j) return rows_[pair_index(i, j)];
  std::vector<BracketTerm> neg = rows_[pair_index(j, i)];
  for (auto& t : neg) t.c = -t.c;
  return neg;
}

Vec LieAlg::bracket_basis(int i, int j) const {
  Vec v = zero_vec(dim_);
  for (const auto& t : bracket_terms(i, j)) v[static_cast<size_t>(t.k)] = t.c;
  return v;
}

Vec LieAlg::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("LieAlg::bracket: size mismatch");
  Vec r = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (i == j || y[static_cast<size_t>(j)].is_zero()) continue;
      const Rat f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (const auto& t : bracket_terms(i, j)) add_mul(r[static_cast<size_t>(t.k)], f, t.c);
    }
  }
  return r;
}

Mat LieAlg::ad(const Vec& x) const {
  Mat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      if (i == j || x[static_cast<size_t>(i)].is_zero()) continue;
      for (const auto& t : bracket_terms(i, j)) add_mul(m(t.k, j), x[static_cast<size_t>(i)], t.c);
    }
  }
  return m;
}

Mat LieAlg::ad_basis(int i) const { return ad(unit_vec(dim_, i)); }

std::optional<std::array<int, 3>> LieAlg::jacobi_impl(bool parallel) const {
  // Antisymmetry is structural, so checking i<j<k covers all triples.
  const int n = dim_;
  const long pair_count = static_cast<long>(n) * (n - 1) / 2;
  std::array<int, 3> witness{n, n, n};
  bool found = false;

  auto check_pair = [&](int i, int j, std::vector<Rat>& scratch, std::vector<int>& touched,
                        std::array<int, 3>& local_witness) -> bool {
    const auto row_ij = bracket_terms(i, j);
    for (int k = j + 1; k < n; ++k) {
      touched.clear();
      auto add = [&](int idx, const Rat& a, const Rat& b) {
        if (scratch[static_cast<size_t>(idx)].is_zero()) touched.push_back(idx);
        add_mul(scratch[static_cast<size_t>(idx)], a, b);
      };
      for (const auto& t : row_ij)
        for (const auto& u : bracket_terms(t.k, k)) add(u.k, t.c, u.c);
      for (const auto& t : bracket_terms(j, k))
        for (const auto& u : bracket_terms(t.k, i)) add(u.k, t.c, u.c);
      for (const auto& t : bracket_terms(k, i))
        for (const auto& u : bracket_terms(t.k, j)) add(u.k, t.c, u.c);
      bool bad = false;
      for (int idx : touched) {
        if (!scratch[static_cast<size_t>(idx)].is_zero()) bad = true;
        scratch[static_cast<size_t>(idx)] = Rat(0);
      }
      if (bad) {
        local_witness = {i, j, k};
        return true;
      }
    }
    return false;
  };

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      std::vector<Rat> scratch(static_cast<size_t>(n));
      std::vector<int> touched;
      touched.reserve(64);
#pragma omp for schedule(dynamic, 8)
      for (long p = 0; p < pair_count; ++p) {
        if (found) continue;
        // unrank p -> (i, j), i < j
        long acc = 0;
        int i = 0;
        while (acc + (n - 1 - i) <= p) acc += n - 1 - i, ++i;
        const int j = static_cast<int>(i + 1 + (p - acc));
        std::array<int, 3> w;
        if (check_pair(i, j, scratch, touched, w)) {
#pragma omp critical
          {
            found = true;
            if (w < witness) witness = w;
          }
        }
      }
    }
    if (!found) return std::nullopt;
    // Deterministic output: rescan serially for the first witness.
    return jacobi_impl(false);
  }
#else
  (void)parallel;
  (void)pair_count;
#endif

  std::vector<Rat> scratch(static_cast<size_t>(n));
  std::vector<int> touched;
  touched.reserve(64);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::array<int, 3> w;
      if (check_pair(i, j, scratch, touched, w)) return w;
    }
  return std::nullopt;
}

std::optional<std::array<int, 3>> LieAlg::jacobi_witness() const { return jacobi_impl(true); }
std::optional<std::array<int, 3>> LieAlg::jacobi_witness_serial() const { return jacobi_impl(false); }

Subspace LieAlg::center() const {
  // x central iff [x, b_j] = 0 for all j: stack the maps x -> [x, b_j].
  Mat sys(dim_ * dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i)
      for (const auto& t : bracket_terms(i, j)) sys(j * dim_ + t.k, i) = t.c;
  Mat basis(0, dim_);
  for (const Vec& v : kernel(sys)) basis.append_row(v);
  return Subspace(dim_, basis);
}

Subspace LieAlg::derived() const {
  Mat rows(0, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      Vec v = bracket_basis(i, j);
      if (!is_zero(v)) rows.append_row(v);
    }
  return Subspace(dim_, rows);
}

bool LieAlg::is_two_step() const {
  const Subspace c = center();
  const Subspace d = derived();
  return c.contains(d);
}

bool LieAlg::is_nondegenerate_two_step() const {
  const Subspace c = center();
  const Subspace d = derived();
  if (!c.contains(d)) throw std::domain_error("is_nondegenerate_two_step: algebra is not two-step");
  return c == d;
}

std::pair<LieAlg, int> LieAlg::degenerate_split() const {
  const Subspace c = center();
  const Subspace d = derived();
  if (!c.contains(d)) throw std::domain_error("degenerate_split: algebra is not two-step");

  // A: extend the derived basis inside the center, greedily over the
  // center's canonical basis vectors in order.
  Mat span = d.basis();
  int dim_a = 0;
  for (int i = 0; i < c.dim(); ++i) {
    const Vec v = c.basis_vector(i);
    if (!rowspace_contains(span, v)) {
      span.append_row(v);
      ++dim_a;
    }
  }
  // U': extend the center to L by coordinate vectors in index order.
  Mat lspan = c.basis();
  std::vector<Vec> uprime;
  for (int i = 0; i < dim_; ++i) {
    const Vec v = unit_vec(dim_, i);
    if (!rowspace_contains(lspan, v)) {
      lspan.append_row(v);
      uprime.push_back(v);
    }
  }

  // L' = U' + derived, with transported constants.
  Mat basis(0, dim_);
  for (const Vec& v : uprime) basis.append_row(v);
  for (int i = 0; i < d.dim(); ++i) basis.append_row(d.basis_vector(i));
  const int nd = basis.rows();
  LieAlg out(nd);
  const Mat bt = basis.transposed();
  for (int i = 0; i < nd; ++i)
    for (int j = i + 1; j < nd; ++j) {
      const Vec w = bracket(basis.row(i), basis.row(j));
      if (is_zero(w)) continue;
      const auto x = solve(bt, w);
      if (!x) throw std::logic_error("degenerate_split: bracket left the chosen complement");
      for (int k = 0; k < nd; ++k)
        if (!(*x)[static_cast<size_t>(k)].is_zero()) out.add_term(i, j, k, (*x)[static_cast<size_t>(k)]);
    }
  return {out, dim_a};
}

Mat LieAlg::killing_gram() const {
  std::vector<Mat> ads;
  ads.reserve(static_cast<size_t>(dim_));
  for (int i = 0; i < dim_; ++i) ads.push_back(ad_basis(i));
  Mat g(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      const Rat t = (ads[static_cast<size_t>(i)] * ads[static_cast<size_t>(j)]).trace();
      g(i, j) = t;
      g(j, i) = t;
    }
  return g;
}

LieAlg LieAlg::change_basis(const Mat& g) const {
  if (g.rows() != dim_ || g.cols() != dim_) throw std::invalid_argument("change_basis: shape mismatch");
  const auto ginv = inverse(g);
  if (!ginv) throw std::invalid_argument("change_basis: singular matrix");
  LieAlg out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      const Vec w = bracket(g.col(i), g.col(j));
      if (is_zero(w)) continue;
      const Vec x = ginv->apply(w);
      for (int k = 0; k < dim_; ++k)
        if (!x[static_cast<size_t>(k)].is_zero()) out.add_term(i, j, k, x[static_cast<size_t>(k)]);
    }
  return out;
}

Mat ambient_trace_form(const Subspace& s, int m, int n) {
  if (s.ambient() != m * m + n * n) throw std::invalid_argument("ambient_trace_form: ambient mismatch");
  auto pair_trace = [&](const Vec& x, const Vec& y) {
    Rat t;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) add_mul(t, x[static_cast<size_t>(i * m + j)], y[static_cast<size_t>(j * m + i)]);
    const int off = m * m;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        add_mul(t, x[static_cast<size_t>(off + i * n + j)], y[static_cast<size_t>(off + j * n + i)]);
    return t;
  };
  Mat g(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    const Vec bi = s.basis_vector(i);
    for (int j = i; j < s.dim(); ++j) {
      const Rat t = pair_trace(bi, s.basis_vector(j));
      g(i, j) = t;
      g(j, i) = t;
    }
  }
  return g;
}

}  // namespace nil8
