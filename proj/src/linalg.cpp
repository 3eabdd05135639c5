#include "nil8/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cstddef>

namespace nil8 {

namespace {

// Pivot choice: among candidate rows, the entry with the smallest GMP limb
// count, ties broken by lowest row index.  Deterministic and keeps the
// intermediate fractions small on the systems this project builds.
int choose_pivot_row(const Mat& a, int from_row, int col) {
  int piv = -1;
  size_t best = static_cast<size_t>(-1);
  for (int i = from_row; i < a.rows(); ++i) {
    const Rat& x = a(i, col);
    if (x.is_zero()) continue;
    const size_t c = x.complexity();
    if (c < best) {
      best = c;
      piv = i;
    }
  }
  return piv;
}

RrefResult rref_impl(Mat a, bool parallel) {
  const int rows = a.rows(), cols = a.cols();
  RrefResult res;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    const int piv = choose_pivot_row(a, r, c);
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j) std::swap(a(r, j), a(piv, j));
    if (!a(r, c).is_one()) {
      const Rat inv = Rat(1) / a(r, c);
      a(r, c) = Rat(1);
      for (int j = c + 1; j < cols; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    const bool par = parallel && rows >= 64 && static_cast<long>(rows) * (cols - c) >= 16384;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (par)
#endif
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rat f = a(i, c);
      if (f.is_zero()) continue;
      a(i, c) = Rat(0);
      for (int j = c + 1; j < cols; ++j)
        if (!a(r, j).is_zero()) sub_mul(a(i, j), f, a(r, j));
    }
    (void)par;
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.m = std::move(a);
  return res;
}

}  // namespace

RrefResult rref(Mat a) { return rref_impl(std::move(a), true); }
RrefResult rref_serial(Mat a) { return rref_impl(std::move(a), false); }

int rank(const Mat& a) { return rref(a).rank; }

std::vector<Vec> kernel(const Mat& a) {
  const int cols = a.cols();
  const RrefResult r = rref(a);
  std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
  for (int p : r.pivot_cols) is_pivot[static_cast<size_t>(p)] = 1;
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vec v = zero_vec(cols);
    v[static_cast<size_t>(f)] = Rat(1);
    for (int row = 0; row < r.rank; ++row) v[static_cast<size_t>(r.pivot_cols[static_cast<size_t>(row)])] = -r.m(row, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<size_t>(i)];
  }
  const RrefResult r = rref(std::move(aug));
  for (int p : r.pivot_cols)
    if (p == a.cols()) return std::nullopt;
  Vec x = zero_vec(a.cols());
  for (int row = 0; row < r.rank; ++row) x[static_cast<size_t>(r.pivot_cols[static_cast<size_t>(row)])] = r.m(row, a.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const int n = a.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Rat(1);
  }
  const RrefResult r = rref(std::move(aug));
  if (r.rank != n || r.pivot_cols.back() >= n) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
  return inv;
}

Rat det(Mat a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: non-square");
  const int n = a.rows();
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    const int piv = choose_pivot_row(a, c, c);
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = c; j < n; ++j) std::swap(a(c, j), a(piv, j));
      d = -d;
    }
    d *= a(c, c);
    const Rat inv = Rat(1) / a(c, c);
    for (int i = c + 1; i < n; ++i) {
      const Rat f = a(i, c) * inv;
      if (f.is_zero()) continue;
      for (int j = c; j < n; ++j) sub_mul(a(i, j), f, a(c, j));
    }
  }
  return d;
}

Signature signature(const Mat& s0) {
  if (!s0.is_symmetric()) throw std::invalid_argument("signature: input not symmetric");
  Mat s = s0;
  const int n = s.rows();
  std::vector<char> done(static_cast<size_t>(n), 0);
  Signature sig;
  int remaining = n;
  while (remaining > 0) {
    int piv = -1;
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<size_t>(i)] || s(i, i).is_zero()) continue;
      if (piv < 0 || abs(s(i, i)) > abs(s(piv, piv))) piv = i;
    }
    if (piv < 0) {
      // No nonzero diagonal left.  Take the largest off-diagonal entry of the
      // remaining block and fold its row/column in, which realizes the
      // hyperbolic-split case: the pair then contributes one +1 and one -1.
      int bi = -1, bj = -1;
      for (int i = 0; i < n; ++i) {
        if (done[static_cast<size_t>(i)]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (done[static_cast<size_t>(j)] || s(i, j).is_zero()) continue;
          if (bi < 0 || abs(s(i, j)) > abs(s(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) {
        sig.zero += remaining;
        break;
      }
      for (int k = 0; k < n; ++k) s(bi, k) += s(bj, k);
      for (int k = 0; k < n; ++k) s(k, bi) += s(k, bj);
      continue;
    }
    if (s(piv, piv).sign() > 0)
      ++sig.pos;
    else
      ++sig.neg;
    done[static_cast<size_t>(piv)] = 1;
    --remaining;
    const Rat inv = Rat(1) / s(piv, piv);
    for (int j = 0; j < n; ++j) {
      if (done[static_cast<size_t>(j)] || s(j, piv).is_zero()) continue;
      const Rat f = s(j, piv) * inv;
      for (int k = 0; k < n; ++k) sub_mul(s(j, k), f, s(piv, k));
      for (int k = 0; k < n; ++k) sub_mul(s(k, j), f, s(k, piv));
    }
  }
  return sig;
}

namespace {

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

std::vector<Rat> minpoly(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("minpoly: non-square");
  const int n = a.rows();
  if (n == 0) return {Rat(1)};
  // Krylov chain on flattened powers; the first linear dependency gives the
  // monic minimal polynomial.
  struct Row {
    Vec v;
    int pivot;
    std::vector<Rat> combo;
  };
  std::vector<Row> rows;
  Mat power = Mat::identity(n);
  for (int k = 0;; ++k) {
    Vec v = flatten(power);
    std::vector<Rat> combo(static_cast<size_t>(k) + 1);
    combo[static_cast<size_t>(k)] = Rat(1);
    for (const Row& r : rows) {
      const Rat f = v[static_cast<size_t>(r.pivot)];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < v.size(); ++j) sub_mul(v[j], f, r.v[j]);
      for (size_t j = 0; j < r.combo.size(); ++j) sub_mul(combo[j], f, r.combo[j]);
    }
    int piv = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        piv = static_cast<int>(j);
        break;
      }
    if (piv < 0) return combo;
    const Rat inv = Rat(1) / v[static_cast<size_t>(piv)];
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    rows.push_back(Row{std::move(v), piv, std::move(combo)});
    power = power * a;
  }
}

std::vector<Rat> poly_derivative(const std::vector<Rat>& p) {
  if (p.size() <= 1) return {Rat(0)};
  std::vector<Rat> d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * p[i];
  return d;
}

namespace {

void poly_trim(std::vector<Rat>& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

void poly_make_monic(std::vector<Rat>& p) {
  poly_trim(p);
  if (p.back().is_zero()) return;  // zero polynomial
  const Rat inv = Rat(1) / p.back();
  for (auto& c : p) c *= inv;
}

// a mod b, b nonzero
std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
  poly_trim(a);
  while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
    const Rat f = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) sub_mul(a[shift + i], f, b[i]);
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

}  // namespace

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  poly_trim(a);
  poly_trim(b);
  while (!(b.size() == 1 && b[0].is_zero())) {
    std::vector<Rat> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  poly_make_monic(a);
  return a;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
  Rat acc;
  for (size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

bool minpoly_squarefree(const Mat& a) {
  const std::vector<Rat> p = minpoly(a);
  const std::vector<Rat> g = poly_gcd(p, poly_derivative(p));
  return g.size() == 1;
}

namespace {

// Positive divisors of |z|, or nullopt when |z| is too large for naive trial
// division.  Values hit in this project are tiny.
std::optional<std::vector<mpz_class>> divisors(mpz_class z) {
  z = abs(z);
  if (z == 0) return std::nullopt;
  if (z > 1000000000) return std::nullopt;
  const unsigned long v = z.get_ui();
  std::vector<mpz_class> divs;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    divs.emplace_back(d);
    if (d != v / d) divs.emplace_back(v / d);
  }
  return divs;
}

}  // namespace

std::optional<std::vector<Rat>> rational_roots_if_split(const std::vector<Rat>& monic) {
  std::vector<Rat> p = monic;
  poly_trim(p);
  if (!p.back().is_one()) throw std::invalid_argument("rational_roots_if_split: polynomial not monic");
  std::vector<Rat> roots;
  while (p.size() > 1) {
    if (p[0].is_zero()) {
      roots.emplace_back(0);
    } else {
      // Scale to an integer polynomial; rational roots are u/v with
      // u | constant term and v | leading coefficient.
      mpz_class scale(1);
      for (const Rat& c : p) scale = scale / gcd(scale, c.den()) * c.den();
      std::vector<mpz_class> ip(p.size());
      for (size_t i = 0; i < p.size(); ++i) ip[i] = p[i].num() * (scale / p[i].den());
      const auto ud = divisors(ip[0]);
      const auto vd = divisors(ip.back());
      if (!ud || !vd) return std::nullopt;
      bool found = false;
      Rat root;
      for (const auto& u : *ud) {
        for (const auto& v : *vd) {
          for (int s = 1; s >= -1 && !found; s -= 2) {
            mpq_class cand(s > 0 ? u : mpz_class(-u), v);
            cand.canonicalize();
            const Rat r{cand};
            if (poly_eval(p, r).is_zero()) {
              root = r;
              found = true;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
      if (!found) return std::nullopt;
      roots.push_back(root);
    }
    // Deflate by (x - root).
    const Rat& r = roots.back();
    std::vector<Rat> q(p.size() - 1);
    Rat carry = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = p[i] + r * carry;
    }
    p = std::move(q);
    poly_trim(p);
  }
  return roots;
}

Mat rowspace_canonical(const Mat& rows) {
  if (rows.rows() == 0) return rows;
  const RrefResult r = rref(rows);
  Mat out(r.rank, rows.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rows.cols(); ++j) out(i, j) = r.m(i, j);
  return out;
}

bool same_rowspace(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) return false;
  return rowspace_canonical(a) == rowspace_canonical(b);
}

bool rowspace_contains(const Mat& rows, const Vec& v) {
  if (is_zero(v)) return true;
  Mat stacked = rows;
  stacked.append_row(v);
  return rank(stacked) == rank(rows);
}

bool rowspace_contains_all(const Mat& rows, const Mat& others) {
  const int base = rank(rows);
  Mat stacked = rows;
  for (int i = 0; i < others.rows(); ++i) stacked.append_row(others.row(i));
  return rank(stacked) == base;
}

Mat rowspace_sum(const Mat& a, const Mat& b) {
  Mat stacked = a;
  for (int i = 0; i < b.rows(); ++i) stacked.append_row(b.row(i));
  return rowspace_canonical(stacked);
}

Mat rowspace_intersection(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("rowspace_intersection: ambient mismatch");
  // (x, y) with x a = y b; the intersection is spanned by the x a.
  Mat sys(a.cols(), a.rows() + b.rows());
  for (int j = 0; j < a.rows(); ++j)
    for (int c = 0; c < a.cols(); ++c) sys(c, j) = a(j, c);
  for (int j = 0; j < b.rows(); ++j)
    for (int c = 0; c < b.cols(); ++c) sys(c, a.rows() + j) = -b(j, c);
  Mat result(0, a.cols());
  for (const Vec& k : kernel(sys)) {
    Vec v = zero_vec(a.cols());
    for (int j = 0; j < a.rows(); ++j)
      if (!k[static_cast<size_t>(j)].is_zero())
        for (int c = 0; c < a.cols(); ++c) add_mul(v[static_cast<size_t>(c)], k[static_cast<size_t>(j)], a(j, c));
    if (!is_zero(v)) result.append_row(v);
  }
  return rowspace_canonical(result);
}

Mat restrict_operator(const Mat& op, const Mat& basis) {
  const int d = basis.rows();
  Mat bt = basis.transposed();
  Mat r(d, d);
  for (int i = 0; i < d; ++i) {
    const Vec image = op.apply(basis.row(i));
    const auto x = solve(bt, image);
    if (!x) throw std::domain_error("restrict_operator: subspace not invariant");
    for (int j = 0; j < d; ++j) r(j, i) = (*x)[static_cast<size_t>(j)];
  }
  return r;
}

}  // namespace nil8
