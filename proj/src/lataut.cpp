#include "nil8/lataut.hpp"

#include "nil8/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nil8 {

namespace {

Mat to_mat(const IntMat& g) {
  const int d = static_cast<int>(g.size());
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Rat(g[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return m;
}

long norm_of(const IntMat& gram, const IntVec& v) {
  const int d = static_cast<int>(gram.size());
  long s = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s += v[static_cast<size_t>(i)] * gram[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
  return s;
}

long inner(const IntMat& gram, const IntVec& v, const IntVec& w) {
  const int d = static_cast<int>(gram.size());
  long s = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s += v[static_cast<size_t>(i)] * gram[static_cast<size_t>(i)][static_cast<size_t>(j)] * w[static_cast<size_t>(j)];
  return s;
}

}  // namespace

void require_positive_definite(const IntMat& gram) {
  const int d = static_cast<int>(gram.size());
  for (const auto& row : gram)
    if (static_cast<int>(row.size()) != d) throw std::invalid_argument("gram matrix not square");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (gram[static_cast<size_t>(i)][static_cast<size_t>(j)] != gram[static_cast<size_t>(j)][static_cast<size_t>(i)])
        throw std::invalid_argument("gram matrix not symmetric");
  Mat m = to_mat(gram);
  for (int k = 1; k <= d; ++k) {
    Mat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead(i, j) = m(i, j);
    if (det(lead).sign() <= 0) throw std::invalid_argument("gram matrix not positive definite");
  }
}

std::vector<IntVec> vectors_of_norm(const IntMat& gram, long t) {
  if (t < 0) throw std::invalid_argument("vectors_of_norm: negative norm");
  require_positive_definite(gram);
  const int d = static_cast<int>(gram.size());
  const auto inv = inverse(to_mat(gram));
  if (!inv) throw std::logic_error("vectors_of_norm: singular gram matrix");
  std::vector<long> bound(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    // v_i^2 <= t * (G^-1)_ii, so |v_i| <= floor(sqrt(floor(t * inv_ii))).
    const Rat cap = Rat(t) * (*inv)(i, i);
    const mpz_class fl = cap.num() / cap.den();
    long b = 0;
    while (mpz_class(b + 1) * (b + 1) <= fl) ++b;
    bound[static_cast<size_t>(i)] = b;
  }
  std::vector<IntVec> out;
  IntVec v(static_cast<size_t>(d), 0);
  // lexicographic enumeration over the box
  for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] = -bound[static_cast<size_t>(i)];
  while (true) {
    if (norm_of(gram, v) == t) out.push_back(v);
    int pos = d - 1;
    while (pos >= 0 && v[static_cast<size_t>(pos)] == bound[static_cast<size_t>(pos)]) {
      v[static_cast<size_t>(pos)] = -bound[static_cast<size_t>(pos)];
      --pos;
    }
    if (pos < 0) break;
    ++v[static_cast<size_t>(pos)];
  }
  return out;
}

AutGroup aut_group(const IntMat& gram) {
  require_positive_definite(gram);
  const int d = static_cast<int>(gram.size());
  std::vector<std::vector<IntVec>> candidates(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    candidates[static_cast<size_t>(i)] = vectors_of_norm(gram, gram[static_cast<size_t>(i)][static_cast<size_t>(i)]);

  AutGroup group;
  std::vector<IntVec> images(static_cast<size_t>(d));
  auto dfs = [&](auto&& self, int col) -> void {
    if (col == d) {
      IntMat g(static_cast<size_t>(d), IntVec(static_cast<size_t>(d), 0));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g[static_cast<size_t>(i)][static_cast<size_t>(j)] = images[static_cast<size_t>(j)][static_cast<size_t>(i)];
      group.elements.push_back(std::move(g));
      return;
    }
    for (const IntVec& cand : candidates[static_cast<size_t>(col)]) {
      bool ok = true;
      for (int j = 0; j < col && ok; ++j)
        ok = inner(gram, images[static_cast<size_t>(j)], cand) == gram[static_cast<size_t>(j)][static_cast<size_t>(col)];
      if (!ok) continue;
      images[static_cast<size_t>(col)] = cand;
      self(self, col + 1);
    }
  };
  dfs(dfs, 0);
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

bool AutGroup::contains(const IntMat& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  const int d = static_cast<int>(a.size());
  IntMat r(static_cast<size_t>(d), IntVec(static_cast<size_t>(d), 0));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j)
        r[static_cast<size_t>(i)][static_cast<size_t>(j)] += a[static_cast<size_t>(i)][static_cast<size_t>(k)] * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
  return r;
}

long int_mat_det3(const IntMat& a) {
  const int d = static_cast<int>(a.size());
  if (d == 1) return a[0][0];
  if (d == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  if (d == 3)
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  throw std::invalid_argument("int_mat_det3: dimension > 3");
}

}  // namespace nil8
