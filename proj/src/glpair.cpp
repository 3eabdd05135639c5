#include "nil8/glpair.hpp"

namespace nil8 {

Vec flatten_pair(const Mat& a, const Mat& b) {
  Vec v;
  v.reserve(static_cast<size_t>(a.rows()) * a.cols() + static_cast<size_t>(b.rows()) * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
  return v;
}

std::pair<Mat, Mat> unflatten_pair(const Vec& v, int m, int n) {
  if (static_cast<int>(v.size()) != glpair_dim(m, n)) throw std::invalid_argument("unflatten_pair: size mismatch");
  Mat a(m, m), b(n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = v[static_cast<size_t>(i * m + j)];
  const int off = m * m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = v[static_cast<size_t>(off + i * n + j)];
  return {a, b};
}

Vec pair_bracket(const Vec& x, const Vec& y, int m, int n) {
  auto [xa, xb] = unflatten_pair(x, m, n);
  auto [ya, yb] = unflatten_pair(y, m, n);
  return flatten_pair(bracket(xa, ya), bracket(xb, yb));
}

Vec pair_conjugate(const Vec& x, const Mat& gm, const Mat& gm_inv, const Mat& gn, const Mat& gn_inv, int m, int n) {
  auto [a, b] = unflatten_pair(x, m, n);
  return flatten_pair(gm * a * gm_inv, gn * b * gn_inv);
}

}  // namespace nil8
