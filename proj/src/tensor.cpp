#include "nil8/tensor.hpp"

#include <cctype>
#include <random>
#include <sstream>

namespace nil8 {

SkewTensor::SkewTensor(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw std::invalid_argument("SkewTensor: signature out of range");
}

void SkewTensor::add_term(int i, int j, int k, const Rat& c) {
  if (i == j) throw std::invalid_argument("SkewTensor: i = j");
  if (i < 1 || i > m_ || j < 1 || j > m_)
    throw std::invalid_argument("SkewTensor: U index out of range");
  if (k <= m_ || k > m_ + n_)
    throw std::invalid_argument("SkewTensor: V index out of range (expected m < k <= m+n)");
  if (c.is_zero()) return;
  const bool flip = i > j;
  const auto key = std::make_tuple(flip ? j : i, flip ? i : j, k);
  auto [it, inserted] = terms_.try_emplace(key, flip ? -c : c);
  if (!inserted) {
    it->second += flip ? -c : c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat SkewTensor::coeff(int i, int j, int k) const {
  if (i == j) return Rat(0);
  const bool flip = i > j;
  const auto it = terms_.find(std::make_tuple(flip ? j : i, flip ? i : j, k));
  if (it == terms_.end()) return Rat(0);
  return flip ? -it->second : it->second;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw std::invalid_argument("tensor parse: expected '" + std::string(1, c) + "' at position " + std::to_string(pos));
    ++pos;
  }
  std::string integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("tensor parse: expected integer at position " + std::to_string(start));
    return s.substr(start, pos - start);
  }
};

}  // namespace

SkewTensor SkewTensor::parse(const std::string& src, int m, int n) {
  SkewTensor result(m, n);
  Cursor c{src};
  if (c.done()) throw std::invalid_argument("tensor parse: empty input");
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.pos;
    } else if (!first) {
      throw std::invalid_argument("tensor parse: expected '+' or '-' at position " + std::to_string(c.pos));
    }
    first = false;
    Rat coeff(1);
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      std::string num = c.integer();
      if (c.peek() == '/') {
        ++c.pos;
        num += "/" + c.integer();
      }
      coeff = Rat::parse(num);
      c.expect('*');
    }
    c.expect('e');
    c.expect('(');
    const int i = std::stoi(c.integer());
    c.expect(',');
    const int j = std::stoi(c.integer());
    c.expect(',');
    const int k = std::stoi(c.integer());
    c.expect(')');
    result.add_term(i, j, k, Rat(sign) * coeff);
  }
  return result;
}

std::string SkewTensor::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const auto [i, j, k] = key;
    std::string piece;
    const Rat a = abs(c);
    if (a.is_one())
      piece = "e(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    else
      piece = a.str() + "*e(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    if (c.sign() < 0)
      os << "-" << piece;
    else if (!first)
      os << "+" << piece;
    else
      os << piece;
    first = false;
  }
  return os.str();
}

Vec SkewTensor::value(int i, int j) const {
  Vec v = zero_vec(n_);
  if (i == j) return v;
  for (int k = m_ + 1; k <= m_ + n_; ++k) v[static_cast<size_t>(k - m_ - 1)] = coeff(i, j, k);
  return v;
}

namespace {

int pair_col(int i, int j, int m) {  // 1-based i < j, lexicographic pairs
  return (i - 1) * m - i * (i - 1) / 2 + (j - i - 1);
}

}  // namespace

Mat SkewTensor::beta_star() const {
  Mat b(n_, m_ * (m_ - 1) / 2);
  for (const auto& [key, c] : terms_) {
    const auto [i, j, k] = key;
    b(k - m_ - 1, pair_col(i, j, m_)) = c;
  }
  return b;
}

Subspace SkewTensor::radical() const {
  Mat sys(m_ * n_, m_);
  for (int q = 1; q <= m_; ++q)
    for (int p = 1; p <= m_; ++p) {
      if (p == q) continue;
      const Vec v = value(p, q);
      for (int t = 0; t < n_; ++t) sys((q - 1) * n_ + t, p - 1) = v[static_cast<size_t>(t)];
    }
  Mat basis(0, m_);
  for (const Vec& v : kernel(sys)) basis.append_row(v);
  return Subspace(m_, basis);
}

bool SkewTensor::is_nondegenerate() const {
  return rank(beta_star()) == n_ && radical().dim() == 0;
}

LieAlg SkewTensor::to_lie() const {
  LieAlg l(m_ + n_);
  for (const auto& [key, c] : terms_) {
    const auto [i, j, k] = key;
    l.add_term(i - 1, j - 1, k - 1, c);
  }
  for (int i = 0; i < m_ + n_; ++i) l.set_label(i, "e" + std::to_string(i + 1));
  return l;
}

SkewTensor SkewTensor::transformed(const Mat& gm, const Mat& gn) const {
  const auto inv = inverse(gm);
  if (!inv) throw std::invalid_argument("SkewTensor::transformed: singular g_m");
  SkewTensor out(m_, n_);
  for (int p = 1; p <= m_; ++p)
    for (int q = p + 1; q <= m_; ++q) {
      Vec w = zero_vec(n_);
      for (int a = 1; a <= m_; ++a) {
        if ((*inv)(a - 1, p - 1).is_zero()) continue;
        for (int b = 1; b <= m_; ++b) {
          if (a == b || (*inv)(b - 1, q - 1).is_zero()) continue;
          const Rat f = (*inv)(a - 1, p - 1) * (*inv)(b - 1, q - 1);
          axpy(w, f, value(a, b));
        }
      }
      if (is_zero(w)) continue;
      const Vec gw = gn.apply(w);
      for (int t = 0; t < n_; ++t)
        if (!gw[static_cast<size_t>(t)].is_zero()) out.add_term(p, q, m_ + 1 + t, gw[static_cast<size_t>(t)]);
    }
  return out;
}

SkewTensor SkewTensor::action_diff(const Mat& a, const Mat& b, const Rat& c) const {
  if (a.rows() != m_ || a.cols() != m_ || b.rows() != n_ || b.cols() != n_)
    throw std::invalid_argument("action_diff: shape mismatch");
  SkewTensor out(m_, n_);
  for (int p = 1; p <= m_; ++p)
    for (int q = p + 1; q <= m_; ++q) {
      Vec w = b.apply(value(p, q));
      if (!c.is_zero()) axpy(w, c, value(p, q));
      for (int r = 1; r <= m_; ++r) {
        axpy(w, -a(r - 1, p - 1), value(r, q));
        axpy(w, -a(r - 1, q - 1), value(p, r));
      }
      for (int t = 0; t < n_; ++t)
        if (!w[static_cast<size_t>(t)].is_zero()) out.add_term(p, q, m_ + 1 + t, w[static_cast<size_t>(t)]);
    }
  return out;
}

Subspace stabilizer_lie(const SkewTensor& e) {
  const int m = e.m(), n = e.n();
  const int vars = glpair_dim(m, n);
  Mat sys(m * (m - 1) / 2 * n, vars);
  int row0 = 0;
  for (int p = 1; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q) {
      const Vec epq = e.value(p, q);
      for (int t = 0; t < n; ++t) {
        const int row = row0 + t;
        // b-block: [b e(p,q)]_t depends on b(t, s).
        for (int s = 0; s < n; ++s) sys(row, m * m + t * n + s) = epq[static_cast<size_t>(s)];
        // a-blocks: -e(a e_p ^ e_q) - e(e_p ^ a e_q).
        for (int r = 1; r <= m; ++r) {
          const Vec vrq = e.value(r, q);
          const Vec vpr = e.value(p, r);
          sys(row, (r - 1) * m + (p - 1)) -= vrq[static_cast<size_t>(t)];
          sys(row, (r - 1) * m + (q - 1)) -= vpr[static_cast<size_t>(t)];
        }
      }
      row0 += n;
    }
  Mat basis(0, vars);
  for (const Vec& v : kernel(sys)) basis.append_row(v);
  return Subspace(vars, basis);
}

std::pair<SkewTensor, Mat> lie_to_tensor(const LieAlg& l) {
  const Subspace c = l.center();
  const Subspace d = l.derived();
  if (!c.contains(d)) throw std::domain_error("lie_to_tensor: algebra is not two-step");
  if (!(c == d)) throw std::domain_error("lie_to_tensor: degenerate algebra (center exceeds derived)");
  const int n = d.dim();
  const int m = l.dim() - n;
  // U' extends the center to L by coordinate vectors in index order.
  Mat span = c.basis();
  std::vector<Vec> uprime;
  for (int i = 0; i < l.dim(); ++i) {
    const Vec v = unit_vec(l.dim(), i);
    if (!rowspace_contains(span, v)) {
      span.append_row(v);
      uprime.push_back(v);
    }
  }
  if (static_cast<int>(uprime.size()) != m) throw std::logic_error("lie_to_tensor: complement extraction failed");
  Mat g(l.dim(), l.dim());
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < l.dim(); ++r) g(r, i) = uprime[static_cast<size_t>(i)][static_cast<size_t>(r)];
  for (int i = 0; i < n; ++i) {
    const Vec v = d.basis_vector(i);
    for (int r = 0; r < l.dim(); ++r) g(r, m + i) = v[static_cast<size_t>(r)];
  }
  const Mat dt = d.basis().transposed();
  SkewTensor e(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Vec w = l.bracket(uprime[static_cast<size_t>(i)], uprime[static_cast<size_t>(j)]);
      if (is_zero(w)) continue;
      const auto x = solve(dt, w);
      if (!x) throw std::logic_error("lie_to_tensor: bracket not in derived subalgebra");
      for (int k = 0; k < n; ++k)
        if (!(*x)[static_cast<size_t>(k)].is_zero()) e.add_term(i + 1, j + 1, m + 1 + k, (*x)[static_cast<size_t>(k)]);
    }
  return {e, g};
}

std::vector<ImpossibilityEntry> impossibility_report(std::uint64_t seed, int samples) {
  const std::vector<std::pair<int, int>> sigs = {{1, 7}, {2, 6}, {3, 5}, {7, 1}};
  std::vector<ImpossibilityEntry> out;
  for (auto [m, n] : sigs) {
    ImpossibilityEntry entry{m, n, "", samples, 0};
    if (m % 2 == 1 && n == 1) {
      entry.obstruction = "m = " + std::to_string(m) +
                          " is odd: skew-symmetric forms on odd-dimensional spaces are degenerate";
    } else {
      entry.obstruction = "dim wedge^2 U = " + std::to_string(m * (m - 1) / 2) + " < n = " + std::to_string(n) +
                          ": beta_* cannot be surjective";
    }
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(m) * 1000 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < samples; ++s) {
      SkewTensor t(m, n);
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
          for (int k = m + 1; k <= m + n; ++k) {
            const long cval = static_cast<long>(rng() % 7) - 3;
            if (cval != 0) t.add_term(i, j, k, Rat(cval));
          }
      if (t.is_nondegenerate()) ++entry.nondegenerate_found;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace nil8
