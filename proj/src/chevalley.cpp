#include "nil8/chevalley.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace nil8 {

namespace {

RootVec vec_sub(const RootVec& a, const RootVec& b) {
  RootVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RootVec vec_add(const RootVec& a, const RootVec& b) {
  RootVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool vec_nonpositive(const RootVec& a) {
  for (int v : a)
    if (v > 0) return false;
  return true;
}

RootVec vec_neg(const RootVec& a) {
  RootVec r(a);
  for (auto& v : r) v = -v;
  return r;
}

}  // namespace

int ChevalleyAlgebra::n_any(const RootVec& a, bool a_pos, const RootVec& b, bool b_pos) const {
  if (!a_pos && !b_pos) return -n_any(vec_neg(a), true, vec_neg(b), true);
  if (!a_pos && b_pos) return -n_any(b, true, a, false);
  if (a_pos && b_pos) {
    const int t = rs_.root_index(a), s = rs_.root_index(b);
    const int sum = rs_.root_index(vec_add(a, b));
    return sum < 0 ? 0 : npos_[static_cast<size_t>(t)][static_cast<size_t>(s)];
  }
  // a positive, b negative: reduce to positive pairs with smaller sums.
  const RootVec beta = vec_neg(b);
  const RootVec diff = vec_sub(a, beta);
  if (rs_.is_positive_root(diff)) {
    // N(a, -beta) = -N(beta, a-beta), both positive, summing to a.
    return -npos_[static_cast<size_t>(rs_.root_index(beta))][static_cast<size_t>(rs_.root_index(diff))];
  }
  const RootVec ndiff = vec_neg(diff);
  if (rs_.is_positive_root(ndiff)) {
    // N(a, -beta) = N(beta-a, a), both positive, summing to beta.
    return npos_[static_cast<size_t>(rs_.root_index(ndiff))][static_cast<size_t>(rs_.root_index(a))];
  }
  return 0;
}

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)), alg_(0) {
  const int P = num_positive();
  const int rank = rs_.rank;
  npos_.assign(static_cast<size_t>(P), std::vector<int>(static_cast<size_t>(P), 0));

  // Positive-pair constants, by increasing height of the sum.  The
  // extraspecial pair of g gets +1; every other special pair (a,b) of g is
  // fixed by the four-root relation on (a1, b1, -a, -b):
  //   N(a,b) = N(b1,-a) N(a1,-b) + N(-a,a1) N(b1,-b).
  for (int g = 0; g < P; ++g) {
    const RootVec& gamma = rs_.positive_roots[static_cast<size_t>(g)];
    if (rs_.height(gamma) < 2) continue;
    int es_t = -1, es_s = -1;
    std::vector<std::pair<int, int>> special;
    for (int t = 0; t < P; ++t) {
      const RootVec rest = vec_sub(gamma, rs_.positive_roots[static_cast<size_t>(t)]);
      const int s = rs_.root_index(rest);
      if (s < 0 || t >= s) continue;
      special.emplace_back(t, s);
      if (es_t < 0) {
        es_t = t;
        es_s = s;
      }
    }
    if (es_t < 0) throw std::logic_error("ChevalleyAlgebra: root without decomposition");
    npos_[static_cast<size_t>(es_t)][static_cast<size_t>(es_s)] = 1;
    npos_[static_cast<size_t>(es_s)][static_cast<size_t>(es_t)] = -1;
    const RootVec& a1 = rs_.positive_roots[static_cast<size_t>(es_t)];
    const RootVec& b1 = rs_.positive_roots[static_cast<size_t>(es_s)];
    for (auto [t, s] : special) {
      if (t == es_t) continue;
      const RootVec& a = rs_.positive_roots[static_cast<size_t>(t)];
      const RootVec& b = rs_.positive_roots[static_cast<size_t>(s)];
      const int n = n_any(b1, true, a, false) * n_any(a1, true, b, false) +
                    n_any(a, false, a1, true) * n_any(b1, true, b, false);
      if (n == 0) throw std::logic_error("ChevalleyAlgebra: vanishing structure constant for a special pair");
      npos_[static_cast<size_t>(t)][static_cast<size_t>(s)] = n;
      npos_[static_cast<size_t>(s)][static_cast<size_t>(t)] = -n;
    }
  }

  // Assemble the bracket table.
  alg_ = LieAlg(dim());
  for (int t = 0; t < P; ++t) {
    for (int s = t + 1; s < P; ++s) {
      const int sum = rs_.root_index(vec_add(rs_.positive_roots[static_cast<size_t>(t)], rs_.positive_roots[static_cast<size_t>(s)]));
      if (sum < 0) continue;
      const int n = npos_[static_cast<size_t>(t)][static_cast<size_t>(s)];
      alg_.add_term(x_index(t), x_index(s), x_index(sum), Rat(n));
      alg_.add_term(y_index(t), y_index(s), y_index(sum), Rat(-n));
    }
  }
  for (int t = 0; t < P; ++t) {
    const RootVec& bt = rs_.positive_roots[static_cast<size_t>(t)];
    for (int s = 0; s < P; ++s) {
      const RootVec& bs = rs_.positive_roots[static_cast<size_t>(s)];
      if (t == s) {
        // [x_a, y_a] = h_a; simply laced, so the coroot has the same
        // coefficients as the root.
        for (int i = 0; i < rank; ++i)
          if (bt[static_cast<size_t>(i)] != 0) alg_.add_term(x_index(t), y_index(t), h_index(i), Rat(bt[static_cast<size_t>(i)]));
        continue;
      }
      const RootVec diff = vec_sub(bt, bs);
      const int n = n_any(bt, true, vec_neg(bs), false);
      if (n == 0) continue;
      if (rs_.is_positive_root(diff))
        alg_.add_term(x_index(t), y_index(s), x_index(rs_.root_index(diff)), Rat(n));
      else
        alg_.add_term(x_index(t), y_index(s), y_index(rs_.root_index(vec_neg(diff))), Rat(n));
    }
  }
  for (int i = 0; i < rank; ++i)
    for (int t = 0; t < P; ++t) {
      const int p = rs_.pairing(rs_.positive_roots[static_cast<size_t>(t)], i);
      if (p == 0) continue;
      alg_.add_term(h_index(i), x_index(t), x_index(t), Rat(p));
      alg_.add_term(h_index(i), y_index(t), y_index(t), Rat(-p));
    }

  for (int t = 0; t < P; ++t) {
    std::string root;
    for (int v : rs_.positive_roots[static_cast<size_t>(t)]) root += std::to_string(v);
    alg_.set_label(x_index(t), "x" + root);
    alg_.set_label(y_index(t), "y" + root);
  }
  for (int i = 0; i < rank; ++i) alg_.set_label(h_index(i), "h" + std::to_string(i + 1));
}

int ChevalleyAlgebra::simple_root_position(int i) const {
  RootVec r(static_cast<size_t>(rs_.rank), 0);
  r[static_cast<size_t>(i)] = 1;
  return rs_.root_index(r);
}

int ChevalleyAlgebra::degree_by_node(int idx, int i0) const {
  const int P = num_positive();
  if (idx < P) return rs_.positive_roots[static_cast<size_t>(idx)][static_cast<size_t>(i0)];
  if (idx < 2 * P) return -rs_.positive_roots[static_cast<size_t>(idx - P)][static_cast<size_t>(i0)];
  return 0;
}

std::shared_ptr<const ChevalleyAlgebra> chevalley_cached(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const ChevalleyAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto alg = std::make_shared<const ChevalleyAlgebra>(RootSystem::build(name));
  cache.emplace(name, alg);
  return alg;
}

}  // namespace nil8
