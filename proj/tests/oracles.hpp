// Independent reference computations for type A_n, written without the
// library's root-system code.
#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace oracle {

inline mpq_class frac(long a, long b) {
  mpq_class r(a, b);
  r.canonicalize();
  return r;
}

// Weight multiplicities of the irreducible sl_{n+1} module V(lambda) via
// Freudenthal's formula. Weights in fundamental coordinates.
class TypeA {
 public:
  explicit TypeA(int n) : n_(n) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::vector<int> root(n, 0);  // sum of alpha_i..alpha_j, fundamental coords
        for (int k = i; k <= j; ++k)
          for (int r = 0; r < n; ++r) root[r] += cartan(r, k);
        pos_.push_back(root);
      }
  }

  static int cartan(int i, int j) { return i == j ? 2 : (i - j == 1 || j - i == 1) ? -1 : 0; }

  mpq_class form(const std::vector<int>& a, const std::vector<int>& b) const {
    mpq_class s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        int lo = std::min(i, j) + 1, hi = std::max(i, j) + 1;
        s += frac(a[i] * b[j] * lo * (n_ + 1 - hi), n_ + 1);
      }
    return s;
  }

  // v in the nonnegative integer span of the simple roots
  bool in_positive_cone(const std::vector<int>& v) const {
    // inverse Cartan of A_n has entries min(i,j)(n+1-max(i,j))/(n+1)
    for (int j = 0; j < n_; ++j) {
      mpq_class c = 0;
      for (int i = 0; i < n_; ++i) {
        int lo = std::min(i, j) + 1, hi = std::max(i, j) + 1;
        c += frac(v[i] * lo * (n_ + 1 - hi), n_ + 1);
      }
      if (c.get_den() != 1 || c < 0) return false;
    }
    return true;
  }

  std::vector<int> dominant(std::vector<int> v) const {
    for (bool again = true; again;) {
      again = false;
      for (int i = 0; i < n_; ++i)
        if (v[i] < 0) {
          int m = v[i];
          for (int r = 0; r < n_; ++r) v[r] -= m * cartan(r, i);
          again = true;
        }
    }
    return v;
  }

  long multiplicity(const std::vector<int>& lambda, const std::vector<int>& mu) {
    auto nu = dominant(mu);
    std::vector<int> diff(n_);
    for (int i = 0; i < n_; ++i) diff[i] = lambda[i] - nu[i];
    if (!in_positive_cone(diff)) return 0;
    if (nu == lambda) return 1;
    auto key = std::make_pair(lambda, nu);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<int> lr(n_), nr(n_);
    for (int i = 0; i < n_; ++i) {
      lr[i] = lambda[i] + 1;
      nr[i] = nu[i] + 1;
    }
    mpq_class num = 0;
    for (auto& a : pos_) {
      std::vector<int> w = nu;
      for (;;) {
        for (int i = 0; i < n_; ++i) w[i] += a[i];
        std::vector<int> d(n_);
        for (int i = 0; i < n_; ++i) d[i] = lambda[i] - w[i];
        if (!in_positive_cone(d)) break;
        num += 2 * multiplicity(lambda, w) * form(w, a);
      }
    }
    mpq_class den = form(lr, lr) - form(nr, nr);
    mpq_class r = num / den;
    if (r.get_den() != 1) throw std::logic_error("non-integral multiplicity");
    long out = r.get_num().get_si();
    memo_[key] = out;
    return out;
  }

  // all weights of V(lambda) with multiplicities
  std::map<std::vector<int>, long> character(const std::vector<int>& lambda) {
    std::map<std::vector<int>, long> out;
    std::vector<std::vector<int>> todo{lambda};
    while (!todo.empty()) {
      auto w = todo.back();
      todo.pop_back();
      if (out.count(w)) continue;
      long m = multiplicity(lambda, w);
      if (m == 0) continue;
      out[w] = m;
      for (int i = 0; i < n_; ++i) {
        auto v = w;
        for (int r = 0; r < n_; ++r) v[r] -= cartan(r, i);
        todo.push_back(v);
      }
    }
    return out;
  }

 private:
  int n_;
  std::vector<std::vector<int>> pos_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo_;
};

}  // namespace oracle
