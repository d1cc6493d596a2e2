// Demazure-Lusztig operators on the polynomial representation.
#pragma once

#include <memory>

#include "laurent.hpp"

namespace daha {

namespace detail {

// e^{mu - k alpha_i} as (weight, q-exponent); alpha_0 = -theta + delta
struct RootStep {
  Weight fin;  // finite part of alpha_i
  int q;       // 1 for the affine root, 0 otherwise
};

inline RootStep root_step(const RootSystem& rs, int i) {
  if (i == 0) return {-rs.theta(), 1};
  if (i < 0 || i > int(rs.rank())) throw std::invalid_argument("generator index out of range");
  return {rs.simple_root(std::size_t(i - 1)), 0};
}

// c * (t e^{s_i mu} + (t-1) G_i(mu)) accumulated into out
template <class C>
void apply_t_mono(const RootSystem& rs, int i, const RootStep& st, const Weight& mu, const C& c, Laurent<C>& out) {
  int m = rs.coroot_pairing(i, mu);
  if (m == 0) {
    out.add_term(mu, c.shifted(0, 1));
    return;
  }
  C tc = c.shifted(0, 1);
  C tm1 = tc - c;  // (t-1) c
  Weight s = mu - m * st.fin;
  out.add_term(s, tc.shifted(-m * st.q, 0));
  if (m > 0) {
    C neg = -tm1;
    Weight w = mu;
    for (int k = 1; k <= m; ++k) {
      w -= st.fin;
      out.add_term(w, neg.shifted(-k * st.q, 0));
    }
  } else {
    Weight w = mu;
    for (int k = 0; k < -m; ++k) {
      out.add_term(w, tm1.shifted(k * st.q, 0));
      w += st.fin;
    }
  }
}

}  // namespace detail

template <class C>
Laurent<C> dl_op(const RootSystem& rs, int i, const Laurent<C>& f) {
  auto st = detail::root_step(rs, i);
  Laurent<C> out;
  for (auto& [mu, c] : f.terms()) detail::apply_t_mono(rs, i, st, mu, c, out);
  return out;
}

// T_i^{-1} = t^{-1} T_i + t^{-1} - 1
template <class C>
Laurent<C> dl_inv(const RootSystem& rs, int i, const Laurent<C>& f) {
  Laurent<C> out = dl_op(rs, i, f).shifted(0, -1);
  out += f.shifted(0, -1);
  out -= f;
  return out;
}

// plain reflection; s_0 e^lambda = q^{<theta^vee, lambda>} e^{s_theta lambda}
template <class C>
Laurent<C> s_op(const RootSystem& rs, int i, const Laurent<C>& f) {
  auto st = detail::root_step(rs, i);
  Laurent<C> out;
  for (auto& [mu, c] : f.terms()) {
    int m = rs.coroot_pairing(i, mu);
    out.add_term(mu - m * st.fin, c.shifted(-m * st.q, 0));
  }
  return out;
}

template <class C>
Laurent<C> x_mul(const Weight& l, const Laurent<C>& f) {
  return f.translated(l);
}

// T_{i1} o ... o T_{ik}: the last letter acts first
template <class C>
Laurent<C> word_op(const RootSystem& rs, const WeylWord& w, Laurent<C> f) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) f = dl_op(rs, *it, f);
  return f;
}

// (T_{i1} o ... o T_{ik})^{-1}
template <class C>
Laurent<C> word_inv_op(const RootSystem& rs, const WeylWord& w, Laurent<C> f) {
  for (int i : w.letters) f = dl_inv(rs, i, f);
  return f;
}

// Y^mu for mu in Q^vee (coroot coordinates)
template <class C>
Laurent<C> y_op(const RootSystem& rs, const std::vector<int>& mu, const Laurent<C>& f) {
  if (mu.size() != rs.rank()) throw std::invalid_argument("coroot vector has wrong length");
  auto star = rs.default_mu_star();
  std::vector<int> plus = mu;
  int k = 0;
  auto dominant = [&](const std::vector<int>& v) {
    auto cw = rs.coweight_coordinates(v);
    return std::all_of(cw.begin(), cw.end(), [](int x) { return x >= 0; });
  };
  while (!dominant(plus)) {
    ++k;
    for (std::size_t i = 0; i < mu.size(); ++i) plus[i] += star[i];
  }
  Laurent<C> g = f;
  if (k > 0) {
    std::vector<int> minus(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) minus[i] = k * star[i];
    g = word_inv_op(rs, rs.translation_word(minus), g);
  }
  return word_op(rs, rs.translation_word(plus), g);
}

// Y^mu with mu given in fundamental-coweight coordinates
template <class C>
Laurent<C> y_op_coweight(const RootSystem& rs, const std::vector<int>& coweight, const Laurent<C>& f) {
  auto c = rs.coroot_coordinates(coweight);
  if (!c) throw std::invalid_argument("coweight is not in the coroot lattice");
  return y_op(rs, *c, f);
}

// (T_{i1}+1) o ... o (T_{ik}+1) e^lambda
inline QTLaurent demazure_char(const RootSystem& rs, const WeylWord& w, const Weight& l) {
  for (int i : w.letters)
    if (i < 1 || i > int(rs.rank())) throw std::invalid_argument("demazure words use finite letters only");
  QTLaurent f = QTLaurent::mono(l);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) f = dl_op(rs, *it, f) + f;
  return f;
}

// sum of T_v e^lambda over v below w in the Bruhat order (subword property)
inline QTLaurent bruhat_demazure_char(const RootSystem& rs, const WeylWord& w, const Weight& l) {
  const Weight generic(std::vector<int>(rs.rank(), 1));
  if (w.size() > 20) throw std::invalid_argument("word too long");
  std::set<Weight> below;
  for (unsigned long mask = 0; mask < (1UL << w.size()); ++mask) {
    WeylWord u;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (mask >> k & 1UL) u.letters.push_back(w.letters[k]);
    below.insert(rs.act(u, generic));
  }
  QTLaurent f;
  for (auto& g : rs.weyl_group())
    if (below.count(rs.act(g.word, generic))) f += word_op(rs, g.word, QTLaurent::mono(l));
  return f;
}

template <class C>
Laurent<C> symmetrizer(const RootSystem& rs, const Laurent<C>& f) {
  Laurent<C> out;
  for (auto& g : rs.weyl_group()) out += word_op(rs, g.word, f);
  return out;
}

// Linear operator on QTLaurent as an immutable expression tree.
class HeckeOp {
 public:
  static HeckeOp identity() { return leaf(Kind::scalar, 0, {}, RatQT(1)); }
  static HeckeOp scalar(RatQT c) { return leaf(Kind::scalar, 0, {}, std::move(c)); }
  static HeckeOp T(int i) { return leaf(Kind::t, i, {}, {}); }
  static HeckeOp Tinv(int i) { return leaf(Kind::tinv, i, {}, {}); }
  static HeckeOp S(int i) { return leaf(Kind::s, i, {}, {}); }
  // multiplication by q^a e^lambda
  static HeckeOp X(const Weight& l, int qpow = 0) {
    return leaf(Kind::x, qpow, l, {});
  }
  static HeckeOp word(const WeylWord& w) {
    HeckeOp op = identity();
    for (int i : w.letters) op = op * T(i);
    return op;
  }

  friend HeckeOp operator+(const HeckeOp& a, const HeckeOp& b) { return node(Kind::sum, a, b); }
  friend HeckeOp operator-(const HeckeOp& a, const HeckeOp& b) { return node(Kind::sum, a, scalar(-1) * b); }
  // composition: b acts first
  friend HeckeOp operator*(const HeckeOp& a, const HeckeOp& b) { return node(Kind::compose, a, b); }
  friend HeckeOp operator*(const RatQT& c, const HeckeOp& b) { return node(Kind::compose, scalar(c), b); }

  QTLaurent apply(const RootSystem& rs, const QTLaurent& f) const { return eval(*n_, rs, f); }

 private:
  enum class Kind { scalar, t, tinv, s, x, sum, compose };
  struct Node {
    Kind kind;
    int index = 0;
    Weight weight;
    RatQT c;
    std::shared_ptr<const Node> a, b;
  };
  std::shared_ptr<const Node> n_;

  explicit HeckeOp(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static HeckeOp leaf(Kind k, int i, Weight w, RatQT c) {
    return HeckeOp(std::make_shared<const Node>(Node{k, i, std::move(w), std::move(c), nullptr, nullptr}));
  }
  static HeckeOp node(Kind k, const HeckeOp& a, const HeckeOp& b) {
    return HeckeOp(std::make_shared<const Node>(Node{k, 0, {}, {}, a.n_, b.n_}));
  }

  static QTLaurent eval(const Node& n, const RootSystem& rs, const QTLaurent& f) {
    switch (n.kind) {
      case Kind::scalar: return n.c.is_one() ? f : f.scaled(n.c);
      case Kind::t: return dl_op(rs, n.index, f);
      case Kind::tinv: return dl_inv(rs, n.index, f);
      case Kind::s: return s_op(rs, n.index, f);
      case Kind::x: return f.translated(n.weight).shifted(n.index, 0);
      case Kind::sum: return eval(*n.a, rs, f) + eval(*n.b, rs, f);
      case Kind::compose: return eval(*n.a, rs, eval(*n.b, rs, f));
    }
    throw std::logic_error("bad operator node");
  }
};

}  // namespace daha
