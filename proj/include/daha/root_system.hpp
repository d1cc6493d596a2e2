// Cartan data, Weyl groups, the affine extension and the orders on weights.
#pragma once

#include <algorithm>
#include <compare>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace daha {

// Fundamental-weight coordinates: coords[i] = <alpha_i^vee, lambda>.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}
  static Weight zero(std::size_t r) { return Weight(std::vector<int>(r, 0)); }

  std::size_t size() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (auto& x : a.coords) x *= k;
    return a;
  }
  Weight operator-() const { return -1 * *this; }
  auto operator<=>(const Weight&) const = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    return s;
  }
};

// letters over {0, 1, ..., r}; 0 is the affine reflection. Letter i >= 1 is
// the simple reflection s_i (stored with 1-based labels).
struct WeylWord {
  std::vector<int> letters;
  auto operator<=>(const WeylWord&) const = default;
  std::size_t size() const { return letters.size(); }
  WeylWord reversed() const { return WeylWord{{letters.rbegin(), letters.rend()}}; }
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < letters.size(); ++i) s += (i ? "," : "") + std::to_string(letters[i]);
    return s + "]";
  }
};

using IntMatrix = std::vector<std::vector<int>>;

enum class Cmp { less, greater, equal, incomparable };

inline const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::less: return "less";
    case Cmp::greater: return "greater";
    case Cmp::equal: return "equal";
    default: return "incomparable";
  }
}

// Element of the affine Weyl group acting on (weight, q-exponent) pairs by
// (lambda, a) -> (W lambda, a + <gamma, lambda>), gamma in coroot coordinates.
struct AffineElement {
  IntMatrix w;
  std::vector<int> gamma;

  static AffineElement identity(std::size_t r) {
    AffineElement e;
    e.w.assign(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) e.w[i][i] = 1;
    e.gamma.assign(r, 0);
    return e;
  }

  std::pair<Weight, int> act(const Weight& lam, int a) const {
    std::size_t r = lam.size();
    Weight out = Weight::zero(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) out[i] += w[i][j] * lam[j];
    for (std::size_t j = 0; j < r; ++j) a += gamma[j] * lam[j];
    return {out, a};
  }

  // (*this) after o
  AffineElement compose(const AffineElement& o) const {
    std::size_t r = gamma.size();
    AffineElement e;
    e.w.assign(r, std::vector<int>(r, 0));
    e.gamma = o.gamma;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) e.w[i][j] += w[i][k] * o.w[k][j];
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) e.gamma[j] += gamma[k] * o.w[k][j];
    return e;
  }

  bool operator==(const AffineElement&) const = default;
};

class RootSystem {
 public:
  // "A1", "A2", "B2", "C2", "A1xA1", "A<n>"
  static RootSystem from_name(const std::string& name) {
    IntMatrix a;
    if (name == "A1xA1") {
      a = {{2, 0}, {0, 2}};
    } else if (name == "B2") {
      a = {{2, -1}, {-2, 2}};
    } else if (name == "C2") {
      a = {{2, -2}, {-1, 2}};
    } else if (name.size() >= 2 && name[0] == 'A' &&
               std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      int n = std::stoi(name.substr(1));
      if (n < 1 || n > 8) throw std::invalid_argument("unsupported rank in " + name);
      a.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) {
        a[i][i] = 2;
        if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
      }
    } else {
      throw std::invalid_argument("unknown root system '" + name + "'");
    }
    return RootSystem(name, a);
  }

  RootSystem(std::string name, IntMatrix cartan) : name_(std::move(name)), a_(std::move(cartan)) {
    r_ = a_.size();
    validate();
    build_roots();
    build_weyl_group();
  }

  const std::string& name() const { return name_; }
  std::size_t rank() const { return r_; }
  const IntMatrix& cartan() const { return a_; }
  const std::vector<int>& symmetrizers() const { return d_; }
  bool has_affine_node() const { return irreducible_; }

  // alpha_j as a weight: column j of A (0-based j)
  Weight simple_root(std::size_t j) const {
    Weight w = Weight::zero(r_);
    for (std::size_t i = 0; i < r_; ++i) w[i] = a_[i][j];
    return w;
  }
  // weight coordinates of sum_j c_j alpha_j
  Weight root_weight(const std::vector<int>& c) const {
    Weight w = Weight::zero(r_);
    for (std::size_t j = 0; j < r_; ++j)
      for (std::size_t i = 0; i < r_; ++i) w[i] += a_[i][j] * c[j];
    return w;
  }
  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  const std::vector<Weight>& roots() const { return all_roots_; }

  Weight rho2() const { return Weight(std::vector<int>(r_, 2)); }

  // <mu, lambda> with mu in coroot coordinates
  static int pair(const std::vector<int>& coroot, const Weight& lam) {
    int s = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) s += coroot[i] * lam[i];
    return s;
  }

  // simple-root coordinates of v when v lies in Q
  std::optional<std::vector<int>> root_coordinates(const Weight& v) const {
    std::vector<int> out(r_);
    for (std::size_t i = 0; i < r_; ++i) {
      mpq_class s = 0;
      for (std::size_t j = 0; j < r_; ++j) s += ainv_[i][j] * v[j];
      if (s.get_den() != 1) return std::nullopt;
      out[i] = int(s.get_num().get_si());
    }
    return out;
  }
  bool in_root_lattice(const Weight& v) const { return root_coordinates(v).has_value(); }
  bool in_positive_cone(const Weight& v) const {
    auto c = root_coordinates(v);
    return c && std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
  }
  // coroot coordinates of a coweight given in fundamental-coweight coordinates
  std::optional<std::vector<int>> coroot_coordinates(const std::vector<int>& coweight) const {
    std::vector<int> out(r_);
    for (std::size_t i = 0; i < r_; ++i) {
      mpq_class s = 0;
      for (std::size_t j = 0; j < r_; ++j) s += ainv_[j][i] * coweight[j];
      if (s.get_den() != 1) return std::nullopt;
      out[i] = int(s.get_num().get_si());
    }
    return out;
  }
  // <mu, alpha_j> for mu in coroot coordinates
  std::vector<int> coweight_coordinates(const std::vector<int>& coroot) const {
    std::vector<int> out(r_, 0);
    for (std::size_t j = 0; j < r_; ++j)
      for (std::size_t i = 0; i < r_; ++i) out[j] += coroot[i] * a_[i][j];
    return out;
  }

  bool is_dominant(const Weight& l) const {
    return std::all_of(l.coords.begin(), l.coords.end(), [](int x) { return x >= 0; });
  }
  bool is_antidominant(const Weight& l) const {
    return std::all_of(l.coords.begin(), l.coords.end(), [](int x) { return x <= 0; });
  }

  // ---- finite reflections; i is 1-based ----
  Weight reflect(int i, const Weight& l) const {
    check_finite_index(i);
    Weight out = l;
    int m = l[i - 1];
    if (m != 0)
      for (std::size_t k = 0; k < r_; ++k) out[k] -= m * a_[k][i - 1];
    return out;
  }
  // w = s_{i1} ... s_{ik}, rightmost letter applied first
  Weight act(const WeylWord& w, Weight l) const {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) l = reflect(*it, l);
    return l;
  }

  // ---- affine data ----
  int theta_pairing(const Weight& l) const {
    require_affine();
    return pair(theta_coroot_, l);
  }
  const Weight& theta() const {
    require_affine();
    return theta_;
  }
  const std::vector<int>& theta_coroot() const {
    require_affine();
    return theta_coroot_;
  }
  // <alpha_i^vee, lambda> for i in {0..r}
  int coroot_pairing(int i, const Weight& l) const {
    if (i == 0) return -theta_pairing(l);
    check_finite_index(i);
    return l[i - 1];
  }
  // level-zero form of s_0: (lambda, a) -> (s_theta lambda, a + <theta^vee, lambda>)
  std::pair<Weight, int> affine_reflect_q(const Weight& l, int a) const {
    int k = theta_pairing(l);
    return {l - k * theta_, a + k};
  }
  // level-one s_0 on weights
  Weight level_one_s0(const Weight& l) const { return l + (1 - theta_pairing(l)) * theta_; }
  Weight level_one_reflect(int i, const Weight& l) const { return i == 0 ? level_one_s0(l) : reflect(i, l); }

  // order of s_i s_j, 0 meaning infinite
  int braid_order(int i, int j) const {
    if (i == j) return 1;
    int p = affine_cartan(i, j) * affine_cartan(j, i);
    switch (p) {
      case 0: return 2;
      case 1: return 3;
      case 2: return 4;
      case 3: return 6;
      default: return 0;
    }
  }
  // <alpha_i^vee, alpha_j> on the affine diagram
  int affine_cartan(int i, int j) const {
    if (i == 0 || j == 0) {
      require_affine();
      if (i == 0 && j == 0) return 2;
      if (i == 0) return -pair(theta_coroot_, simple_root(j - 1));
      return -theta_[i - 1];
    }
    return a_[i - 1][j - 1];
  }

  AffineElement generator(int i) const {
    AffineElement e = AffineElement::identity(r_);
    if (i == 0) {
      require_affine();
      for (std::size_t a = 0; a < r_; ++a)
        for (std::size_t b = 0; b < r_; ++b) e.w[a][b] -= theta_[a] * theta_coroot_[b];
      e.gamma = theta_coroot_;
    } else {
      check_finite_index(i);
      for (std::size_t a = 0; a < r_; ++a) e.w[a][i - 1] -= a_[a][i - 1];
    }
    return e;
  }
  AffineElement element(const WeylWord& w) const {
    AffineElement e = AffineElement::identity(r_);
    for (int i : w.letters) e = e.compose(generator(i));
    return e;
  }
  // t_mu acts on q^a e^lambda as q^{a - <mu, lambda>} e^lambda
  AffineElement translation(const std::vector<int>& mu) const {
    AffineElement e = AffineElement::identity(r_);
    for (std::size_t i = 0; i < r_; ++i) e.gamma[i] = -mu[i];
    return e;
  }
  // number of positive affine roots made negative
  int length(const AffineElement& x) const {
    int len = 0;
    for (const auto& al : all_roots_) {
      int g = pair(x.gamma, al);
      auto [wa, unused] = x.act(al, 0);
      (void)unused;
      int kmin = is_positive_root(al) ? 0 : 1;
      int kmax = (is_positive_root(wa) ? -1 : 0) - g;
      if (kmax >= kmin) len += kmax - kmin + 1;
    }
    return len;
  }

  WeylWord translation_word(const std::vector<int>& mu) const {
    require_affine();
    if (mu.size() != r_) throw std::invalid_argument("coroot vector has wrong length");
    auto cw = coweight_coordinates(mu);
    if (std::any_of(cw.begin(), cw.end(), [](int x) { return x < 0; }))
      throw std::invalid_argument("translation_word needs a dominant coweight");
    AffineElement x = translation(mu);
    int len = length(x);
    WeylWord out;
    while (len > 0) {
      bool found = false;
      for (int i = 0; i <= int(r_) && !found; ++i) {
        AffineElement y = generator(i).compose(x);
        int ly = length(y);
        if (ly < len) {
          out.letters.push_back(i);
          x = y;
          len = ly;
          found = true;
        }
      }
      if (!found) throw std::logic_error("descent search stalled");
    }
    return out;
  }

  // smallest strictly dominant element of Q^vee: least coordinate sum, then lex
  std::vector<int> default_mu_star() const { return strictly_dominant_coroots(1).front(); }

  // the first `count` strictly dominant elements of Q^vee in the same order
  std::vector<std::vector<int>> strictly_dominant_coroots(std::size_t count) const {
    std::vector<std::vector<int>> out;
    for (int s = 1; out.size() < count; ++s) {
      std::vector<int> c(r_, 0);
      enumerate_compositions(s, 0, c, [&](const std::vector<int>& v) {
        if (out.size() >= count) return;
        auto cw = coweight_coordinates(v);
        if (std::all_of(cw.begin(), cw.end(), [](int x) { return x >= 1; })) out.push_back(v);
      });
    }
    return out;
  }

  // ---- finite Weyl group ----
  struct GroupElement {
    IntMatrix w;
    WeylWord word;  // a reduced word
  };
  const std::vector<GroupElement>& weyl_group() const { return group_; }

  int finite_length(const WeylWord& w) const {
    Weight r = act(w, Weight(std::vector<int>(r_, 1)));
    return length_of_image(r);
  }

  std::vector<WeylWord> reduced_words(const WeylWord& w) const {
    std::map<Weight, std::vector<WeylWord>> memo;
    return reduced_words_rec(act(w, Weight(std::vector<int>(r_, 1))), memo);
  }

  WeylWord longest_word() const {
    WeylWord best;
    for (auto& g : group_)
      if (g.word.size() > best.size()) best = g.word;
    return best;
  }

  // ---- dominant and antidominant representatives ----
  std::pair<Weight, WeylWord> antidominant(Weight l) const {
    std::vector<int> applied;
    for (;;) {
      std::size_t i = 0;
      while (i < r_ && l[i] <= 0) ++i;
      if (i == r_) break;
      l = reflect(int(i) + 1, l);
      applied.push_back(int(i) + 1);
    }
    return {l, WeylWord{{applied.rbegin(), applied.rend()}}};
  }
  std::pair<Weight, WeylWord> dominant(Weight l) const {
    std::vector<int> applied;
    for (;;) {
      std::size_t i = 0;
      while (i < r_ && l[i] >= 0) ++i;
      if (i == r_) break;
      l = reflect(int(i) + 1, l);
      applied.push_back(int(i) + 1);
    }
    return {l, WeylWord{{applied.rbegin(), applied.rend()}}};
  }

  std::vector<Weight> orbit(const Weight& l) const {
    std::set<Weight> seen{l};
    std::deque<Weight> todo{l};
    while (!todo.empty()) {
      Weight x = todo.front();
      todo.pop_front();
      for (int i = 1; i <= int(r_); ++i) {
        Weight y = reflect(i, x);
        if (seen.insert(y).second) todo.push_back(y);
      }
    }
    return {seen.begin(), seen.end()};
  }

  // ---- orders ----
  // lambda >= mu in dominance
  bool dominance_geq(const Weight& l, const Weight& m) const { return in_positive_cone(l - m); }

  // lambda precedes-or-equals mu in the Cherednik order
  bool cherednik_leq(const Weight& l, const Weight& m) const {
    if (l == m) return true;
    if (!in_root_lattice(l - m)) return false;
    Weight lm = antidominant(l).first, mm = antidominant(m).first;
    if (lm != mm) return in_positive_cone(lm - mm);
    return in_positive_cone(l - m);
  }

  Cmp cherednik_cmp(const Weight& l, const Weight& m) const {
    if (l == m) return Cmp::equal;
    if (cherednik_leq(l, m)) return Cmp::less;
    if (cherednik_leq(m, l)) return Cmp::greater;
    return Cmp::incomparable;
  }

  // P[<= lambda] in a linear extension of the Cherednik order, ties broken
  // lexicographically, smallest first
  std::vector<Weight> lower_set(const Weight& l) const {
    Weight top = dominant(l).first;
    std::set<Weight> hull{top};
    std::deque<Weight> todo{top};
    while (!todo.empty()) {
      Weight x = todo.front();
      todo.pop_front();
      for (std::size_t j = 0; j < r_; ++j)
        for (int sgn : {-1, 1}) {
          Weight y = x + sgn * simple_root(j);
          if (hull.count(y)) continue;
          if (!dominance_geq(top, dominant(y).first)) continue;
          hull.insert(y);
          todo.push_back(y);
        }
    }
    std::vector<Weight> members;
    for (auto& x : hull)
      if (cherednik_leq(x, l)) members.push_back(x);
    return linear_extension(members);
  }

  std::vector<Weight> linear_extension(const std::vector<Weight>& members) const {
    const std::size_t n = members.size();
    std::vector<std::vector<std::size_t>> above(n);
    std::vector<int> indeg(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && cherednik_leq(members[a], members[b])) {
          above[a].push_back(b);
          ++indeg[b];
        }
    std::set<std::pair<Weight, std::size_t>> ready;
    for (std::size_t a = 0; a < n; ++a)
      if (indeg[a] == 0) ready.insert({members[a], a});
    std::vector<Weight> out;
    while (!ready.empty()) {
      auto [w, a] = *ready.begin();
      ready.erase(ready.begin());
      out.push_back(w);
      for (auto b : above[a])
        if (--indeg[b] == 0) ready.insert({members[b], b});
    }
    if (out.size() != n) throw std::logic_error("order relation has a cycle");
    return out;
  }

 private:
  std::string name_;
  IntMatrix a_;
  std::size_t r_ = 0;
  std::vector<int> d_;
  std::vector<std::vector<mpq_class>> ainv_;
  std::vector<Weight> pos_roots_, all_roots_;
  std::set<Weight> pos_set_;
  bool irreducible_ = false;
  Weight theta_;
  std::vector<int> theta_coroot_;
  std::vector<GroupElement> group_;

  void check_finite_index(int i) const {
    if (i < 1 || i > int(r_)) throw std::invalid_argument("reflection index out of range");
  }
  void require_affine() const {
    if (!irreducible_) throw std::invalid_argument("affine extension needs an irreducible root system; " + name_ + " is not");
  }
  bool is_positive_root(const Weight& w) const { return pos_set_.count(w) > 0; }

  void validate() {
    if (r_ == 0) throw std::invalid_argument("empty Cartan matrix");
    for (std::size_t i = 0; i < r_; ++i) {
      if (a_[i].size() != r_) throw std::invalid_argument("Cartan matrix not square");
      if (a_[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
      for (std::size_t j = 0; j < r_; ++j)
        if (i != j && (a_[i][j] > 0 || (a_[i][j] == 0) != (a_[j][i] == 0)))
          throw std::invalid_argument("invalid Cartan matrix");
    }
    // symmetrizers by propagation along the diagram
    d_.assign(r_, 0);
    std::vector<mpq_class> dq(r_, 0);
    for (std::size_t start = 0; start < r_; ++start) {
      if (dq[start] != 0) continue;
      dq[start] = 1;
      std::deque<std::size_t> todo{start};
      while (!todo.empty()) {
        auto i = todo.front();
        todo.pop_front();
        for (std::size_t j = 0; j < r_; ++j) {
          if (i == j || a_[i][j] == 0) continue;
          mpq_class v = dq[i] * a_[i][j] / a_[j][i];
          if (dq[j] == 0) {
            dq[j] = v;
            todo.push_back(j);
          } else if (dq[j] != v) {
            throw std::invalid_argument("Cartan matrix is not symmetrizable");
          }
        }
      }
    }
    mpz_class l = 1;
    for (auto& x : dq) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t i = 0; i < r_; ++i) d_[i] = int(mpq_class(dq[i] * l).get_num().get_si());
    int g = 0;
    for (int x : d_) g = std::gcd(g, x);
    for (int& x : d_) x /= g;
    // inverse over Q
    std::vector<std::vector<mpq_class>> m(r_, std::vector<mpq_class>(2 * r_, 0));
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < r_; ++j) m[i][j] = a_[i][j];
      m[i][r_ + i] = 1;
    }
    for (std::size_t c = 0; c < r_; ++c) {
      std::size_t p = c;
      while (p < r_ && m[p][c] == 0) ++p;
      if (p == r_) throw std::invalid_argument("singular Cartan matrix");
      std::swap(m[p], m[c]);
      mpq_class inv = 1 / m[c][c];
      for (auto& x : m[c]) x *= inv;
      for (std::size_t i = 0; i < r_; ++i)
        if (i != c && m[i][c] != 0) {
          mpq_class f = m[i][c];
          for (std::size_t j = 0; j < 2 * r_; ++j) m[i][j] -= f * m[c][j];
        }
    }
    ainv_.assign(r_, std::vector<mpq_class>(r_));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j) ainv_[i][j] = m[i][r_ + j];
  }

  void build_roots() {
    // positive roots in simple-root coordinates, grown by height
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> layer;
    for (std::size_t i = 0; i < r_; ++i) {
      std::vector<int> e(r_, 0);
      e[i] = 1;
      layer.push_back(e);
      found.insert(e);
    }
    std::vector<std::vector<int>> all = layer;
    while (!layer.empty()) {
      std::vector<std::vector<int>> next;
      for (auto& b : layer)
        for (std::size_t i = 0; i < r_; ++i) {
          int p = 0;
          for (;;) {
            auto c = b;
            c[i] -= p + 1;
            if (!found.count(c)) break;
            ++p;
          }
          int pairing = 0;
          for (std::size_t j = 0; j < r_; ++j) pairing += a_[i][j] * b[j];
          if (p - pairing > 0) {
            auto c = b;
            c[i] += 1;
            if (found.insert(c).second) next.push_back(c);
          }
        }
      for (auto& c : next) all.push_back(c);
      layer = std::move(next);
    }
    std::vector<int> highest;
    int hh = -1, components = 0;
    for (auto& c : all) {
      int h = std::accumulate(c.begin(), c.end(), 0);
      if (h > hh) {
        hh = h;
        highest = c;
      }
      pos_roots_.push_back(root_weight(c));
    }
    // connectedness of the diagram
    std::vector<bool> seen(r_, false);
    for (std::size_t s = 0; s < r_; ++s) {
      if (seen[s]) continue;
      ++components;
      std::deque<std::size_t> todo{s};
      seen[s] = true;
      while (!todo.empty()) {
        auto i = todo.front();
        todo.pop_front();
        for (std::size_t j = 0; j < r_; ++j)
          if (!seen[j] && a_[i][j] != 0) {
            seen[j] = true;
            todo.push_back(j);
          }
      }
    }
    irreducible_ = components == 1;
    for (auto& p : pos_roots_) {
      all_roots_.push_back(p);
      all_roots_.push_back(-p);
      pos_set_.insert(p);
    }
    if (irreducible_) {
      theta_ = root_weight(highest);
      // theta^vee = sum_j c_j d_j / d_theta alpha_j^vee
      long num = 0;
      for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) num += long(highest[i]) * highest[j] * d_[i] * a_[i][j];
      long dtheta2 = num;  // 2 * d_theta
      theta_coroot_.assign(r_, 0);
      for (std::size_t j = 0; j < r_; ++j) {
        long v = 2L * highest[j] * d_[j];
        if (v % dtheta2 != 0) throw std::logic_error("non-integral highest coroot");
        theta_coroot_[j] = int(v / dtheta2);
      }
    }
  }

  int length_of_image(const Weight& generic) const {
    // each step back to the dominant chamber drops the length by one
    Weight l = generic;
    int steps = 0;
    for (;;) {
      std::size_t i = 0;
      while (i < r_ && l[i] >= 0) ++i;
      if (i == r_) return steps;
      l = reflect(int(i) + 1, l);
      ++steps;
    }
  }

  void build_weyl_group() {
    Weight rho(std::vector<int>(r_, 1));
    std::map<Weight, WeylWord> seen{{rho, WeylWord{}}};
    std::deque<Weight> todo{rho};
    group_.push_back({AffineElement::identity(r_).w, WeylWord{}});
    while (!todo.empty()) {
      Weight x = todo.front();
      todo.pop_front();
      for (int i = 1; i <= int(r_); ++i) {
        Weight y = reflect(i, x);
        if (seen.count(y)) continue;
        WeylWord w = seen[x];
        w.letters.insert(w.letters.begin(), i);
        seen[y] = w;
        todo.push_back(y);
        IntMatrix m(r_, std::vector<int>(r_, 0));
        for (std::size_t c = 0; c < r_; ++c) {
          Weight e = Weight::zero(r_);
          e[c] = 1;
          Weight img = act(w, e);
          for (std::size_t rr = 0; rr < r_; ++rr) m[rr][c] = img[rr];
        }
        group_.push_back({m, w});
        if (group_.size() > 100000) throw std::invalid_argument("Weyl group too large");
      }
    }
  }

  std::vector<WeylWord> reduced_words_rec(const Weight& image, std::map<Weight, std::vector<WeylWord>>& memo) const {
    auto it = memo.find(image);
    if (it != memo.end()) return it->second;
    std::vector<WeylWord> out;
    if (is_dominant(image)) {
      out.push_back(WeylWord{});
    } else {
      // w rho has a negative coordinate i exactly when s_i is a left descent
      for (std::size_t i = 0; i < r_; ++i) {
        if (image[i] >= 0) continue;
        for (auto w : reduced_words_rec(reflect(int(i) + 1, image), memo)) {
          w.letters.insert(w.letters.begin(), int(i) + 1);
          out.push_back(w);
        }
      }
    }
    std::sort(out.begin(), out.end());
    memo[image] = out;
    return out;
  }

  template <class F>
  void enumerate_compositions(int s, std::size_t i, std::vector<int>& c, F&& f) const {
    if (i + 1 == r_) {
      c[i] = s;
      f(c);
      return;
    }
    for (int v = 0; v <= s; ++v) {
      c[i] = v;
      enumerate_compositions(s - v, i + 1, c, f);
    }
  }
};

}  // namespace daha
