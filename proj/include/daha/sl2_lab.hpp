// Finite-dimensional modules over the truncated current superalgebra
// sl2[z, xi] (Iwahori part), their fusion products and graded characters.
#pragma once

#include <array>

#include "macdonald.hpp"

namespace daha::sl2 {

// X z^a xi^b with X in {e, h, f}; f needs a >= 1
struct Gen {
  char x;
  int a;
  int b;
  auto operator<=>(const Gen&) const = default;
  bool odd() const { return b == 1; }
  int weight() const { return x == 'e' ? 2 : x == 'f' ? -2 : 0; }
  std::string to_string() const {
    std::string s(1, x);
    if (a == 1) s += "z";
    if (a > 1) s += "z^" + std::to_string(a);
    if (b) s += "xi";
    return s;
  }
};

inline std::vector<Gen> generators(int D) {
  std::vector<Gen> out;
  for (char x : {'e', 'h', 'f'})
    for (int a = x == 'f' ? 1 : 0; a <= D; ++a)
      for (int b : {0, 1}) out.push_back({x, a, b});
  return out;
}

// super bracket [X, Y] = c * Z, or nullopt when it vanishes
inline std::optional<std::pair<int, Gen>> bracket(const Gen& g1, const Gen& g2) {
  if (g1.b + g2.b > 1 || g1.x == g2.x) return std::nullopt;
  int c = 0;
  char z = 'h';
  auto pr = std::string{g1.x, g2.x};
  if (pr == "he") c = 2, z = 'e';
  if (pr == "eh") c = -2, z = 'e';
  if (pr == "hf") c = -2, z = 'f';
  if (pr == "fh") c = 2, z = 'f';
  if (pr == "ef") c = 1, z = 'h';
  if (pr == "fe") c = -1, z = 'h';
  return std::pair{c, Gen{z, g1.a + g2.a, g1.b + g2.b}};
}

using Vec = std::vector<Rational>;

// column-sparse square matrix
struct Matrix {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;

  explicit Matrix(std::size_t n = 0) : cols(n) {}
  std::size_t size() const { return cols.size(); }
  void set(std::size_t row, std::size_t col, const Rational& v) {
    auto& c = cols[col];
    for (auto& [r, x] : c)
      if (r == row) {
        x = v;
        return;
      }
    if (v != 0) c.push_back({row, v});
  }
  Rational get(std::size_t row, std::size_t col) const {
    for (auto& [r, x] : cols[col])
      if (r == row) return x;
    return 0;
  }
  Vec apply(const Vec& v) const {
    Vec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      for (auto& [r, x] : cols[j]) out[r] += x * v[j];
    }
    return out;
  }
};

struct Label {
  int weight;  // multiple of omega
  int xideg;
  std::string name;
};

struct FiniteRep {
  std::vector<Label> basis;
  std::map<Gen, Matrix> actions;
  std::size_t cyclic = 0;
  int D = 6;

  std::size_t dim() const { return basis.size(); }
  const Matrix& act(const Gen& g) const {
    auto it = actions.find(g);
    if (it == actions.end()) throw std::out_of_range("no action stored for " + g.to_string());
    return it->second;
  }
  Vec unit(std::size_t i) const {
    Vec v(dim());
    v[i] = 1;
    return v;
  }
};

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// every pair of stored generators whose bracket is stored
inline std::optional<std::string> compatibility_failure(const FiniteRep& rep) {
  const std::size_t n = rep.dim();
  for (auto& [g1, m1] : rep.actions)
    for (auto& [g2, m2] : rep.actions) {
      if (g2 < g1) continue;
      auto br = bracket(g1, g2);
      if (br && !rep.actions.count(br->second)) continue;
      int sign = g1.odd() && g2.odd() ? -1 : 1;
      for (std::size_t j = 0; j < n; ++j) {
        Vec v = rep.unit(j);
        Vec a = m1.apply(m2.apply(v)), b = m2.apply(m1.apply(v));
        for (std::size_t i = 0; i < n; ++i) a[i] -= sign * b[i];
        if (br) {
          Vec c = rep.act(br->second).apply(v);
          for (std::size_t i = 0; i < n; ++i) a[i] -= br->first * c[i];
        }
        if (!is_zero(a)) return "[" + g1.to_string() + ", " + g2.to_string() + "] fails on basis vector " + rep.basis[j].name;
      }
    }
  return std::nullopt;
}

namespace detail {

// quadratic polynomials in the unknown matrix entries
struct Quad {
  // (-1,-1) constant, (-1,i) linear, (i,j) with i <= j quadratic
  std::map<std::pair<int, int>, Rational> terms;

  static Quad constant(const Rational& c) {
    Quad q;
    if (c != 0) q.terms[{-1, -1}] = c;
    return q;
  }
  static Quad var(int i) {
    Quad q;
    q.terms[{-1, i}] = 1;
    return q;
  }
  void add(const Quad& o, const Rational& s = 1) {
    for (auto& [k, v] : o.terms) {
      auto& x = terms[k];
      x += s * v;
      if (x == 0) terms.erase(k);
    }
  }
  friend Quad operator*(const Quad& a, const Quad& b) {
    Quad r;
    for (auto& [ka, va] : a.terms)
      for (auto& [kb, vb] : b.terms) {
        std::vector<int> vars;
        for (int x : {ka.first, ka.second, kb.first, kb.second})
          if (x >= 0) vars.push_back(x);
        if (vars.size() > 2) throw std::logic_error("degree overflow");
        std::sort(vars.begin(), vars.end());
        std::pair<int, int> k{-1, -1};
        if (vars.size() == 1) k = {-1, vars[0]};
        if (vars.size() == 2) k = {vars[0], vars[1]};
        auto& x = r.terms[k];
        x += va * vb;
        if (x == 0) r.terms.erase(k);
      }
    return r;
  }
  Quad substitute(const std::map<int, Rational>& known) const {
    Quad r;
    for (auto& [k, v] : terms) {
      Quad t = constant(v);
      for (int x : {k.first, k.second}) {
        if (x < 0) continue;
        auto it = known.find(x);
        t = t * (it == known.end() ? var(x) : constant(it->second));
      }
      r.add(t);
    }
    return r;
  }
  bool linear() const {
    return std::all_of(terms.begin(), terms.end(), [](auto& kv) { return kv.first.first < 0; });
  }
};

using SymMatrix = std::map<std::pair<std::size_t, std::size_t>, Quad>;  // (row, col)

inline SymMatrix mat_mul(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix r;
  for (auto& [ka, va] : a)
    for (auto& [kb, vb] : b)
      if (ka.second == kb.first) r[{ka.first, kb.second}].add(va * vb);
  return r;
}

// reduced row echelon solve; returns the unknowns fixed by the system
inline std::map<int, Rational> solve_linear(const std::vector<Quad>& eqs, bool& inconsistent) {
  std::vector<int> vars;
  for (auto& e : eqs)
    for (auto& [k, v] : e.terms)
      if (k.second >= 0) vars.push_back(k.second);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::map<int, std::size_t> col;
  for (std::size_t i = 0; i < vars.size(); ++i) col[vars[i]] = i;
  const std::size_t nv = vars.size();
  std::vector<Vec> rows;
  for (auto& e : eqs) {
    Vec r(nv + 1);
    for (auto& [k, v] : e.terms) {
      if (k.second < 0)
        r[nv] = -v;
      else
        r[col[k.second]] = v;
    }
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < nv && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    Rational inv = 1 / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j <= nv; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  inconsistent = false;
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i][nv] != 0) inconsistent = true;
  std::map<int, Rational> fixed;
  for (std::size_t i = 0; i < rank; ++i) {
    bool alone = true;
    for (std::size_t j = 0; j < nv; ++j)
      if (j != pivots[i] && rows[i][j] != 0) alone = false;
    if (alone) fixed[vars[pivots[i]]] = rows[i][nv];
  }
  return fixed;
}

}  // namespace detail

// The 4-dimensional quotient of the global module by h(z - alpha)w, on the
// basis w, u = hz xi w, p = e w, r = e xi w; all other matrix entries solved
// from bracket compatibility.
inline FiniteRep deformed_block(const Rational& alpha, int D = 6) {
  enum { W, U, P, R };
  FiniteRep rep;
  rep.basis = {{-1, 0, "w"}, {-1, 1, "u"}, {1, 0, "p"}, {1, 1, "r"}};
  rep.D = D;
  rep.cyclic = W;

  // allowed entries: respect weight and xi-degree
  int nunk = 0;
  std::map<Gen, detail::SymMatrix> sym;
  std::map<std::tuple<Gen, std::size_t, std::size_t>, int> ids;
  for (auto& g : generators(D)) {
    auto& m = sym[g];
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t i = 0; i < 4; ++i) {
        if (rep.basis[i].weight != rep.basis[j].weight + g.weight()) continue;
        if (rep.basis[i].xideg != rep.basis[j].xideg + g.b) continue;
        if (g.x == 'h' && g.a == 0 && g.b == 0) {
          m[{i, j}] = detail::Quad::constant(rep.basis[j].weight);
          continue;
        }
        ids[{g, i, j}] = nunk;
        m[{i, j}] = detail::Quad::var(nunk++);
      }
  }
  std::map<int, Rational> known;
  known[ids.at({Gen{'e', 0, 0}, P, W})] = 1;
  known[ids.at({Gen{'e', 0, 1}, R, W})] = 1;
  known[ids.at({Gen{'h', 1, 1}, U, W})] = 1;
  known[ids.at({Gen{'h', 0, 1}, U, W})] = 0;
  known[ids.at({Gen{'h', 1, 0}, W, W})] = -alpha;

  std::vector<detail::Quad> eqs;
  for (auto it1 = sym.begin(); it1 != sym.end(); ++it1)
    for (auto it2 = it1; it2 != sym.end(); ++it2) {
      auto& [g1, m1] = *it1;
      auto& [g2, m2] = *it2;
      if (g1.a + g2.a > D) continue;
      auto br = bracket(g1, g2);
      int sign = g1.odd() && g2.odd() ? -1 : 1;
      detail::SymMatrix diff = detail::mat_mul(m1, m2);
      for (auto& [k, v] : detail::mat_mul(m2, m1)) diff[k].add(v, -sign);
      if (br)
        for (auto& [k, v] : sym.at(br->second)) diff[k].add(v, -br->first);
      for (auto& [k, v] : diff)
        if (!v.terms.empty()) eqs.push_back(v);
    }

  for (;;) {
    std::vector<detail::Quad> lin;
    for (auto& e : eqs) {
      auto s = e.substitute(known);
      if (!s.terms.empty() && s.linear()) lin.push_back(std::move(s));
    }
    bool bad = false;
    auto fixed = detail::solve_linear(lin, bad);
    if (bad) throw std::runtime_error("deformed block: inconsistent constraints");
    std::size_t before = known.size();
    for (auto& [k, v] : fixed) known.emplace(k, v);
    if (known.size() == before) break;
  }
  if (int(known.size()) != nunk)
    throw std::runtime_error("deformed block: constraints do not determine the action (" +
                             std::to_string(nunk - int(known.size())) + " free entries)");
  for (auto& e : eqs)
    if (!e.substitute(known).terms.empty()) throw std::runtime_error("deformed block: inconsistent constraints");

  for (auto& [g, m] : sym) {
    Matrix mat(4);
    for (auto& [k, v] : m) {
      auto c = v.substitute(known);
      Rational x = c.terms.empty() ? Rational(0) : c.terms.begin()->second;
      mat.set(k.first, k.second, x);
    }
    rep.actions.emplace(g, std::move(mat));
  }
  return rep;
}

// smallest invariant subspace containing the cyclic vector
inline std::size_t span_dimension(const FiniteRep& rep);

namespace detail {

// echelon basis with pivot bookkeeping
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n) {}
  std::size_t rank() const { return rows_.size(); }
  // true if v was independent
  bool insert(Vec v) {
    for (auto& [p, r] : rows_) {
      if (v[p] == 0) continue;
      Rational f = v[p];
      for (std::size_t j = 0; j < n_; ++j)
        if (r[j] != 0) v[j] -= f * r[j];
    }
    std::size_t p = 0;
    while (p < n_ && v[p] == 0) ++p;
    if (p == n_) return false;
    Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (auto& [q, r] : rows_)
      if (r[p] != 0) {
        Rational f = r[p];
        for (std::size_t j = 0; j < n_; ++j)
          if (v[j] != 0) r[j] -= f * v[j];
      }
    rows_.emplace_back(p, std::move(v));
    return true;
  }
  bool contains(Vec v) const {
    for (auto& [p, r] : rows_) {
      if (v[p] == 0) continue;
      Rational f = v[p];
      for (std::size_t j = 0; j < n_; ++j)
        if (r[j] != 0) v[j] -= f * r[j];
    }
    return is_zero(v);
  }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

inline std::pair<int, int> sector_of(const FiniteRep& rep, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return {rep.basis[i].weight, rep.basis[i].xideg};
  throw std::logic_error("zero vector has no sector");
}

}  // namespace detail

inline std::size_t span_dimension(const FiniteRep& rep) {
  detail::Echelon ech(rep.dim());
  std::vector<Vec> todo{rep.unit(rep.cyclic)};
  ech.insert(todo.back());
  while (!todo.empty()) {
    Vec v = std::move(todo.back());
    todo.pop_back();
    for (auto& [g, m] : rep.actions) {
      Vec w = m.apply(v);
      if (!is_zero(w) && ech.insert(w)) todo.push_back(std::move(w));
    }
  }
  return ech.rank();
}

// tensor product of deformed blocks with the super coproduct
inline FiniteRep fusion(const std::vector<Rational>& alphas, int D = 6) {
  if (alphas.empty()) throw std::invalid_argument("fusion needs at least one factor");
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i] == alphas[j]) throw std::invalid_argument("fusion parameters must be distinct");
  std::vector<FiniteRep> blocks;
  for (auto& a : alphas) blocks.push_back(deformed_block(a, D));
  if (blocks.size() == 1) return blocks.front();

  const std::size_t k = blocks.size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= 4;
  FiniteRep rep;
  rep.D = D;
  rep.cyclic = 0;
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = idx % 4;
      idx /= 4;
    }
    return d;
  };
  auto index = [&](const std::vector<std::size_t>& d) {
    std::size_t idx = 0;
    for (auto x : d) idx = idx * 4 + x;
    return idx;
  };
  for (std::size_t idx = 0; idx < n; ++idx) {
    Label l{0, 0, ""};
    for (std::size_t i = 0; i < k; ++i) {
      auto& b = blocks[i].basis[digits(idx)[i]];
      l.weight += b.weight;
      l.xideg += b.xideg;
      l.name += (i ? "." : "") + b.name;
    }
    rep.basis.push_back(l);
  }
  for (auto& g : generators(D)) {
    Matrix m(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
      auto d = digits(idx);
      int parity = 0;
      for (std::size_t i = 0; i < k; ++i) {
        int sgn = g.odd() && parity % 2 ? -1 : 1;
        for (auto& [r, x] : blocks[i].act(g).cols[d[i]]) {
          auto e = d;
          e[i] = r;
          m.cols[idx].push_back({index(e), sgn * x});
        }
        parity += blocks[i].basis[d[i]].xideg;
      }
    }
    rep.actions.emplace(g, std::move(m));
  }
  if (span_dimension(rep) != n) throw std::runtime_error("fusion product is not cyclic");
  return rep;
}

inline std::vector<Rational> default_alphas(int k, int shift = 1) {
  std::vector<Rational> out;
  for (int i = 0; i < k; ++i) out.emplace_back(i + shift);
  return out;
}

// pieces of the z-degree filtration F_0 c F_1 c ... of the cyclic vector
struct Filtration {
  // dims[m][(weight, xideg)] = dim of F_m in that sector
  std::vector<std::map<std::pair<int, int>, std::size_t>> dims;
  // new vectors at each level
  std::vector<std::vector<Vec>> added;
  std::map<std::pair<int, int>, detail::Echelon> sectors;

  bool contains(const FiniteRep& rep, const Vec& v) const {
    if (is_zero(v)) return true;
    auto it = sectors.find(detail::sector_of(rep, v));
    return it != sectors.end() && it->second.contains(v);
  }
};

inline Filtration filtration(const FiniteRep& rep, std::size_t max_level = 200) {
  Filtration F;
  std::size_t total = 0;
  auto insert = [&](Vec v, std::vector<Vec>& fresh) {
    if (is_zero(v)) return false;
    auto key = detail::sector_of(rep, v);
    auto it = F.sectors.try_emplace(key, rep.dim()).first;
    if (!it->second.insert(v)) return false;
    fresh.push_back(std::move(v));
    ++total;
    return true;
  };
  for (std::size_t m = 0; total < rep.dim(); ++m) {
    if (m > max_level) throw std::runtime_error("filtration does not exhaust the module: not cyclic");
    std::vector<Vec> fresh;
    if (m == 0) insert(rep.unit(rep.cyclic), fresh);
    for (auto& [g, mat] : rep.actions) {
      if (g.a == 0 || std::size_t(g.a) > m) continue;
      for (auto& v : F.added[m - std::size_t(g.a)]) insert(mat.apply(v), fresh);
    }
    for (std::size_t i = 0; i < fresh.size(); ++i)
      for (auto& [g, mat] : rep.actions) {
        if (g.a != 0) continue;
        Vec w = mat.apply(fresh[i]);
        insert(std::move(w), fresh);
      }
    F.added.push_back(std::move(fresh));
    std::map<std::pair<int, int>, std::size_t> d;
    for (auto& [key, e] : F.sectors) d[key] = e.rank();
    F.dims.push_back(std::move(d));
  }
  return F;
}

// sum over m of q^m (-t)^b ch(F_m / F_{m-1})_b
inline PolyLaurent graded_character(const FiniteRep& rep) {
  Filtration F = filtration(rep);
  PolyLaurent ch;
  for (std::size_t m = 0; m < F.dims.size(); ++m)
    for (auto& [key, d] : F.dims[m]) {
      std::size_t prev = 0;
      if (m > 0) {
        auto it = F.dims[m - 1].find(key);
        if (it != F.dims[m - 1].end()) prev = it->second;
      }
      if (d == prev) continue;
      long c = long(d - prev) * (key.second % 2 ? -1 : 1);
      ch.add_term(Weight{key.first}, QTPoly::monomial(c, int(m), key.second));
    }
  return ch;
}

// relations on the associated graded at the cyclic vector: X of z-degree a
// must send w into F_{a-1}
struct RelationCheck {
  std::string name;
  bool pass;
};

inline std::vector<RelationCheck> graded_relations(const FiniteRep& rep, int k) {
  Filtration F = filtration(rep);
  std::vector<detail::Echelon> level;  // level[m] spans F_m
  for (std::size_t m = 0; m < F.added.size(); ++m) {
    level.push_back(m ? level.back() : detail::Echelon(rep.dim()));
    for (auto& x : F.added[m]) level.back().insert(x);
  }
  auto in_level = [&](const Vec& v, int m) {
    if (m < 0) return is_zero(v);
    return level[std::min(std::size_t(m), level.size() - 1)].contains(v);
  };
  Vec w = rep.unit(rep.cyclic);
  std::vector<RelationCheck> out;
  bool f_ok = true, h_ok = true;
  for (auto& [g, mat] : rep.actions) {
    if (g.x == 'f') f_ok = f_ok && in_level(mat.apply(w), g.a - 1);
    if (g.x == 'h' && g.a >= 1 && g.b == 0) h_ok = h_ok && in_level(mat.apply(w), g.a - 1);
  }
  out.push_back({"f z^a xi^b w = 0", f_ok});
  out.push_back({"h xi w = 0", is_zero(rep.act({'h', 0, 1}).apply(w))});
  Vec v = w;
  for (int i = 0; i <= k; ++i) v = rep.act({'e', 0, 0}).apply(v);
  out.push_back({"e^(k+1) w = 0", is_zero(v)});
  Vec hw = rep.act({'h', 0, 0}).apply(w);
  bool weight_ok = true;
  for (std::size_t i = 0; i < hw.size(); ++i) weight_ok = weight_ok && hw[i] == -k * w[i];
  out.push_back({"h w = -k w", weight_ok});
  out.push_back({"h z^a w = 0 (a >= 1)", h_ok});
  return out;
}

// ---- character recursion ----

// x^m q^j -> x^{1-m} q^{j + slope*m + offset}
struct TwistRule {
  Rational slope;
  Rational offset;
};

// the twist of f, normalized by the overall q-power that keeps the
// coefficient of the leading weight unchanged
inline PolyLaurent pi_twist(const TwistRule& rule, const PolyLaurent& f, int lead) {
  PolyLaurent out;
  for (auto& [w, c] : f.terms()) {
    Rational s = rule.slope * (w[0] - lead);
    if (s.get_den() != 1) throw std::domain_error("twist produces a fractional q-power");
    out.add_term(Weight{1 - w[0]}, c.shifted(int(s.get_num().get_si()), 0));
  }
  return out;
}

// Solves the twist rule from pi(E~_{-omega}) = E~_{2 omega} with the right
// side from the eigen-solve.
inline TwistRule twist_cocycle() {
  auto a1 = RootSystem::from_name("A1");
  PolyLaurent src = nonsym_e_integral(a1, Weight{-1});
  PolyLaurent dst = nonsym_e_integral(a1, Weight{2});
  // each source term x^m c(q,t) must land on x^{1-m} q^{s} c(q,t)
  std::vector<std::pair<int, int>> shifts;  // (m, s)
  for (auto& [w, c] : src.terms()) {
    QTPoly target = dst.coefficient(Weight{1 - w[0]});
    auto r = divide_exact(target, c);
    if (!r || !r->is_monomial() || r->lowest().c != 1 || r->lowest().e.t != 0)
      throw std::runtime_error("no twist rule maps " + c.to_string() + " onto " + target.to_string());
    shifts.emplace_back(w[0], r->lowest().e.q);
  }
  if (src.size() != dst.size() || shifts.size() < 2) throw std::runtime_error("twist constraint has the wrong shape");
  auto [m0, s0] = shifts[0];
  auto [m1, s1] = shifts[1];
  TwistRule rule{Rational(s1 - s0, m1 - m0), 0};
  rule.slope.canonicalize();
  rule.offset = s0 - rule.slope * m0;
  for (auto& [m, s] : shifts)
    if (rule.slope * m + rule.offset != s) throw std::runtime_error("no affine-linear twist rule fits");
  return rule;
}

// product scalar relating E~_{m omega} to E_{m omega}
inline QTPoly integral_scalar(int m) {
  int k = m <= 0 ? -m : m - 1;
  QTPoly p(1);
  for (int j = 1; j <= k; ++j) p = p * (QTPoly(1) - QTPoly::monomial(1, j, 1));
  return p;
}

// E~_{m omega}: E~_0 = 1, E~_{(k+1) omega} = pi(E~_{-k omega}),
// E~_{-(k+1) omega} = (1 - t q^{k+1}) x^{-1} E~_{-k omega} + (1 - t) E~_{(k+1) omega}
inline PolyLaurent recursion_e(int m, const TwistRule& rule) {
  PolyLaurent neg = PolyLaurent::mono(Weight{0}, QTPoly(1));
  if (m == 0) return neg;
  for (int k = 0;; ++k) {
    PolyLaurent pos = pi_twist(rule, neg, -k);
    if (m == k + 1) return pos;
    PolyLaurent next = neg.translated(Weight{-1}).scaled(QTPoly(1) - QTPoly::monomial(1, k + 1, 1));
    next += pos.scaled(QTPoly(1) - QTPoly::t());
    neg = std::move(next);
    if (m == -(k + 1)) return neg;
  }
}

inline PolyLaurent recursion_e(int m) { return recursion_e(m, twist_cocycle()); }

// E_{m omega} times the product scalar; must be polynomial
inline PolyLaurent daha_integral(int m) {
  auto a1 = RootSystem::from_name("A1");
  QTLaurent e = nonsym_e(a1, Weight{m}).e_poly.scaled(RatQT(integral_scalar(m)));
  PolyLaurent out;
  for (auto& [w, c] : e.terms()) {
    if (!c.is_polynomial()) throw std::domain_error("product scalar leaves a denominator at " + w.to_string());
    out.add_term(w, c.num());
  }
  return out;
}

struct ValidationLine {
  std::string what;
  bool pass;
  std::string detail;
};

struct Validation {
  std::vector<ValidationLine> lines;
  bool pass() const {
    return std::all_of(lines.begin(), lines.end(), [](auto& l) { return l.pass; });
  }
};

inline Validation cross_validate(int K, const std::vector<std::vector<Rational>>& tuples = {}) {
  Validation v;
  auto a1 = RootSystem::from_name("A1");
  TwistRule rule = twist_cocycle();
  Macdonald mac(a1);
  EigenSolver& y = mac.default_solver();
  for (int k = 0; k <= K; ++k) {
    std::string tag = "k=" + std::to_string(k) + ": ";
    PolyLaurent rec = recursion_e(-k, rule);
    PolyLaurent daha = daha_integral(-k);
    std::vector<PolyLaurent> chars;
    if (k == 0) {
      chars.push_back(PolyLaurent::mono(Weight{0}, QTPoly(1)));
    } else {
      auto ts = tuples;
      if (ts.empty()) ts = {default_alphas(k, 1), default_alphas(k, -1)};
      for (auto& t : ts) {
        std::vector<Rational> a(t.begin(), t.begin() + std::min<std::ptrdiff_t>(k, std::ptrdiff_t(t.size())));
        if (int(a.size()) < k) throw std::invalid_argument("deformation tuple too short");
        chars.push_back(graded_character(fusion(a)));
      }
    }
    v.lines.push_back({tag + "fusion character equals recursion", chars[0] == rec, ""});
    v.lines.push_back({tag + "recursion equals eigen-solve", rec == daha, ""});
    PolyLaurent minimal = mac.integral(Weight{-k});
    v.lines.push_back({tag + "recursion is proportional to the minimal integral form",
                       rec.scaled(minimal.coefficient(Weight{-k})) == minimal.scaled(rec.coefficient(Weight{-k})),
                       ""});
    bool indep = std::all_of(chars.begin(), chars.end(), [&](auto& c) { return c == chars[0]; });
    v.lines.push_back({tag + "character independent of deformation parameters", indep, ""});
    Int expect = 1;
    for (int i = 0; i < k; ++i) expect *= 4;
    Int d1 = specialize_dim(chars[0]), d2 = specialize_dim(rec), d3 = specialize_dim(daha);
    v.lines.push_back({tag + "dimension 4^k", d1 == expect && d2 == expect && d3 == expect,
                       d1.get_str() + "/" + d2.get_str() + "/" + d3.get_str()});
    for (int m : {-k, k + 1}) {
      auto e = mac.integral(Weight{m});
      auto chk = eigen_check(y, e, Weight{m});
      int want_q = m <= 0 ? k : -(k + 1);
      int want_t = m <= 0 ? 2 : 0;
      bool ok = chk.pass && chk.observed && chk.observed->q == want_q && chk.observed->t == want_t;
      std::string obs = chk.observed ? "q^" + std::to_string(chk.observed->q) + " t^" + std::to_string(chk.observed->t)
                                     : chk.message;
      v.lines.push_back({tag + "eigenvalue on E_" + std::to_string(m), ok, obs});
    }
  }
  return v;
}

}  // namespace daha::sl2
