// Exhaustive relation and property checks on boxes of monomials.
#pragma once

#include "hecke.hpp"

namespace daha::verify {

struct Check {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failure

  void fail(std::string what) {
    if (pass) counterexample = std::move(what);
    pass = false;
  }
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.pass; });
  }
};

struct Options {
  int bound = 3;
  bool affine = false;  // include i = 0 where it applies
};

inline std::vector<Weight> box(std::size_t rank, int b) {
  std::vector<Weight> out;
  std::vector<int> c(rank, -b);
  for (;;) {
    out.push_back(Weight(c));
    std::size_t i = 0;
    while (i < rank && c[i] == b) c[i++] = -b;
    if (i == rank) break;
    ++c[i];
  }
  return out;
}

inline std::vector<int> generator_indices(const RootSystem& rs, bool affine) {
  std::vector<int> out;
  if (affine && rs.has_affine_node()) out.push_back(0);
  for (int i = 1; i <= int(rs.rank()); ++i) out.push_back(i);
  return out;
}

namespace detail {

inline PolyLaurent mono(const Weight& w) { return PolyLaurent::mono(w, QTPoly(1)); }

inline std::string on(const Weight& w) { return "e^(" + w.to_string() + ")"; }

}  // namespace detail

// (T_i + 1)(T_i - t) = 0
inline Report hecke(const RootSystem& rs, const Options& o) {
  Report r{"hecke", {}};
  auto gens = generator_indices(rs, o.affine);
  auto monos = box(rs.rank(), o.bound);
  Check c{"quadratic"};
  for (int i : gens)
    for (auto& mu : monos) {
      PolyLaurent f = detail::mono(mu);
      PolyLaurent g = dl_op(rs, i, f) - f.shifted(0, 1);
      ++c.cases;
      if (!(dl_op(rs, i, g) + g).is_zero()) c.fail("T_" + std::to_string(i) + " on " + detail::on(mu));
    }
  c.name = "quadratic: " + std::to_string(gens.size()) + " generators × " + std::to_string(monos.size()) + " monomials";
  r.checks.push_back(c);
  return r;
}

// T_i T_j T_i ... = T_j T_i T_j ... with m_ij factors each
inline Report braid(const RootSystem& rs, const Options& o) {
  Report r{"braid", {}};
  auto gens = generator_indices(rs, o.affine);
  auto monos = box(rs.rank(), o.bound);
  Check c{"braid"};
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      int i = gens[a], j = gens[b];
      int m = rs.braid_order(i, j);
      if (m == 0) continue;
      ++pairs;
      WeylWord u, v;
      for (int k = 0; k < m; ++k) {
        u.letters.push_back(k % 2 ? j : i);
        v.letters.push_back(k % 2 ? i : j);
      }
      for (auto& mu : monos) {
        ++c.cases;
        if (!(word_op(rs, u, detail::mono(mu)) == word_op(rs, v, detail::mono(mu))))
          c.fail(u.to_string() + " vs " + v.to_string() + " on " + detail::on(mu));
      }
    }
  c.name = "braid: " + std::to_string(pairs) + " pairs × " + std::to_string(monos.size()) + " monomials";
  r.checks.push_back(c);
  return r;
}

// X^lambda T_i = T_i X^lambda when <alpha_i^vee, lambda> = 0 and
// X^lambda T_i = t T_i^{-1} X^{lambda - alpha_i} when it is 1
inline Report xcommute(const RootSystem& rs, const Options& o) {
  Report r{"xcommute", {}};
  auto gens = generator_indices(rs, o.affine);
  auto monos = box(rs.rank(), o.bound);
  Check c0{"pairing 0"}, c1{"pairing 1"};
  for (int i : gens) {
    Weight fin = i == 0 ? -rs.theta() : rs.simple_root(std::size_t(i - 1));
    int qa = i == 0 ? 1 : 0;  // e^{alpha_0} = q e^{-theta}
    for (auto& l : monos) {
      int p = rs.coroot_pairing(i, l);
      if (p != 0 && p != 1) continue;
      for (auto& mu : monos) {
        PolyLaurent f = detail::mono(mu);
        PolyLaurent lhs = dl_op(rs, i, f).translated(l);
        std::string where = "i=" + std::to_string(i) + ", lambda=" + l.to_string() + ", " + detail::on(mu);
        if (p == 0) {
          ++c0.cases;
          if (!(lhs == dl_op(rs, i, f.translated(l)))) c0.fail(where);
        } else {
          ++c1.cases;
          PolyLaurent g = f.translated(l - fin).shifted(-qa, 0);
          if (!(lhs == dl_inv(rs, i, g).shifted(0, 1))) c1.fail(where);
        }
      }
    }
  }
  r.checks.push_back(c0);
  r.checks.push_back(c1);
  return r;
}

// T_i P = P T_i = t P, W-invariance, support, m_mu-linearity
inline Report symmetrizer_suite(const RootSystem& rs, const Options& o) {
  Report r{"symmetrizer", {}};
  auto monos = box(rs.rank(), o.bound);
  Check left{"T_i P = t P"}, right{"P T_i = t P"}, inv{"W-invariant"}, hull{"support in orbit hull"},
      lin{"P(m_mu f) = m_mu P(f)"};
  std::vector<PolyLaurent> ms;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    Weight w = Weight::zero(rs.rank());
    w.coords[i] = 1;
    PolyLaurent m;
    for (auto& v : rs.orbit(w)) m.add_term(v, QTPoly(1));
    ms.push_back(m);
  }
  for (auto& mu : monos) {
    PolyLaurent f = detail::mono(mu);
    PolyLaurent p = symmetrizer(rs, f);
    std::string where = detail::on(mu);
    Weight top = rs.dominant(mu).first;
    for (int i = 1; i <= int(rs.rank()); ++i) {
      ++left.cases;
      ++right.cases;
      ++inv.cases;
      if (!(dl_op(rs, i, p) == p.shifted(0, 1))) left.fail("i=" + std::to_string(i) + ", " + where);
      if (!(symmetrizer(rs, dl_op(rs, i, f)) == p.shifted(0, 1))) right.fail("i=" + std::to_string(i) + ", " + where);
      for (auto& [w, c] : p.terms())
        if (!(p.coefficient(rs.reflect(i, w)) == c)) {
          inv.fail("i=" + std::to_string(i) + ", " + where);
          break;
        }
    }
    ++hull.cases;
    for (auto& [w, c] : p.terms())
      if (!rs.dominance_geq(top, rs.dominant(w).first)) {
        hull.fail(where + " has " + w.to_string());
        break;
      }
    for (auto& m : ms) {
      ++lin.cases;
      if (!(symmetrizer(rs, m * f) == m * p)) lin.fail(where);
    }
  }
  r.checks = {left, right, inv, hull, lin};
  return r;
}

// partial-order axioms and the three convexity clauses
inline Report order(const RootSystem& rs, const Options& o) {
  Report r{"order", {}};
  auto ws = box(rs.rank(), o.bound);
  const std::size_t n = ws.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = rs.cherednik_leq(ws[a], ws[b]);
  Check anti{"antisymmetry"}, trans{"transitivity"};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++anti.cases;
      if (a != b && leq[a][b] && leq[b][a]) anti.fail(ws[a].to_string() + " and " + ws[b].to_string());
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        ++trans.cases;
        if (leq[b][c] && !leq[a][c]) trans.fail(ws[a].to_string() + ", " + ws[b].to_string() + ", " + ws[c].to_string());
      }
    }
  r.checks = {anti, trans};

  auto gens = generator_indices(rs, rs.has_affine_node());
  for (int i : gens) {
    Weight fin = i == 0 ? -rs.theta() : rs.simple_root(std::size_t(i - 1));
    auto is = std::to_string(i);
    Check c1{"clause 1 (strings), i=" + is}, c2{"clause 2 (s_i lambda above), i=" + is},
        c3{"clause 3 (s_i lambda below), i=" + is};
    for (auto& l : ws) {
      auto lower = rs.lower_set(l);
      auto strictly = [&](const Weight& m) { return m != l && rs.cherednik_leq(m, l); };
      for (auto& mu : lower) {
        if (mu == l) continue;
        // longest run mu - m alpha_i staying inside P[< lambda] at both ends
        for (int m = 1; m <= 4 * o.bound + 8; ++m) {
          Weight end = mu - m * fin;
          if (!strictly(end)) continue;
          ++c1.cases;
          for (int c = 1; c < m; ++c)
            if (!strictly(mu - c * fin)) {
              c1.fail("lambda=" + l.to_string() + ", mu=" + mu.to_string() + ", m=" + std::to_string(m));
              break;
            }
        }
      }
      Weight sl = rs.level_one_reflect(i, l);
      if (rs.cherednik_leq(l, sl)) {
        ++c2.cases;
        for (auto& mu : lower)
          if (!rs.cherednik_leq(rs.level_one_reflect(i, mu), sl)) {
            c2.fail("lambda=" + l.to_string() + ", mu=" + mu.to_string());
            break;
          }
      }
      if (rs.cherednik_leq(sl, l)) {
        ++c3.cases;
        for (auto& mu : lower) {
          Weight smu = rs.level_one_reflect(i, mu);
          if (!rs.cherednik_leq(smu, l)) {
            c3.fail("lambda=" + l.to_string() + ", s_" + is + "(" + mu.to_string() + ")=" + smu.to_string());
            break;
          }
        }
      }
    }
    r.checks.push_back(c1);
    r.checks.push_back(c2);
    r.checks.push_back(c3);
  }
  return r;
}

// word independence of (T_i1 + 1)...(T_ik + 1) e^lambda and D_i^2 = (1+t) D_i
inline Report demazure(const RootSystem& rs, const Options& o) {
  Report r{"demazure", {}};
  Check words{"reduced-word independence"}, bruhat{"Bruhat-sum independence"}, sq{"D_i^2 = (1+t) D_i"};
  std::vector<Weight> dom;
  for (auto& l : box(rs.rank(), o.bound))
    if (rs.is_dominant(l)) dom.push_back(l);
  for (auto& g : rs.weyl_group()) {
    auto rws = rs.reduced_words(g.word);
    for (auto& l : dom) {
      ++words.cases;
      ++bruhat.cases;
      auto ref = demazure_char(rs, rws.front(), l);
      auto bref = bruhat_demazure_char(rs, rws.front(), l);
      for (std::size_t k = 1; k < rws.size(); ++k) {
        if (!(demazure_char(rs, rws[k], l) == ref))
          words.fail(rws.front().to_string() + " vs " + rws[k].to_string() + " on " + detail::on(l));
        if (!(bruhat_demazure_char(rs, rws[k], l) == bref))
          bruhat.fail(rws.front().to_string() + " vs " + rws[k].to_string() + " on " + detail::on(l));
      }
    }
  }
  for (int i = 1; i <= int(rs.rank()); ++i)
    for (auto& mu : box(rs.rank(), o.bound)) {
      ++sq.cases;
      PolyLaurent f = detail::mono(mu);
      PolyLaurent d = dl_op(rs, i, f) + f;
      PolyLaurent dd = dl_op(rs, i, d) + d;
      if (!(dd == d.scaled(QTPoly(1) + QTPoly::t()))) sq.fail("i=" + std::to_string(i) + ", " + detail::on(mu));
    }
  r.checks = {words, bruhat, sq};
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hecke", "braid", "xcommute", "symmetrizer", "order", "demazure"};
  return names;
}

inline Report run(const std::string& suite, const RootSystem& rs, const Options& o) {
  if (suite == "hecke") return hecke(rs, o);
  if (suite == "braid") return braid(rs, o);
  if (suite == "xcommute") return xcommute(rs, o);
  if (suite == "symmetrizer") return symmetrizer_suite(rs, o);
  if (suite == "order") return order(rs, o);
  if (suite == "demazure") return demazure(rs, o);
  throw std::invalid_argument("unknown suite " + suite);
}

inline std::string format(const Check& c) {
  std::string s = std::string(c.pass ? "PASS" : "FAIL") + " (" + c.name + ")";
  if (!c.pass) s += ": " + c.counterexample;
  return s;
}

}  // namespace daha::verify
