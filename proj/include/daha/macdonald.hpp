// Nonsymmetric Macdonald polynomials as triangular Y-eigenvectors.
#pragma once

#include <memory>
#include <numeric>

#include "hecke.hpp"

namespace daha {

struct EigenResult {
  QTLaurent e_poly;
  RatQT eigenvalue;
  std::vector<Weight> basis;
  bool conjectural = false;  // lambda not dominant
};

namespace detail {

// Phi_d(x) as a polynomial in q
inline QTPoly cyclotomic(int d) {
  QTPoly p = QTPoly::q(d) - QTPoly(1);
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = *divide_exact(p, cyclotomic(e));
  return p;
}

// Phi_d(q^a t^b), shifted to have no negative exponents; irreducible when
// gcd(a, b) = 1
struct CycloKey {
  int d, a, b;
  auto operator<=>(const CycloKey&) const = default;
};

inline QTPoly cyclo_poly(const CycloKey& k) {
  std::vector<Term> ts;
  QTPoly c = cyclotomic(k.d);
  for (auto& x : c.terms()) ts.push_back({{x.e.q * k.a, x.e.q * k.b}, x.c});
  QTPoly p = QTPoly::from_terms(std::move(ts));
  return p.shifted(Monomial{} - p.min_exponents());
}

// product of irreducible factors with multiplicity
using Denominator = std::map<CycloKey, int>;

struct Fraction {
  QTPoly num;
  Denominator den;
};

}  // namespace detail

// Y^mu acting on span(P[<= lambda]); caches the images of monomials.
class EigenSolver {
 public:
  explicit EigenSolver(const RootSystem& rs) : EigenSolver(rs, rs.default_mu_star()) {}
  EigenSolver(const RootSystem& rs, std::vector<int> mu) : rs_(rs), mu_(std::move(mu)) {
    if (!rs_.has_affine_node()) throw std::invalid_argument("Y-operators need an irreducible root system");
    auto cw = rs_.coweight_coordinates(mu_);
    if (std::any_of(cw.begin(), cw.end(), [](int x) { return x < 1; }))
      throw std::invalid_argument("eigen solve needs a strictly dominant mu");
  }

  const RootSystem& root_system() const { return rs_; }
  const std::vector<int>& mu() const { return mu_; }

  const PolyLaurent& column(const Weight& k) {
    auto it = cols_.find(k);
    if (it != cols_.end()) return it->second;
    return cols_.emplace(k, y_op(rs_, mu_, PolyLaurent::mono(k))).first->second;
  }

  // Y^mu f by linearity over the cached monomial images
  PolyLaurent apply(const PolyLaurent& f) {
    PolyLaurent out;
    for (auto& [w, c] : f.terms())
      for (auto& [v, d] : column(w).terms()) out.add_term(v, c * d);
    return out;
  }

  struct Solution {
    std::vector<Weight> basis;
    QTPoly eigenvalue;
    std::map<Weight, detail::Fraction> coeffs;
  };

  Solution solve(const Weight& l) {
    Solution s;
    s.basis = rs_.lower_set(l);
    std::map<Weight, std::size_t> pos;
    for (std::size_t k = 0; k < s.basis.size(); ++k) pos[s.basis[k]] = k;
    const std::size_t n = s.basis.size();
    if (s.basis.back() != l) throw std::logic_error("order violation: lambda is not the top of its lower set");

    // rows[nu] = list of (kappa, M[nu, kappa]) with kappa above nu
    std::vector<std::vector<std::pair<std::size_t, QTPoly>>> rows(n);
    std::vector<QTPoly> diag(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (auto& [v, c] : column(s.basis[k]).terms()) {
        auto it = pos.find(v);
        if (it == pos.end() || !rs_.cherednik_leq(v, s.basis[k]))
          throw std::domain_error("order violation: Y e^" + s.basis[k].to_string() + " has a term at " +
                                  v.to_string());
        if (it->second == k)
          diag[k] = c;
        else
          rows[it->second].push_back({k, c});
      }
      if (!diag[k].is_monomial() || diag[k].lowest().c != 1)
        throw std::domain_error("non-monomial diagonal entry at " + s.basis[k].to_string());
    }
    const QTPoly& y = diag[n - 1];
    s.eigenvalue = y;

    std::vector<detail::Fraction> v(n);
    v[n - 1].num = QTPoly(1);
    for (std::size_t idx = n - 1; idx-- > 0;) {
      if (diag[idx] == y)
        throw std::domain_error("degenerate spectrum: " + s.basis[idx].to_string() + " and " + l.to_string());
      detail::Denominator den;
      for (auto& [k, c] : rows[idx])
        for (auto& [f, m] : v[k].den) den[f] = std::max(den[f], m);
      QTPoly sum;
      for (auto& [k, c] : rows[idx]) {
        if (v[k].num.is_zero()) continue;
        QTPoly term = v[k].num * c;
        for (auto& [f, m] : den) {
          auto it = v[k].den.find(f);
          int extra = m - (it == v[k].den.end() ? 0 : it->second);
          for (int j = 0; j < extra; ++j) term = term * poly(f);
        }
        sum += term;
      }
      if (sum.is_zero()) continue;
      // divide by y - diag = unit * prod Phi_d(s)
      QTPoly gap = y - diag[idx];
      Monomial e = diag[idx].lowest().e - y.lowest().e;
      int g = std::gcd(std::abs(e.q), std::abs(e.t));
      int a = e.q / g, b = e.t / g;
      if (a < 0 || (a == 0 && b < 0)) a = -a, b = -b;
      QTPoly prod(1);
      for (int d = 1; d <= g; ++d)
        if (g % d == 0) {
          detail::CycloKey key{d, a, b};
          ++den[key];
          prod = prod * poly(key);
        }
      auto unit = divide_exact(gap, prod);
      if (!unit || !unit->is_monomial()) throw std::logic_error("eigenvalue gap does not factor");
      sum = *divide_exact(sum, *unit);
      for (auto it = den.begin(); it != den.end();) {
        while (it->second > 0) {
          auto qt = divide_exact(sum, poly(it->first));
          if (!qt) break;
          sum = std::move(*qt);
          --it->second;
        }
        it = it->second == 0 ? den.erase(it) : std::next(it);
      }
      v[idx] = {std::move(sum), std::move(den)};
    }
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].num.is_zero()) s.coeffs.emplace(s.basis[k], std::move(v[k]));
    return s;
  }

  EigenResult eigen(const Weight& l) {
    Solution s = solve(l);
    EigenResult r;
    for (auto& [w, f] : s.coeffs) {
      QTPoly d(1);
      for (auto& [key, m] : f.den)
        for (int j = 0; j < m; ++j) d = d * poly(key);
      r.e_poly.add_term(w, RatQT::from_coprime(f.num, d));
    }
    r.eigenvalue = RatQT(s.eigenvalue);
    r.basis = std::move(s.basis);
    r.conjectural = !rs_.is_dominant(l);
    return r;
  }

  PolyLaurent integral(const Weight& l) {
    Solution s = solve(l);
    detail::Denominator all;
    for (auto& [w, f] : s.coeffs)
      for (auto& [key, m] : f.den) all[key] = std::max(all[key], m);
    PolyLaurent out;
    for (auto& [w, f] : s.coeffs) {
      QTPoly c = f.num;
      for (auto& [key, m] : all) {
        auto it = f.den.find(key);
        int extra = m - (it == f.den.end() ? 0 : it->second);
        for (int j = 0; j < extra; ++j) c = c * poly(key);
      }
      out.add_term(w, std::move(c));
    }
    return normalize_integral(out, l);
  }

 private:
  const RootSystem& rs_;
  std::vector<int> mu_;
  std::map<Weight, PolyLaurent> cols_;
  std::map<detail::CycloKey, QTPoly> polys_;

  const QTPoly& poly(const detail::CycloKey& k) {
    auto it = polys_.find(k);
    if (it != polys_.end()) return it->second;
    return polys_.emplace(k, detail::cyclo_poly(k)).first->second;
  }
};

// Solves with the default mu* and, if its spectrum on P[<= lambda] is
// degenerate, with the next strictly dominant coroots in turn; any separating
// Y^mu gives the same joint eigenvector.
class Macdonald {
 public:
  static constexpr std::size_t max_attempts = 12;

  explicit Macdonald(const RootSystem& rs) : rs_(rs) {}

  const RootSystem& root_system() const { return rs_; }
  EigenSolver& solver(const std::vector<int>& mu) {
    auto it = solvers_.find(mu);
    if (it == solvers_.end()) it = solvers_.emplace(mu, std::make_unique<EigenSolver>(rs_, mu)).first;
    return *it->second;
  }
  EigenSolver& default_solver() { return solver(rs_.default_mu_star()); }

 private:
  const RootSystem& rs_;
  std::map<std::vector<int>, std::unique_ptr<EigenSolver>> solvers_;

  template <class F>
  auto attempt(const Weight& l, F&& f) {
    if (!rs_.has_affine_node()) throw std::invalid_argument("Y-operators need an irreducible root system");
    std::string first;
    for (auto& mu : rs_.strictly_dominant_coroots(max_attempts)) {
      try {
        return f(solver(mu));
      } catch (const std::domain_error& e) {
        if (std::string(e.what()).rfind("degenerate spectrum", 0) != 0) throw;
        if (first.empty()) first = e.what();
      }
    }
    throw std::domain_error(first + " (no separating mu among the first " + std::to_string(max_attempts) + ")");
  }

 public:
  EigenResult eigen(const Weight& l) {
    return attempt(l, [&](EigenSolver& s) { return s.eigen(l); });
  }
  PolyLaurent integral(const Weight& l) {
    return attempt(l, [&](EigenSolver& s) { return s.integral(l); });
  }
};

inline EigenResult nonsym_e(const RootSystem& rs, const Weight& l) { return Macdonald(rs).eigen(l); }

inline PolyLaurent nonsym_e_integral(const RootSystem& rs, const Weight& l) { return Macdonald(rs).integral(l); }

// predicted Y^mu eigenvalue exponents on E_lambda: q^{-<mu,lambda>} and
// t^{(l(t_mu) + <u_lambda^{-1}(2 rho), mu>)/2}
struct EigenExponents {
  int q = 0;
  int t2 = 0;  // twice the t-exponent
};

inline EigenExponents predicted_exponents(const RootSystem& rs, const Weight& l, const std::vector<int>& mu) {
  int pair_l = 0, pair_r = 0;
  Weight r = rs.act(rs.antidominant(l).second.reversed(), rs.rho2());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    pair_l += mu[i] * l[i];
    pair_r += mu[i] * r[i];
  }
  int len = rs.length(rs.translation(mu));
  return {-pair_l, len + pair_r};
}

struct EigenCheck {
  bool pass = false;
  EigenExponents predicted;
  std::optional<Monomial> observed;
  std::string message;
};

// compares Y^mu E_lambda with the predicted monomial times E_lambda
inline EigenCheck eigen_check(EigenSolver& solver, const PolyLaurent& e, const Weight& l) {
  EigenCheck r;
  const RootSystem& rs = solver.root_system();
  r.predicted = predicted_exponents(rs, l, solver.mu());
  PolyLaurent ye = solver.apply(e);
  auto ratio = divide_exact(ye.coefficient(l), e.coefficient(l));
  if (ratio && ratio->is_monomial() && ratio->lowest().c == 1) r.observed = ratio->lowest().e;
  if (!r.observed) {
    r.message = "leading coefficient ratio is not a monomial";
    return r;
  }
  if (!(ye == e.scaled(*ratio))) {
    r.message = "not an eigenvector";
    return r;
  }
  if (r.predicted.t2 < 0 || r.predicted.t2 % 2 != 0) {
    r.message = "predicted t-exponent " + std::to_string(r.predicted.t2) + "/2 is not a non-negative integer";
    return r;
  }
  if (r.observed->q != r.predicted.q || r.observed->t != r.predicted.t2 / 2) {
    r.message = "observed q^" + std::to_string(r.observed->q) + " t^" + std::to_string(r.observed->t) +
                ", predicted q^" + std::to_string(r.predicted.q) + " t^" + std::to_string(r.predicted.t2 / 2);
    return r;
  }
  r.pass = true;
  return r;
}

inline EigenCheck eigen_check(const RootSystem& rs, const Weight& l, const std::vector<int>& mu) {
  PolyLaurent e = Macdonald(rs).integral(l);
  EigenSolver other(rs, mu);
  return eigen_check(other, e, l);
}

// coefficients in the orbit-sum basis, largest weight first
inline std::vector<std::pair<Weight, RatQT>> monomial_expand(const RootSystem& rs, const QTLaurent& f) {
  for (auto& [w, c] : f.terms())
    for (int i = 1; i <= int(rs.rank()); ++i)
      if (!(f.coefficient(rs.reflect(i, w)) == c))
        throw std::invalid_argument("monomial_expand needs a W-invariant input");
  std::vector<std::pair<Weight, RatQT>> out;
  for (auto& [w, c] : f.terms())
    if (rs.is_dominant(w)) out.emplace_back(w, c);
  std::reverse(out.begin(), out.end());
  return out;
}

// symmetrization of E_lambda normalized to coefficient 1 at e^lambda
inline QTLaurent sym_p(const RootSystem& rs, const Weight& l) {
  if (!rs.is_dominant(l)) throw std::invalid_argument("sym_p needs a dominant weight");
  PolyLaurent s = symmetrizer(rs, Macdonald(rs).integral(l));
  QTPoly lead = s.coefficient(l);
  if (lead.is_zero()) throw std::logic_error("symmetrization killed the leading term");
  QTLaurent out;
  for (auto& [w, c] : s.terms()) out.add_term(w, RatQT(c, lead));
  return out;
}

}  // namespace daha
