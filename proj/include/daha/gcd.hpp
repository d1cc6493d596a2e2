// Polynomial gcd over Z[q,t].
//
// The fast route is the heuristic gcd: evaluate q at a large integer, take the
// univariate gcd in Z[t] (itself heuristic over integers), lift back by
// balanced radix expansion and confirm by trial division. A primitive
// pseudo-remainder sequence in Z[q][t] is the fallback and the test oracle.
#pragma once

#include "qtpoly.hpp"

namespace daha {

namespace detail {

// dense univariate polynomial, index = degree, no trailing zeros
using UPoly = std::vector<Int>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int deg(const UPoly& p) { return int(p.size()) - 1; }

inline Int content(const UPoly& p) {
  Int g = 0;
  for (auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline UPoly div_int(UPoly p, const Int& k) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  return p;
}

inline Int max_norm(const UPoly& p) {
  Int m = 0;
  for (auto& c : p)
    if (abs(c) > m) m = abs(c);
  return m;
}

inline Int eval(const UPoly& p, const Int& x) {
  Int s = 0;
  for (int i = deg(p); i >= 0; --i) s = s * x + p[i];
  return s;
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  trim(r);
  return r;
}

inline std::optional<UPoly> exact_div(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return UPoly{};
  if (deg(a) < deg(b)) return std::nullopt;
  UPoly q(a.size() - b.size() + 1);
  const Int& lc = b.back();
  for (int i = deg(a); i >= deg(b); --i) {
    if (a[i] == 0) continue;
    if (!mpz_divisible_p(a[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Int c;
    mpz_divexact(c.get_mpz_t(), a[i].get_mpz_t(), lc.get_mpz_t());
    int k = i - deg(b);
    for (int j = 0; j <= deg(b); ++j) mpz_submul(a[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    q[k] = std::move(c);
  }
  for (int i = 0; i < deg(b); ++i)
    if (a[i] != 0) return std::nullopt;
  trim(q);
  return q;
}

// balanced base-x digits of n
inline UPoly radix_lift(Int n, const Int& x) {
  UPoly out;
  Int half = x / 2;
  while (n != 0) {
    Int d;
    mpz_fdiv_r(d.get_mpz_t(), n.get_mpz_t(), x.get_mpz_t());
    if (d > half) d -= x;
    out.push_back(d);
    n -= d;
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), x.get_mpz_t());
  }
  return out;
}

inline UPoly normalize_sign(UPoly p) {
  if (!p.empty() && p.back() < 0)
    for (auto& c : p) c = -c;
  return p;
}

inline UPoly primitive(const UPoly& p) {
  if (p.empty()) return p;
  return normalize_sign(div_int(p, content(p)));
}

// pseudo-remainder of a by b
inline UPoly prem(UPoly a, const UPoly& b) {
  const Int& lc = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    Int la = a.back();
    int k = deg(a) - deg(b);
    for (auto& c : a) c *= lc;
    for (int j = 0; j <= deg(b); ++j) mpz_submul(a[k + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
    trim(a);
  }
  return a;
}

inline UPoly gcd_prs(UPoly a, UPoly b) {
  if (a.empty()) return normalize_sign(b);
  if (b.empty()) return normalize_sign(a);
  Int c;
  Int ca = content(a), cb = content(b);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  UPoly g = primitive(a);
  for (auto& x : g) x *= c;
  return g;
}

// gcd in Z[x] including the integer content, positive leading coefficient
inline UPoly gcd_upoly(const UPoly& a, const UPoly& b) {
  if (a.empty()) return normalize_sign(b);
  if (b.empty()) return normalize_sign(a);
  Int ca = content(a), cb = content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (deg(a) == 0 || deg(b) == 0) return UPoly{c};
  UPoly pa = div_int(a, ca), pb = div_int(b, cb);
  if (normalize_sign(pa) == normalize_sign(pb)) {
    UPoly g = normalize_sign(pa);
    for (auto& x : g) x *= c;
    return g;
  }
  Int xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Int va = eval(pa, xi), vb = eval(pb, xi), g;
    if (va != 0 && vb != 0) {
      mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
      UPoly cand = primitive(radix_lift(g, xi));
      if (!cand.empty() && exact_div(pa, cand) && exact_div(pb, cand)) {
        for (auto& x : cand) x *= c;
        return cand;
      }
    }
    xi = xi * 73794 / 27011;
  }
  return gcd_prs(a, b);
}

// ---- bivariate helpers; inputs have nonnegative exponents ----

// coefficients in t of p(xi, t)
inline UPoly eval_q(const QTPoly& p, const Int& xi) {
  int dt = p.max_exponents().t;
  UPoly out(dt + 1);
  // terms are sorted by q then t; Horner per t-slice
  std::vector<std::vector<const Term*>> slices(dt + 1);
  for (auto& x : p.terms()) slices[x.e.t].push_back(&x);
  for (int j = 0; j <= dt; ++j) {
    Int s = 0;
    int cur = slices[j].empty() ? 0 : slices[j].back()->e.q;
    for (auto it = slices[j].rbegin(); it != slices[j].rend(); ++it) {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(cur - (*it)->e.q));
      s = s * pw + (*it)->c;
      cur = (*it)->e.q;
    }
    if (cur > 0) {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(cur));
      s *= pw;
    }
    out[j] = s;
  }
  trim(out);
  return out;
}

inline QTPoly primitive_poly(const QTPoly& p) {
  if (p.is_zero()) return p;
  QTPoly r = p.divided_by(p.content());
  if (r.highest().c < 0) r = -r;
  return r;
}

// Z[q][t] view: index = t-degree
using BPoly = std::vector<UPoly>;

inline BPoly to_bpoly(const QTPoly& p) {
  BPoly out(p.max_exponents().t + 1);
  for (auto& x : p.terms()) {
    auto& u = out[x.e.t];
    if (int(u.size()) <= x.e.q) u.resize(x.e.q + 1);
    u[x.e.q] = x.c;
  }
  return out;
}

inline QTPoly from_bpoly(const BPoly& b) {
  std::vector<Term> ts;
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < b[j].size(); ++i)
      if (b[j][i] != 0) ts.push_back({{int(i), int(j)}, b[j][i]});
  return QTPoly::from_terms(std::move(ts));
}

inline void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

inline UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (auto& c : p) {
    g = gcd_upoly(g, c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

inline BPoly bdiv(const BPoly& p, const UPoly& c) {
  BPoly out;
  for (auto& x : p) out.push_back(x.empty() ? UPoly{} : *exact_div(x, c));
  return out;
}

inline BPoly bprem(BPoly a, const BPoly& b) {
  const UPoly& lc = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    UPoly la = a.back();
    std::size_t k = a.size() - b.size();
    for (auto& c : a) c = mul(c, lc);
    for (std::size_t j = 0; j < b.size(); ++j) {
      UPoly s = mul(la, b[j]);
      auto& tgt = a[k + j];
      if (tgt.size() < s.size()) tgt.resize(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) tgt[i] -= s[i];
      trim(tgt);
    }
    trim(a);
  }
  return a;
}

// primitive PRS in Z[q][t]; inputs nonnegative-exponent polynomials
inline QTPoly gcd_prs(const QTPoly& A, const QTPoly& B) {
  if (A.is_zero()) return primitive_poly(B).scaled(B.content());
  if (B.is_zero()) return primitive_poly(A).scaled(A.content());
  BPoly a = to_bpoly(A), b = to_bpoly(B);
  UPoly ca = bcontent(a), cb = bcontent(b);
  UPoly cg = gcd_upoly(ca, cb);
  a = bdiv(a, ca);
  b = bdiv(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    BPoly r = bprem(a, b);
    a = std::move(b);
    trim(r);
    b = r.empty() ? r : bdiv(r, bcontent(r));
  }
  a = bdiv(a, bcontent(a));
  BPoly g;
  for (auto& x : a) g.push_back(mul(x, cg));
  QTPoly res = from_bpoly(g);
  if (!res.is_zero() && res.highest().c < 0) res = -res;
  return res;
}

// both inputs primitive, nonnegative exponents, non-constant
inline QTPoly gcd_heuristic(const QTPoly& A, const QTPoly& B) {
  Int xi = 2 * std::min(A.max_norm(), B.max_norm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    UPoly ea = eval_q(A, xi), eb = eval_q(B, xi);
    if (!ea.empty() && !eb.empty()) {
      UPoly g = gcd_upoly(ea, eb);
      std::vector<Term> ts;
      for (std::size_t j = 0; j < g.size(); ++j) {
        UPoly digits = radix_lift(g[j], xi);
        for (std::size_t i = 0; i < digits.size(); ++i)
          if (digits[i] != 0) ts.push_back({{int(i), int(j)}, digits[i]});
      }
      QTPoly cand = primitive_poly(QTPoly::from_terms(std::move(ts)));
      if (!cand.is_zero() && divide_exact(A, cand) && divide_exact(B, cand)) return cand;
    }
    xi = xi * 73794 / 27011;
  }
  return gcd_prs(A, B);
}

}  // namespace detail

// gcd in Z[q,t] of Laurent polynomials, taken after clearing monomial factors;
// positive highest coefficient. gcd(0, 0) = 0.
inline QTPoly gcd(const QTPoly& a, const QTPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return detail::primitive_poly(b.shifted(Monomial{} - b.min_exponents())).scaled(b.content());
  if (b.is_zero()) return detail::primitive_poly(a.shifted(Monomial{} - a.min_exponents())).scaled(a.content());
  QTPoly A = a.shifted(Monomial{} - a.min_exponents());
  QTPoly B = b.shifted(Monomial{} - b.min_exponents());
  Int ca = A.content(), cb = B.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (A.is_constant() || B.is_constant()) return QTPoly(c);
  A = detail::primitive_poly(A);
  B = detail::primitive_poly(B);
  if (A == B) return A.scaled(c);
  if (A.size() <= B.size()) {
    if (divide_exact(B, A)) return A.scaled(c);
  } else if (divide_exact(A, B)) {
    return B.scaled(c);
  }
  return detail::gcd_heuristic(A, B).scaled(c);
}

// the fallback route on its own, for cross-checking
inline QTPoly gcd_reference(const QTPoly& a, const QTPoly& b) {
  if (a.is_zero() || b.is_zero()) return gcd(a, b);
  QTPoly A = a.shifted(Monomial{} - a.min_exponents());
  QTPoly B = b.shifted(Monomial{} - b.min_exponents());
  return detail::gcd_prs(A, B);
}

}  // namespace daha
