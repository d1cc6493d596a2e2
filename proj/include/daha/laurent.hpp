// Finite sums of e^lambda with coefficients in Z[q^+-1, t^+-1] or Q(q, t).
#pragma once

#include <map>

#include "ratqt.hpp"
#include "root_system.hpp"

namespace daha {

template <class C>
class Laurent {
 public:
  using Coeff = C;
  using Map = std::map<Weight, C>;

  Laurent() = default;
  static Laurent mono(const Weight& l, C c = C(1)) {
    Laurent f;
    f.add_term(l, std::move(c));
    return f;
  }
  static Laurent one(std::size_t rank) { return mono(Weight::zero(rank)); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool contains(const Weight& l) const { return terms_.count(l) > 0; }
  C coefficient(const Weight& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? C() : it->second;
  }

  void add_term(const Weight& l, C c) {
    if (c.is_zero()) return;
    auto it = terms_.find(l);
    if (it == terms_.end()) {
      terms_.emplace(l, std::move(c));
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [l, c] : o.terms_) add_term(l, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto& [l, c] : o.terms_) add_term(l, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const {
    Laurent r;
    for (auto& [l, c] : terms_) r.terms_.emplace(l, -c);
    return r;
  }

  Laurent scaled(const C& k) const {
    Laurent r;
    if (k.is_zero()) return r;
    for (auto& [l, c] : terms_) r.add_term(l, c * k);
    return r;
  }
  // multiply every coefficient by q^dq t^dt
  Laurent shifted(int dq, int dt) const {
    Laurent r;
    for (auto& [l, c] : terms_) r.terms_.emplace(l, c.shifted(dq, dt));
    return r;
  }
  Laurent translated(const Weight& by) const {
    Laurent r;
    for (auto& [l, c] : terms_) r.terms_.emplace(l + by, c);
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [l1, c1] : a.terms_)
      for (auto& [l2, c2] : b.terms_) r.add_term(l1 + l2, c1 * c2);
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  template <class F>
  auto map_coefficients(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    Laurent<D> r;
    for (auto& [l, c] : terms_) r.add_term(l, f(c));
    return r;
  }

 private:
  Map terms_;
};

using QTLaurent = Laurent<RatQT>;
using PolyLaurent = Laurent<QTPoly>;

inline QTLaurent to_rational(const PolyLaurent& f) {
  return f.map_coefficients([](const QTPoly& p) { return RatQT(p); });
}

// sum of e^mu over the Weyl orbit of a dominant weight
inline QTLaurent orbit_sum(const RootSystem& rs, const Weight& l) {
  if (l.size() != rs.rank()) throw std::invalid_argument("weight has wrong length");
  if (!rs.is_dominant(l)) throw std::invalid_argument("orbit_sum needs a dominant weight");
  QTLaurent f;
  for (auto& m : rs.orbit(l)) f.add_term(m, RatQT(1));
  return f;
}

inline QTPoly lcm(const QTPoly& a, const QTPoly& b) {
  QTPoly g = gcd(a, b);
  return *divide_exact(a, g) * b;
}

// Strip the joint integer content and monomial factor of a polynomial-coefficient
// element and fix the sign so the coefficient at `leading` is 1 at q=t=0.
inline PolyLaurent normalize_integral(const PolyLaurent& f, const Weight& leading) {
  if (!f.contains(leading)) throw std::invalid_argument("leading weight is not in the support");
  Int content = 0;
  Monomial lo{1 << 30, 1 << 30};
  for (auto& [l, p] : f.terms()) {
    Int k = p.content();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), k.get_mpz_t());
    Monomial m = p.min_exponents();
    lo.q = std::min(lo.q, m.q);
    lo.t = std::min(lo.t, m.t);
  }
  PolyLaurent out;
  for (auto& [l, p] : f.terms()) out.add_term(l, p.divided_by(content).shifted(-lo.q, -lo.t));
  Int v = out.coefficient(leading).constant_term();
  if (v == -1) return -out;
  if (v != 1)
    throw std::domain_error("no integral normalization with unit leading value (leading coefficient " +
                            out.coefficient(leading).to_string() + ")");
  return out;
}

// Rescale f so that all coefficients are polynomials with no negative
// exponents, joint content 1, and the coefficient at `leading` is 1 at q=t=0.
inline PolyLaurent integral_form_poly(const QTLaurent& f, const Weight& leading) {
  if (!f.contains(leading)) throw std::invalid_argument("leading weight is not in the support");
  QTPoly L = 1;
  for (auto& [l, c] : f.terms())
    if (!c.den().is_one()) L = lcm(L, c.den());
  PolyLaurent cleared;
  for (auto& [l, c] : f.terms()) cleared.add_term(l, *divide_exact(L, c.den()) * c.num());
  return normalize_integral(cleared, leading);
}

inline QTLaurent integral_form(const QTLaurent& f, const Weight& leading) {
  return to_rational(integral_form_poly(f, leading));
}

// every e^lambda -> 1, q -> 1, t -> -1
inline Int specialize_dim(const QTLaurent& f) {
  Int s = 0;
  for (auto& [l, c] : f.terms()) {
    if (!c.is_polynomial()) throw std::domain_error("specialize_dim needs polynomial coefficients");
    s += c.num().eval(1, -1).get_num();
  }
  return s;
}

inline Int specialize_dim(const PolyLaurent& f) {
  Int s = 0;
  for (auto& [l, c] : f.terms()) s += c.eval(1, -1).get_num();
  return s;
}

}  // namespace daha
