// Reduced rational functions in q and t.
#pragma once

#include "gcd.hpp"

namespace daha {

// num/den with gcd(num, den) a unit, den free of negative exponents and of
// monomial factors, and the lowest term of den (ordered by q then t) positive.
class RatQT {
 public:
  RatQT() : den_(1) {}
  RatQT(long c) : num_(c), den_(1) {}
  RatQT(const Int& c) : num_(c), den_(1) {}
  RatQT(QTPoly p) : num_(std::move(p)), den_(1) {}
  RatQT(QTPoly num, QTPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatQT q(int k = 1) { return RatQT(QTPoly::q(k)); }
  static RatQT t(int k = 1) { return RatQT(QTPoly::t(k)); }
  static RatQT monomial(int dq, int dt) { return RatQT(QTPoly::monomial(1, dq, dt)); }

  // num/den already coprime up to monomials and sign
  static RatQT from_coprime(QTPoly num, QTPoly den) {
    RatQT r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.fix_units();
    return r;
  }

  const QTPoly& num() const { return num_; }
  const QTPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

  friend bool operator==(const RatQT& a, const RatQT& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatQT operator-() const {
    RatQT r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatQT operator+(const RatQT& a, const RatQT& b) { return add(a, b); }
  friend RatQT operator-(const RatQT& a, const RatQT& b) { return add(a, -b); }
  friend RatQT operator*(const RatQT& a, const RatQT& b) { return mul(a, b); }
  friend RatQT operator/(const RatQT& a, const RatQT& b) { return mul(a, b.inverse()); }
  RatQT& operator+=(const RatQT& b) { return *this = add(*this, b); }
  RatQT& operator-=(const RatQT& b) { return *this = add(*this, -b); }
  RatQT& operator*=(const RatQT& b) { return *this = mul(*this, b); }
  RatQT& operator/=(const RatQT& b) { return *this = mul(*this, b.inverse()); }

  RatQT inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return from_coprime(den_, num_);
  }

  RatQT shifted(int dq, int dt) const {
    RatQT r = *this;
    r.num_ = r.num_.shifted(dq, dt);
    return r;
  }

  Rational eval(const Rational& q0, const Rational& t0) const {
    Rational d = den_.eval(q0, t0);
    if (d == 0) throw std::domain_error("pole at evaluation point");
    return num_.eval(q0, t0) / d;
  }

  // specialization t = q, as a rational function of q alone
  RatQT t_to_q() const {
    QTPoly d = den_.t_to_q();
    if (d.is_zero()) throw std::domain_error("pole along t = q");
    return RatQT(num_.t_to_q(), d);
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  QTPoly num_;
  QTPoly den_;

  // monomial part and sign only
  void fix_units() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = QTPoly(1);
      return;
    }
    Monomial m = den_.min_exponents();
    if (m != Monomial{}) {
      den_ = den_.shifted(Monomial{} - m);
      num_ = num_.shifted(Monomial{} - m);
    }
    if (den_.is_constant()) {
      Int d = den_.lowest().c, c = num_.content(), g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
      if (d < 0) g = -g;
      if (g != 1) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
      }
      return;
    }
    if (den_.lowest().c < 0) {
      den_ = -den_;
      num_ = -num_;
    }
  }

  void normalize() {
    fix_units();
    if (num_.is_zero() || den_.is_one()) return;
    QTPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
      fix_units();
    }
  }

  static RatQT add(const RatQT& a, const RatQT& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatQT(a.num_ + b.num_);
    if (a.den_.is_one()) return from_coprime(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return from_coprime(b.num_ * a.den_ + a.num_, a.den_);
    if (a.den_ == b.den_) return RatQT(a.num_ + b.num_, a.den_);
    QTPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) return from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    QTPoly ad = *divide_exact(a.den_, g), bd = *divide_exact(b.den_, g);
    QTPoly n = a.num_ * bd + b.num_ * ad;
    if (n.is_zero()) return {};
    // any common factor of n and ad*bd*g divides g
    QTPoly h = gcd(n, g);
    if (!h.is_one()) {
      n = *divide_exact(n, h);
      g = *divide_exact(g, h);
    }
    return from_coprime(std::move(n), ad * bd * g);
  }

  static RatQT mul(const RatQT& a, const RatQT& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatQT(a.num_ * b.num_);
    if (a.num_.is_monomial() && a.den_.is_one()) {
      RatQT r = b;
      const Term& m = a.num_.lowest();
      r.num_ = r.num_.shifted(m.e);
      if (m.c != 1) return RatQT(r.num_.scaled(m.c), r.den_);
      return r;
    }
    if (b.num_.is_monomial() && b.den_.is_one()) return mul(b, a);
    QTPoly an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
    if (!bd.is_one()) {
      QTPoly g = gcd(an, bd);
      if (!g.is_one()) {
        an = *divide_exact(an, g);
        bd = *divide_exact(bd, g);
      }
    }
    if (!ad.is_one()) {
      QTPoly g = gcd(bn, ad);
      if (!g.is_one()) {
        bn = *divide_exact(bn, g);
        ad = *divide_exact(ad, g);
      }
    }
    return from_coprime(an * bn, ad * bd);
  }
};

}  // namespace daha
