// Sparse Laurent polynomials in q and t with big-integer coefficients.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace daha {

using Int = mpz_class;
using Rational = mpq_class;

struct Monomial {
  int q = 0;
  int t = 0;
  auto operator<=>(const Monomial&) const = default;
  Monomial operator+(const Monomial& o) const { return {q + o.q, t + o.t}; }
  Monomial operator-(const Monomial& o) const { return {q - o.q, t - o.t}; }
};

struct Term {
  Monomial e;
  Int c;
};

inline bool operator==(const Term& a, const Term& b) { return a.e == b.e && a.c == b.c; }

// Terms are kept sorted by (q, t) ascending with no zero coefficients.
class QTPoly {
 public:
  QTPoly() = default;
  QTPoly(long c) {
    if (c != 0) terms_.push_back({{0, 0}, Int(c)});
  }
  QTPoly(const Int& c) {
    if (c != 0) terms_.push_back({{0, 0}, c});
  }

  static QTPoly monomial(const Int& c, int dq, int dt) {
    QTPoly p;
    if (c != 0) p.terms_.push_back({{dq, dt}, c});
    return p;
  }
  static QTPoly q(int k = 1) { return monomial(1, k, 0); }
  static QTPoly t(int k = 1) { return monomial(1, 0, k); }

  static QTPoly from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
    QTPoly p;
    for (auto& x : ts) {
      if (!p.terms_.empty() && p.terms_.back().e == x.e) {
        p.terms_.back().c += x.c;
      } else {
        if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(x));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
    return p;
  }
  // caller guarantees sorted, distinct, nonzero
  static QTPoly from_sorted(std::vector<Term> ts) {
    QTPoly p;
    p.terms_ = std::move(ts);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Monomial{}); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].e == Monomial{} && terms_[0].c == 1; }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& lowest() const { return terms_.front(); }
  const Term& highest() const { return terms_.back(); }
  Int constant_term() const {
    for (auto& x : terms_)
      if (x.e == Monomial{}) return x.c;
    return 0;
  }

  Monomial min_exponents() const {
    Monomial m{terms_.front().e.q, terms_.front().e.t};
    for (auto& x : terms_) m.t = std::min(m.t, x.e.t);
    return m;
  }
  Monomial max_exponents() const {
    Monomial m{terms_.back().e.q, terms_.back().e.t};
    for (auto& x : terms_) m.t = std::max(m.t, x.e.t);
    return m;
  }
  bool has_negative_exponents() const {
    if (is_zero()) return false;
    auto m = min_exponents();
    return m.q < 0 || m.t < 0;
  }

  QTPoly operator-() const {
    QTPoly r = *this;
    for (auto& x : r.terms_) x.c = -x.c;
    return r;
  }

  friend QTPoly operator+(const QTPoly& a, const QTPoly& b) { return merge(a, b, false); }
  friend QTPoly operator-(const QTPoly& a, const QTPoly& b) { return merge(a, b, true); }
  QTPoly& operator+=(const QTPoly& b) { return *this = merge(*this, b, false); }
  QTPoly& operator-=(const QTPoly& b) { return *this = merge(*this, b, true); }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b) { return multiply(a, b); }
  QTPoly& operator*=(const QTPoly& b) { return *this = multiply(*this, b); }

  friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.terms_ == b.terms_; }

  QTPoly shifted(int dq, int dt) const {
    QTPoly r = *this;
    for (auto& x : r.terms_) {
      x.e.q += dq;
      x.e.t += dt;
    }
    return r;
  }
  QTPoly shifted(Monomial m) const { return shifted(m.q, m.t); }

  QTPoly scaled(const Int& k) const {
    if (k == 0) return {};
    QTPoly r = *this;
    for (auto& x : r.terms_) x.c *= k;
    return r;
  }
  // exact division of every coefficient by k
  QTPoly divided_by(const Int& k) const {
    QTPoly r = *this;
    for (auto& x : r.terms_) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), k.get_mpz_t());
    return r;
  }

  Int content() const {
    Int g = 0;
    for (auto& x : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  Int max_norm() const {
    Int m = 0;
    for (auto& x : terms_)
      if (abs(x.c) > m) m = abs(x.c);
    return m;
  }

  Rational eval(const Rational& q0, const Rational& t0) const {
    Rational s = 0;
    for (auto& x : terms_) s += Rational(x.c) * power(q0, x.e.q) * power(t0, x.e.t);
    return s;
  }

  // t -> q
  QTPoly t_to_q() const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (auto& x : terms_) ts.push_back({{x.e.q + x.e.t, 0}, x.c});
    return from_terms(std::move(ts));
  }

  std::string to_string() const;

  static Rational power(const Rational& b, int e) {
    if (e == 0) return 1;
    if (b == 0) {
      if (e < 0) throw std::domain_error("pole: zero raised to a negative power");
      return 0;
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
  }

 private:
  std::vector<Term> terms_;

  static QTPoly merge(const QTPoly& a, const QTPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].e < b.terms_[j].e)) {
        out.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].e < a.terms_[i].e) {
        out.push_back(b.terms_[j++]);
        if (subtract) out.back().c = -out.back().c;
      } else {
        Int c = subtract ? Int(a.terms_[i].c - b.terms_[j].c) : Int(a.terms_[i].c + b.terms_[j].c);
        if (c != 0) out.push_back({a.terms_[i].e, std::move(c)});
        ++i;
        ++j;
      }
    }
    return from_sorted(std::move(out));
  }

  static QTPoly multiply(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 && a.terms_[0].c == 1) return b.shifted(a.terms_[0].e);
    if (b.size() == 1 && b.terms_[0].c == 1) return a.shifted(b.terms_[0].e);
    const std::size_t n = a.size(), m = b.size();
    Monomial amin = a.min_exponents(), amax = a.max_exponents();
    Monomial bmin = b.min_exponents(), bmax = b.max_exponents();
    long qs = long(amax.q - amin.q) + (bmax.q - bmin.q) + 1;
    long ts = long(amax.t - amin.t) + (bmax.t - bmin.t) + 1;
    long grid = qs * ts;
    if (n * m > 64 && grid <= long(8 * n * m) + 256) {
      std::vector<Int> acc(static_cast<std::size_t>(grid));
      for (auto& x : a.terms_)
        for (auto& y : b.terms_) {
          long idx = long(x.e.q - amin.q + y.e.q - bmin.q) * ts + (x.e.t - amin.t + y.e.t - bmin.t);
          mpz_addmul(acc[idx].get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
        }
      std::vector<Term> out;
      for (long idx = 0; idx < grid; ++idx)
        if (acc[idx] != 0)
          out.push_back({{int(idx / ts) + amin.q + bmin.q, int(idx % ts) + amin.t + bmin.t}, std::move(acc[idx])});
      return from_sorted(std::move(out));
    }
    std::vector<Term> ts_;
    ts_.reserve(n * m);
    for (auto& x : a.terms_)
      for (auto& y : b.terms_) ts_.push_back({x.e + y.e, x.c * y.c});
    return from_terms(std::move(ts_));
  }
};

namespace detail {

inline std::string monomial_text(int e, const char* var) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace detail

// "1-q*t", "2*q^2+t^-1"
inline std::string QTPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& x : terms_) {
    std::string mono;
    auto mq = detail::monomial_text(x.e.q, "q");
    auto mt = detail::monomial_text(x.e.t, "t");
    mono = mq;
    if (!mt.empty()) mono += (mono.empty() ? "" : "*") + mt;
    Int a = abs(x.c);
    bool neg = x.c < 0;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += mono;
    }
    first = false;
  }
  return s;
}

// Exact quotient a/b in the Laurent ring, or nullopt when b does not divide a.
inline std::optional<QTPoly> divide_exact(const QTPoly& a, const QTPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return QTPoly{};
  Monomial ma = a.min_exponents(), mb = b.min_exponents();
  if (b.is_monomial()) {
    const Int& c = b.lowest().c;
    std::vector<Term> out;
    out.reserve(a.size());
    for (auto& x : a.terms()) {
      if (!mpz_divisible_p(x.c.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
      Int qc;
      mpz_divexact(qc.get_mpz_t(), x.c.get_mpz_t(), c.get_mpz_t());
      out.push_back({x.e - b.lowest().e, std::move(qc)});
    }
    return QTPoly::from_sorted(std::move(out));
  }
  Monomial da = a.max_exponents() - ma, db = b.max_exponents() - mb;
  if (da.q < db.q || da.t < db.t) return std::nullopt;
  const long W = da.t + 1;
  const int qt_max = da.t - db.t;
  auto idx = [&](Monomial e) { return long(e.q) * W + e.t; };
  std::vector<Int> r(static_cast<std::size_t>(long(da.q) * W + da.t + 1));
  for (auto& x : a.terms()) r[idx(x.e - ma)] = x.c;
  std::vector<std::pair<long, const Int*>> bt;
  for (auto& x : b.terms()) bt.push_back({idx(x.e - mb), &x.c});
  const long bdeg = bt.back().first;
  const Int& blc = *bt.back().second;
  std::vector<Term> quo;
  Int qc;
  for (long i = long(r.size()) - 1; i >= bdeg; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), blc.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), r[i].get_mpz_t(), blc.get_mpz_t());
    long k = i - bdeg;
    int kq = int(k / W), kt = int(k % W);
    if (kt > qt_max) return std::nullopt;
    for (auto& [off, c] : bt) mpz_submul(r[k + off].get_mpz_t(), qc.get_mpz_t(), c->get_mpz_t());
    quo.push_back({{kq, kt}, qc});
  }
  for (long i = 0; i < bdeg; ++i)
    if (r[i] != 0) return std::nullopt;
  std::reverse(quo.begin(), quo.end());
  return QTPoly::from_sorted(std::move(quo)).shifted(ma - mb);
}

}  // namespace daha
