// Text, LaTeX and JSON forms of coefficients and group-algebra elements.
#pragma once

#include <json.hpp>

#include "laurent.hpp"

namespace daha::io {

using nlohmann::json;

inline json to_json(const QTPoly& p) {
  json a = json::array();
  for (auto& x : p.terms()) a.push_back({x.c.get_str(), x.e.q, x.e.t});
  return a;
}

inline json to_json(const RatQT& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

// weights of rank-one elements may be written as single integers
inline json weight_json(const Weight& w, bool scalar) {
  if (scalar) return w[0];
  return w.coords;
}

template <class C>
json to_json(const Laurent<C>& f, bool scalar_weights = false) {
  json terms = json::array();
  for (auto& [w, c] : f.terms()) terms.push_back({{"weight", weight_json(w, scalar_weights)}, {"coeff", to_json(RatQT(c))}});
  return {{"terms", terms}};
}

inline QTPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a list of [coeff, dq, dt]");
  std::vector<Term> ts;
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("term must be [coeff, dq, dt]");
    Int c;
    if (t[0].is_string()) {
      if (c.set_str(t[0].get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient string");
    } else {
      c = t[0].get<long>();
    }
    ts.push_back({{t[1].get<int>(), t[2].get<int>()}, c});
  }
  return QTPoly::from_terms(std::move(ts));
}

inline RatQT ratqt_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num")) throw std::invalid_argument("coefficient must have num");
  QTPoly num = poly_from_json(j.at("num"));
  QTPoly den = j.contains("den") ? poly_from_json(j.at("den")) : QTPoly(1);
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return RatQT(num, den);
}

inline QTLaurent laurent_from_json(const json& j, std::size_t rank) {
  if (!j.is_object() || !j.contains("terms")) throw std::invalid_argument("element must have terms");
  QTLaurent f;
  for (auto& t : j.at("terms")) {
    Weight w;
    auto& jw = t.at("weight");
    if (jw.is_number_integer())
      w = Weight{jw.get<int>()};
    else
      w = Weight(jw.get<std::vector<int>>());
    if (w.size() != rank) throw std::invalid_argument("weight has wrong length");
    f.add_term(w, ratqt_from_json(t.at("coeff")));
  }
  return f;
}

namespace detail {

inline std::string x_text(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += w.size() == 1 ? "x" : "x_" + std::to_string(i + 1);
    if (w[i] != 1) s += "^" + std::to_string(w[i]);
  }
  return s;
}

inline std::string x_latex(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += w.size() == 1 ? "x" : "x_{" + std::to_string(i + 1) + "}";
    if (w[i] != 1) s += "^{" + std::to_string(w[i]) + "}";
  }
  return s;
}

inline std::string poly_latex(const QTPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& x : p.terms()) {
    Int c = x.c;
    bool neg = c < 0;
    if (neg) c = -c;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string m;
    auto var = [&](const char* v, int e) {
      if (e == 0) return;
      if (!m.empty()) m += " ";
      m += v;
      if (e != 1) m += "^{" + std::to_string(e) + "}";
    };
    var("q", x.e.q);
    var("t", x.e.t);
    if (m.empty())
      s += c.get_str();
    else
      s += (c == 1 ? "" : c.get_str() + " ") + m;
  }
  return s;
}

}  // namespace detail

// "(1-q*t)*x^-1 + (1-t)*x"
template <class C>
std::string to_text(const Laurent<C>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, c0] : f.terms()) {
    RatQT c(c0);
    std::string mono = detail::x_text(w);
    bool neg = false;
    std::string cs;
    if (c.is_polynomial() && c.num().is_monomial()) {
      QTPoly p = c.num();
      if (p.lowest().c < 0) {
        neg = true;
        p = -p;
      }
      cs = p.is_one() ? "" : p.to_string();
      if (cs.empty() && mono.empty()) cs = "1";
    } else if (c.is_polynomial()) {
      cs = "(" + c.num().to_string() + ")";
    } else {
      cs = c.to_string();
    }
    std::string term = cs.empty() ? mono : mono.empty() ? cs : cs + "*" + mono;
    if (first)
      s += (neg ? "-" : "") + term;
    else
      s += (neg ? " - " : " + ") + term;
    first = false;
  }
  return s;
}

template <class C>
std::string to_latex(const Laurent<C>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, c0] : f.terms()) {
    RatQT c(c0);
    std::string mono = detail::x_latex(w);
    std::string cs;
    bool neg = false;
    if (c.is_polynomial() && c.num().is_monomial()) {
      QTPoly p = c.num();
      if (p.lowest().c < 0) {
        neg = true;
        p = -p;
      }
      cs = p.is_one() && !mono.empty() ? "" : detail::poly_latex(p);
    } else if (c.is_polynomial()) {
      cs = "\\left(" + detail::poly_latex(c.num()) + "\\right)";
    } else {
      cs = "\\frac{" + detail::poly_latex(c.num()) + "}{" + detail::poly_latex(c.den()) + "}";
    }
    std::string term = cs.empty() ? mono : mono.empty() ? cs : cs + " " + mono;
    s += first ? (neg ? "-" : "") + term : (neg ? " - " : " + ") + term;
    first = false;
  }
  return s;
}

}  // namespace daha::io
