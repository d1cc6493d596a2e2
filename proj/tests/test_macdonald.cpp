#include <catch2/catch_amalgamated.hpp>

#include "daha/macdonald.hpp"

using namespace daha;

namespace {

const QTPoly one = 1, q = QTPoly::q(), t = QTPoly::t();

QTLaurent x(int k, RatQT c = 1) { return QTLaurent::mono(Weight{k}, std::move(c)); }

// plain triangular solve over RatQT, with y_op applied directly
QTLaurent naive_e(const RootSystem& rs, const Weight& l, std::vector<int> mu = {}) {
  auto basis = rs.lower_set(l);
  if (mu.empty()) mu = rs.default_mu_star();
  std::map<Weight, QTLaurent> cols;
  for (auto& b : basis) cols[b] = y_op(rs, mu, QTLaurent::mono(b));
  RatQT y = cols[l].coefficient(l);
  std::map<Weight, RatQT> v{{l, RatQT(1)}};
  for (auto it = basis.rbegin() + 1; it != basis.rend(); ++it) {
    RatQT s;
    for (auto& [k, c] : v) s += cols[k].coefficient(*it) * c;
    v[*it] = s / (y - cols[*it].coefficient(*it));
  }
  QTLaurent e;
  for (auto& [k, c] : v) e.add_term(k, c);
  return e;
}

}  // namespace

TEST_CASE("A1 nonsymmetric polynomials") {
  auto a1 = RootSystem::from_name("A1");
  auto r = nonsym_e(a1, Weight{1});
  CHECK(r.e_poly == x(1));
  CHECK(r.eigenvalue == RatQT::q(-1));
  r = nonsym_e(a1, Weight{-1});
  CHECK(r.e_poly == x(-1) + x(1, RatQT(one - t, one - q * t)));
  CHECK(r.eigenvalue == RatQT(q * t * t));
  CHECK(r.conjectural);
  CHECK(integral_form(r.e_poly, Weight{-1}) == x(-1, RatQT(one - q * t)) + x(1, RatQT(one - t)));
  r = nonsym_e(a1, Weight{0});
  CHECK(r.e_poly == x(0));
  CHECK(r.eigenvalue == RatQT::t(2));
  CHECK(nonsym_e(a1, Weight{2}).e_poly == x(2) + x(0, RatQT(q * (one - t), one - q * t)));
  auto q2t = QTPoly::monomial(1, 2, 1);
  CHECK(nonsym_e(a1, Weight{-2}).e_poly ==
        x(-2) + x(0, RatQT((one + q) * (one - t), one - q2t)) + x(2, RatQT(one - t, one - q2t)));
  // the three-step normalization gives the minimal integral multiple
  CHECK(to_rational(nonsym_e_integral(a1, Weight{-2})) ==
        x(-2, RatQT(one - q2t)) + x(0, RatQT((one + q) * (one - t))) + x(2, RatQT(one - t)));
}

TEST_CASE("solver agrees with a plain rational solve") {
  for (auto name : {"A1", "A2", "B2", "C2"}) {
    auto rs = RootSystem::from_name(name);
    int b = rs.rank() == 1 ? 5 : 2;
    for (int i = -b; i <= b; ++i)
      for (int j = -b; j <= b; ++j) {
        Weight l = rs.rank() == 1 ? Weight{i} : Weight{i, j};
        if (rs.rank() == 1 && j != 0) continue;
        if (rs.lower_set(l).size() > 25) continue;
        INFO(name << " " << l.to_string());
        EigenResult e;
        try {
          e = EigenSolver(rs).eigen(l);
        } catch (const std::domain_error&) {
          continue;
        }
        REQUIRE(e.e_poly == naive_e(rs, l));
        REQUIRE(integral_form(e.e_poly, l) == to_rational(nonsym_e_integral(rs, l)));
        REQUIRE(e.e_poly.coefficient(l).is_one());
        for (auto& [w, c] : e.e_poly.terms()) REQUIRE(rs.cherednik_leq(w, l));
      }
  }
}

TEST_CASE("joint eigenvectors and the exponent formula") {
  for (auto name : {"A1", "A2", "B2"}) {
    auto rs = RootSystem::from_name(name);
    std::vector<std::vector<int>> mus{rs.default_mu_star()};
    if (rs.rank() == 2) mus.push_back(name == std::string("A2") ? std::vector<int>{3, 2} : std::vector<int>{4, 3});
    else mus.push_back({2});
    for (auto& mu : mus) {
      EigenSolver y(rs, mu);
      for (auto& l : rs.rank() == 1 ? std::vector<Weight>{{-3}, {-1}, {0}, {2}, {4}}
                                    : std::vector<Weight>{{1, 0}, {-1, 1}, {0, -1}, {1, 1}, {-1, 0}, {2, -1}}) {
        auto e = nonsym_e_integral(rs, l);
        auto chk = eigen_check(y, e, l);
        INFO(name << " " << l.to_string() << " " << chk.message);
        REQUIRE(chk.pass);
      }
    }
  }
  auto a1 = RootSystem::from_name("A1");
  auto p = predicted_exponents(a1, Weight{-1}, {1});
  CHECK(p.q == 1);
  CHECK(p.t2 == 4);
  p = predicted_exponents(a1, Weight{1}, {1});
  CHECK(p.q == -1);
  CHECK(p.t2 == 0);
  CHECK(eigen_check(a1, Weight{0}, {3}).pass);
}

TEST_CASE("symmetric polynomials") {
  auto a1 = RootSystem::from_name("A1");
  CHECK(sym_p(a1, Weight{1}) == x(1) + x(-1));
  CHECK(sym_p(a1, Weight{0}) == x(0));
  auto p2 = sym_p(a1, Weight{2});
  auto m = monomial_expand(a1, p2);
  REQUIRE(m.size() == 2);
  CHECK(m[0].first == Weight{2});
  CHECK(m[1].first == Weight{0});
  CHECK(m[1].second.t_to_q() == RatQT(1));
  auto a2 = RootSystem::from_name("A2");
  auto p = sym_p(a2, Weight{1, 1});
  for (int i = 1; i <= 2; ++i)
    for (auto& [w, c] : p.terms()) REQUIRE(p.coefficient(a2.reflect(i, w)) == c);
  CHECK_THROWS_AS(sym_p(a1, Weight{-1}), std::invalid_argument);
}

TEST_CASE("monomial expansion") {
  auto a1 = RootSystem::from_name("A1");
  auto m = monomial_expand(a1, x(2) + x(0) + x(-2));
  CHECK(m == std::vector<std::pair<Weight, RatQT>>{{Weight{2}, RatQT(1)}, {Weight{0}, RatQT(1)}});
  m = monomial_expand(a1, (x(1) + x(-1)) * (x(1) + x(-1)));
  CHECK(m == std::vector<std::pair<Weight, RatQT>>{{Weight{2}, RatQT(1)}, {Weight{0}, RatQT(2)}});
  auto a2 = RootSystem::from_name("A2");
  CHECK(monomial_expand(a2, orbit_sum(a2, Weight{1, 0})).size() == 1);
  CHECK_THROWS_AS(monomial_expand(a1, x(1)), std::invalid_argument);
}

TEST_CASE("solver errors") {
  auto a2 = RootSystem::from_name("A2");
  // theta^vee does not separate (1,-1) from (-2,2)
  CHECK_THROWS_WITH(EigenSolver(a2).solve(Weight{-2, 2}), Catch::Matchers::StartsWith("degenerate spectrum"));
  CHECK(nonsym_e(a2, Weight{-2, 2}).e_poly == naive_e(a2, Weight{-2, 2}, {3, 2}));
  CHECK_THROWS_AS(EigenSolver(a2, {1, 2}), std::invalid_argument);
  auto a1a1 = RootSystem::from_name("A1xA1");
  CHECK_THROWS_AS(nonsym_e(a1a1, Weight{1, 0}), std::invalid_argument);
}
