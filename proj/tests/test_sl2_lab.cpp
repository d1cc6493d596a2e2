#include <catch2/catch_amalgamated.hpp>

#include "daha/sl2_lab.hpp"

using namespace daha;
using namespace daha::sl2;

namespace {

const QTPoly one = 1, q = QTPoly::q(), t = QTPoly::t();

PolyLaurent x(int k, QTPoly c = 1) { return PolyLaurent::mono(Weight{k}, std::move(c)); }

enum { W, U, P, R };

}  // namespace

TEST_CASE("deformed block") {
  for (Rational a : {Rational(0), Rational(1), Rational(-2), Rational(1, 2)}) {
    auto b = deformed_block(a);
    INFO(a.get_str());
    CHECK(b.dim() == 4);
    CHECK(b.act({'e', 0, 0}).get(P, W) == 1);
    CHECK(b.act({'e', 0, 0}).apply(b.unit(P)) == Vec(4));
    CHECK(b.act({'e', 1, 0}).get(P, W) == a);
    CHECK(b.act({'e', 3, 0}).get(P, W) == a * a * a);
    CHECK(b.act({'h', 1, 0}).get(W, W) == -a);
    CHECK(b.act({'h', 1, 1}).get(U, W) == 1);
    CHECK(b.act({'h', 0, 1}).apply(b.unit(W)) == Vec(4));
    for (int k = 1; k <= 6; ++k) CHECK(b.act({'f', k, 0}).apply(b.unit(W)) == Vec(4));
    CHECK_FALSE(compatibility_failure(b));
    CHECK(span_dimension(b) == 4);
  }
  // the solved action of h z^k xi on w
  auto b = deformed_block(3);
  CHECK(b.act({'h', 2, 1}).get(U, W) == 3);
  CHECK(b.act({'h', 3, 1}).get(U, W) == 9);
  CHECK(graded_character(deformed_block(0)) == x(-1, one - q * t) + x(1, one - t));
  CHECK(graded_character(deformed_block(1)) == x(-1, one - q * t) + x(1, one - t));
}

TEST_CASE("compatibility detects a broken action") {
  auto b = deformed_block(2);
  b.actions.at({'e', 1, 0}).set(P, W, 5);
  CHECK(compatibility_failure(b));
}

TEST_CASE("fusion products") {
  auto f = fusion({Rational(1), Rational(2)});
  CHECK(f.dim() == 16);
  CHECK(span_dimension(f) == 16);
  CHECK_FALSE(compatibility_failure(f));
  for (auto& r : graded_relations(f, 2)) {
    INFO(r.name);
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(fusion({Rational(1), Rational(1)}), std::invalid_argument);
  CHECK(graded_character(fusion({Rational(5)})) == graded_character(deformed_block(5)));
  auto g = graded_character(f);
  CHECK(specialize_dim(g) == 16);
  CHECK(g == graded_character(fusion({Rational(-1), Rational(3, 2)})));
}

TEST_CASE("twist rule") {
  auto rule = twist_cocycle();
  CHECK(rule.slope == Rational(1, 2));
  CHECK(rule.offset == Rational(1, 2));
  PolyLaurent em = x(-1, one - q * t) + x(1, one - t);
  PolyLaurent e2 = pi_twist(rule, em, -1);
  CHECK(e2 == x(2, one - q * t) + x(0, q * (one - t)));
  CHECK(pi_twist(rule, x(0), 0) == x(1));
  // twisting twice returns E~_{-omega} with q-exponent 0
  CHECK(pi_twist(rule, e2, 2) == em);
}

TEST_CASE("character recursion") {
  CHECK(recursion_e(0) == x(0));
  CHECK(recursion_e(1) == x(1));
  CHECK(recursion_e(-1) == x(-1, one - q * t) + x(1, one - t));
  auto q2t = QTPoly::monomial(1, 2, 1);
  CHECK(recursion_e(-2) == x(-2, (one - q * t) * (one - q2t)) + x(0, (one - q * t) * (one + q) * (one - t)) +
                               x(2, (one - q * t) * (one - t)));
  for (int k = 0; k <= 4; ++k) {
    auto e = recursion_e(-k);
    Int want = 1;
    for (int i = 0; i < k; ++i) want *= 4;
    CHECK(specialize_dim(e) == want);
    CHECK(e.coefficient(Weight{-k}) == integral_scalar(-k));
    CHECK(e == daha_integral(-k));
    CHECK(recursion_e(k + 1) == daha_integral(k + 1));
  }
}

TEST_CASE("cross validation up to k = 2") {
  auto v = cross_validate(2);
  for (auto& l : v.lines) {
    INFO(l.what << " " << l.detail);
    CHECK(l.pass);
  }
}
