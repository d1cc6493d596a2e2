#include <catch2/catch_amalgamated.hpp>

#include "daha/io.hpp"
#include "daha/macdonald.hpp"

using namespace daha;

namespace {

const QTPoly one = 1, q = QTPoly::q(), t = QTPoly::t();

}  // namespace

TEST_CASE("text rendering of E for A1") {
  auto rs = RootSystem::from_name("A1");
  Macdonald m(rs);
  CHECK(io::to_text(m.integral(Weight{-1})) == "(1-q*t)*x^-1 + (1-t)*x");
  CHECK(io::to_text(PolyLaurent::mono(Weight{0}, one)) == "1");
  CHECK(io::to_text(PolyLaurent::mono(Weight{2}, -t)) == "-t*x^2");
  CHECK(io::to_text(PolyLaurent::mono(Weight{1, -2}, one)) == "x_1*x_2^-2");
  CHECK(io::to_text(PolyLaurent()) == "0");
}

TEST_CASE("latex rendering") {
  PolyLaurent f = PolyLaurent::mono(Weight{-1}, one - q * t) + PolyLaurent::mono(Weight{1}, one - t);
  CHECK(io::to_latex(f) == "\\left(1 - q t\\right) x^{-1} + \\left(1 - t\\right) x");
  QTLaurent g = QTLaurent::mono(Weight{0, 1}, RatQT(one, one - q));
  CHECK(io::to_latex(g) == "\\frac{1}{1 - q} x_{2}");
}

TEST_CASE("json round trip is byte identical") {
  for (auto name : {"A1", "A2", "B2"}) {
    auto rs = RootSystem::from_name(name);
    Macdonald m(rs);
    auto lower = rs.lower_set(Weight(std::vector<int>(rs.rank(), -1)));
    for (auto& l : lower) {
      QTLaurent e = m.eigen(l).e_poly;
      std::string s = io::to_json(e).dump();
      QTLaurent back = io::laurent_from_json(io::json::parse(s), rs.rank());
      CHECK(back == e);
      CHECK(io::to_json(back).dump() == s);
    }
  }
}

TEST_CASE("json parsing rejects bad input") {
  using io::json;
  CHECK_THROWS(io::laurent_from_json(json::parse(R"({"terms":[{"weight":[1],"coeff":{"num":[["1",0,0]]}}]})"), 2));
  CHECK_THROWS(io::ratqt_from_json(json::parse(R"({"num":[["1",0,0]],"den":[]})")));
  CHECK_THROWS(io::poly_from_json(json::parse(R"([["x",0,0]])")));
  auto f = io::laurent_from_json(json::parse(R"({"terms":[{"weight":-1,"coeff":{"num":[[2,1,0]],"den":[["1",0,0],["-1",0,1]]}}]})"), 1);
  CHECK(f.coefficient(Weight{-1}) == RatQT(2 * q, one - t));
}
