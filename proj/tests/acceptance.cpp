// Acceptance run: one PASS/FAIL line per criterion, details indented below.
//   acceptance            all criteria
//   acceptance 3 5        only criteria 3 and 5
#include <chrono>
#include <functional>
#include <iostream>

#include "daha/io.hpp"
#include "daha/sl2_lab.hpp"
#include "daha/verify.hpp"
#include "oracles.hpp"

using namespace daha;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
  void note(std::string s) { details.push_back(std::move(s)); }
};

struct Criterion {
  int id;
  std::string title;
  double budget;  // seconds
  std::function<void(Outcome&)> body;
};

void suite_into(Outcome& out, const std::string& type, const std::string& suite, verify::Options o,
                const std::function<bool(const verify::Check&)>& counts = {}) {
  auto rs = RootSystem::from_name(type);
  auto r = verify::run(suite, rs, o);
  for (auto& c : r.checks) {
    if (counts && !counts(c)) {
      out.note(type + " " + suite + " (informational) " + verify::format(c));
      continue;
    }
    std::string line = type + " " + suite + " " + verify::format(c) + " [" + std::to_string(c.cases) + " cases]";
    if (c.pass)
      out.note(line);
    else
      out.fail(line);
  }
}

QTPoly t_to_q(const QTPoly& p) {
  std::vector<Term> ts;
  for (auto& x : p.terms()) ts.push_back({{x.e.q + x.e.t, 0}, x.c});
  return QTPoly::from_terms(std::move(ts));
}

void c1(Outcome& out) {
  auto rs = RootSystem::from_name("A1");
  PolyLaurent e = nonsym_e_integral(rs, Weight{-1});
  QTPoly one = 1, q = QTPoly::q(), t = QTPoly::t();
  PolyLaurent want = PolyLaurent::mono(Weight{-1}, one - q * t) + PolyLaurent::mono(Weight{1}, one - t);
  out.note(io::to_text(e));
  if (!(e == want)) out.fail("want " + io::to_text(want));
}

void c2(Outcome& out) {
  for (auto type : {"A1", "A1xA1", "A2", "B2"})
    for (auto suite : {"hecke", "braid", "xcommute"}) suite_into(out, type, suite, {3, true});
}

void c3(Outcome& out) {
  for (auto type : {"A2", "B2"})
    suite_into(out, type, "demazure", {3, false}, [](const verify::Check& c) { return c.name.rfind("Bruhat", 0) != 0; });
}

void c4(Outcome& out) {
  for (auto type : {"A1", "A1xA1", "A2", "B2"}) suite_into(out, type, "symmetrizer", {3, false});
}

void c5(Outcome& out) {
  for (auto type : {"A1", "A2", "B2"}) suite_into(out, type, "order", {4, false});
}

// every weight whose lower set has at most 40 elements, found shell by shell
std::vector<Weight> small_weights(const RootSystem& rs, std::size_t cap) {
  std::vector<Weight> out;
  for (int b = 0;; ++b) {
    bool any = false;
    for (auto& w : verify::box(rs.rank(), b)) {
      bool on_shell = std::any_of(w.coords.begin(), w.coords.end(), [&](int x) { return std::abs(x) == b; });
      if (!on_shell || rs.lower_set(w).size() > cap) continue;
      any = true;
      out.push_back(w);
    }
    if (!any && b > 2) break;
  }
  return out;
}

void c6(Outcome& out) {
  for (auto type : {"A1", "A2", "B2"}) {
    auto rs = RootSystem::from_name(type);
    Macdonald mac(rs);
    auto& y = mac.default_solver();
    auto ws = small_weights(rs, 40);
    std::size_t bad = 0;
    for (auto& l : ws) {
      auto chk = eigen_check(y, mac.integral(l), l);
      if (!chk.pass) {
        ++bad;
        out.fail(std::string(type) + " lambda=" + l.to_string() + ": " + chk.message);
      }
    }
    std::string mu;
    for (int c : y.mu()) mu += (mu.empty() ? "" : ",") + std::to_string(c);
    out.note(std::string(type) + ": " + std::to_string(ws.size() - bad) + "/" + std::to_string(ws.size()) +
             " weights, mu*=(" + mu + ")");
  }
}

void c7(Outcome& out) {
  auto v = sl2::cross_validate(3);
  for (auto& l : v.lines) {
    std::string line = l.what + (l.detail.empty() ? "" : " [" + l.detail + "]");
    if (l.pass)
      out.note(line);
    else
      out.fail(line);
  }
}

void c8(Outcome& out) {
  auto rs = RootSystem::from_name("A1");
  Macdonald mac(rs);
  auto& y = mac.default_solver();
  for (int k = 1; k <= 3; ++k)
    for (int m : {-k, k + 1}) {
      auto chk = eigen_check(y, mac.integral(Weight{m}), Weight{m});
      std::string tag = "E_" + std::to_string(m) + ": ";
      if (!chk.pass) {
        out.fail(tag + chk.message);
        continue;
      }
      // E_{-k} ~ q^k, E_{k+1} ~ q^{-(k+1)}
      int want_q = m < 0 ? k : -(k + 1);
      std::string obs = "q^" + std::to_string(chk.observed->q) + " t^" + std::to_string(chk.observed->t);
      if (chk.observed->q != want_q)
        out.fail(tag + obs + ", want q^" + std::to_string(want_q));
      else
        out.note(tag + obs);
    }
}

void c9(Outcome& out) {
  for (auto type : {"A1", "A2"}) {
    auto rs = RootSystem::from_name(type);
    oracle::TypeA ref(int(rs.rank()));
    for (auto& l : verify::box(rs.rank(), 3)) {
      if (!rs.is_dominant(l)) continue;
      auto p = sym_p(rs, l);
      auto ch = ref.character(l.coords);
      std::string tag = std::string(type) + " lambda=" + l.to_string();
      bool ok = p.size() == ch.size();
      bool all_one = true;
      for (auto& [w, c] : p.terms()) {
        RatQT at = RatQT(t_to_q(c.num()), t_to_q(c.den()));
        auto it = ch.find(w.coords);
        if (it == ch.end() || !(at == RatQT(Int(it->second)))) {
          ok = false;
          out.fail(tag + ": coefficient at " + w.to_string() + " is " + at.to_string());
          break;
        }
        all_one = all_one && it->second == 1;
      }
      if (ok) out.note(tag + ": " + std::to_string(ch.size()) + " weights match" + (all_one ? "" : " (multiplicities > 1)"));
      else if (p.size() != ch.size())
        out.fail(tag + ": support size " + std::to_string(p.size()) + " vs " + std::to_string(ch.size()));
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all{
      {1, "E_-omega integral form for A1", 0.1, c1},
      {2, "relation suites on the box, affine generator included", 60, c2},
      {3, "Demazure reduced-word independence and D_i^2 = (1+t) D_i", 30, c3},
      {4, "symmetrizer properties", 30, c4},
      {5, "Cherednik-order convexity, all clauses", 30, c5},
      {6, "Y-eigenvalues for lower sets of size <= 40", 300, c6},
      {7, "sl2 triple cross-validation k <= 3", 120, c7},
      {8, "eigenvalue pattern of E_-k and E_k+1", 60, c8},
      {9, "P at t = q gives Weyl characters", 60, c9},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    try {
      only.insert(std::stoi(argv[i]));
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [criterion...]\n";
      return 2;
    }
  }
  bool ok = true;
  for (auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.budget) out.fail("runtime " + std::to_string(dt) + " s over budget " + std::to_string(c.budget) + " s");
    ok = ok && out.pass;
    std::printf("%s criterion %d: %s (%.3f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), dt);
    for (auto& d : out.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
