// daha: command-line front end.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "daha/io.hpp"
#include "daha/sl2_lab.hpp"
#include "daha/verify.hpp"

using namespace daha;

namespace {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer list: '" + s + "'");
    }
    if (pos != item.size()) throw InvalidInput("not an integer list: '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

Weight parse_weight(const RootSystem& rs, const std::string& s) {
  auto v = parse_ints(s);
  if (v.size() != rs.rank())
    throw InvalidInput("weight '" + s + "' needs " + std::to_string(rs.rank()) + " coordinates");
  return Weight(v);
}

// each item may also hold several weights separated by ';'
std::vector<Weight> parse_weights(const RootSystem& rs, const std::vector<std::string>& items) {
  std::vector<Weight> out;
  for (auto& s : items) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
      if (!item.empty()) out.push_back(parse_weight(rs, item));
  }
  if (out.empty()) throw InvalidInput("no weight given");
  return out;
}

RootSystem root_system(const std::string& name) {
  try {
    return RootSystem::from_name(name);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

template <class C>
std::string render(const Laurent<C>& f, const std::string& format, bool scalar = false) {
  if (format == "json") return io::to_json(f, scalar).dump();
  if (format == "latex") return io::to_latex(f);
  return io::to_text(f);
}

// results[i] = job(i), spread over n threads
template <class R, class F>
std::vector<R> fan_out(std::size_t count, int jobs, F job) {
  std::vector<R> out(count);
  std::vector<std::exception_ptr> errs(count);
  std::size_t n = std::max(1, std::min<int>(jobs, int(count)));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < n; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += n) try {
          out[i] = job(i);
        } catch (...) {
          errs[i] = std::current_exception();
        }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string read_json_arg(const std::string& s) {
  if (s == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  if (!s.empty() && s[0] == '@') {
    std::ifstream in(s.substr(1));
    if (!in) throw InvalidInput("cannot read " + s.substr(1));
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial representation of the double affine Hecke algebra"};
  app.require_subcommand(1);
  std::string type = "A1", format = "text";
  auto add_type = [&](CLI::App* c) {
    c->add_option("--type", type, "root system: A1..A8, A1xA1, B2, C2")->capture_default_str();
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
  };

  std::string weight;
  std::vector<std::string> weights;
  bool integral = false;
  int jobs = 1;
  auto* e = app.add_subcommand("e", "nonsymmetric Macdonald polynomial E_lambda");
  add_type(e);
  e->add_option("--weight", weights, "weight in fundamental coordinates, e.g. 1,-1; repeatable")
      ->required();
  e->add_flag("--integral", integral, "clear denominators");
  add_format(e);
  e->add_option("--jobs", jobs, "threads across independent weights")->check(CLI::PositiveNumber);

  auto* p = app.add_subcommand("p", "symmetric Macdonald polynomial P_lambda");
  add_type(p);
  p->add_option("--weight", weights, "dominant weight; repeatable")->required();
  add_format(p);
  p->add_option("--jobs", jobs, "threads across independent weights")->check(CLI::PositiveNumber);

  std::string mu, coweight, apply;
  auto* y = app.add_subcommand("y", "apply Y^mu");
  add_type(y);
  auto* mu_opt = y->add_option("--mu", mu, "coroot coordinates");
  y->add_option("--coweight", coweight, "fundamental coweight coordinates")->excludes(mu_opt);
  y->add_option("--apply", apply, "element in JSON ('-' for stdin, @file)")->required();
  add_format(y);

  std::string suite;
  int bound = 3;
  bool affine = false;
  auto* v = app.add_subcommand("verify", "relation and property suites");
  v->add_option("suite", suite, "suite")->required()->check(CLI::IsMember(verify::suite_names()));
  add_type(v);
  v->add_option("--bound", bound, "box |mu_i| <= bound")->check(CLI::NonNegativeNumber)->capture_default_str();
  v->add_flag("--affine", affine, "include the affine generator");
  add_format(v);

  std::string action, a, b;
  auto* o = app.add_subcommand("order", "Cherednik order");
  o->add_option("action", action, "cmp")->required()->check(CLI::IsMember({"cmp"}));
  add_type(o);
  o->add_option("--a", a)->required();
  o->add_option("--b", b)->required();

  std::string word;
  auto* d = app.add_subcommand("demazure", "(T_i1+1)...(T_ik+1) e^lambda");
  add_type(d);
  d->add_option("--word", word, "letters, e.g. 1,2,1")->required();
  d->add_option("--weight", weight)->required();
  add_format(d);

  int k = 1;
  auto* s = app.add_subcommand("sl2", "sl2[z, xi] module laboratory");
  s->add_option("action", action, "build | char | validate")
      ->required()
      ->check(CLI::IsMember({"build", "char", "validate"}));
  s->add_option("-k", k, "number of fusion factors")->check(CLI::Range(1, 6))->capture_default_str();
  add_format(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& err) {
    std::cerr << "error: " << err.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (e->parsed()) {
      auto rs = root_system(type);
      auto ws = parse_weights(rs, weights);
      auto out = fan_out<std::string>(ws.size(), jobs, [&](std::size_t i) {
        Macdonald m(rs);
        return integral ? render(m.integral(ws[i]), format) : render(m.eigen(ws[i]).e_poly, format);
      });
      for (auto& line : out) std::cout << line << "\n";
      return 0;
    }
    if (p->parsed()) {
      auto rs = root_system(type);
      auto ws = parse_weights(rs, weights);
      for (auto& w : ws)
        if (!rs.is_dominant(w)) throw InvalidInput("P needs a dominant weight, got " + w.to_string());
      auto out = fan_out<std::string>(ws.size(), jobs, [&](std::size_t i) { return render(sym_p(rs, ws[i]), format); });
      for (auto& line : out) std::cout << line << "\n";
      return 0;
    }
    if (y->parsed()) {
      auto rs = root_system(type);
      QTLaurent f = io::laurent_from_json(io::json::parse(read_json_arg(apply)), rs.rank());
      QTLaurent g;
      if (!coweight.empty()) {
        auto c = parse_ints(coweight);
        if (c.size() != rs.rank()) throw InvalidInput("coweight has wrong length");
        g = y_op_coweight(rs, c, f);
      } else {
        auto c = mu.empty() ? rs.default_mu_star() : parse_ints(mu);
        if (c.size() != rs.rank()) throw InvalidInput("coroot has wrong length");
        g = y_op(rs, c, f);
      }
      std::cout << render(g, format) << "\n";
      return 0;
    }
    if (v->parsed()) {
      auto rs = root_system(type);
      auto r = verify::run(suite, rs, {bound, affine});
      if (format == "json") {
        io::json j = {{"suite", r.suite}, {"type", type}, {"bound", bound}, {"pass", r.pass()}};
        j["checks"] = io::json::array();
        for (auto& c : r.checks)
          j["checks"].push_back(
              {{"name", c.name}, {"pass", c.pass}, {"cases", c.cases}, {"counterexample", c.counterexample}});
        std::cout << j.dump() << "\n";
      } else {
        for (auto& c : r.checks) std::cout << verify::format(c) << "\n";
      }
      return r.pass() ? 0 : 1;
    }
    if (o->parsed()) {
      auto rs = root_system(type);
      std::cout << to_string(rs.cherednik_cmp(parse_weight(rs, a), parse_weight(rs, b))) << "\n";
      return 0;
    }
    if (d->parsed()) {
      auto rs = root_system(type);
      WeylWord w{parse_ints(word)};
      for (int i : w.letters)
        if (i < 1 || i > int(rs.rank())) throw InvalidInput("letter " + std::to_string(i) + " out of range");
      std::cout << render(demazure_char(rs, w, parse_weight(rs, weight)), format) << "\n";
      return 0;
    }
    if (s->parsed()) {
      if (action == "validate") {
        auto val = sl2::cross_validate(k);
        for (auto& l : val.lines)
          std::cout << (l.pass ? "PASS " : "FAIL ") << l.what << (l.detail.empty() ? "" : " [" + l.detail + "]")
                    << "\n";
        return val.pass() ? 0 : 1;
      }
      auto rep = sl2::fusion(sl2::default_alphas(k));
      if (action == "build") {
        auto bad = sl2::compatibility_failure(rep);
        std::cout << "dim " << rep.dim() << "\n";
        std::cout << "span of cyclic vector " << sl2::span_dimension(rep) << "\n";
        for (auto& r : sl2::graded_relations(rep, k)) std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
        if (bad) std::cout << "FAIL " << *bad << "\n";
        return bad ? 1 : 0;
      }
      std::cout << render(sl2::graded_character(rep), format, true) << "\n";
      return 0;
    }
  } catch (const io::json::exception& err) {
    std::cerr << "error: bad JSON: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
