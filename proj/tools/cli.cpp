#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <random>
#include <sstream>

#include "redalg/expr.hpp"
#include "redalg/forms.hpp"
#include "redalg/oracle.hpp"
#include "redalg/parallel.hpp"
#include "redalg/pieri.hpp"
#include "redalg/zhelobenko.hpp"

namespace redalg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Report {
  json inputs = json::object();
  std::string result;
  std::vector<std::pair<std::string, bool>> checks;

  void check(const std::string& name, bool pass) { checks.emplace_back(name, pass); }
  bool ok() const {
    for (const auto& [n, p] : checks) {
      if (!p) return false;
    }
    return true;
  }
};

struct Options {
  int n = 2;
  std::string parity = "even";
  bool json = false;
  std::uint64_t seed = 1;
};

Parity parity_of(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw std::invalid_argument("parity must be 'even' or 'odd'");
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

WeightPoint weight_list(const std::string& text, int n) {
  WeightPoint mu;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      Rational q(item);
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      mu.push_back(q);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad weight entry '" + item + "'");
    }
  }
  if (int(mu.size()) != n) throw std::invalid_argument("weight needs exactly n entries");
  return mu;
}

std::string join(const std::vector<Partition>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + partition_to_string(ps[i]);
  return s + "}";
}

template <Parity P>
PolyModuleElement<P> module_of(const std::string& text, int n) {
  return act(parse_element<P>(text, n), PolyModuleElement<P>::vacuum(n));
}

// Random elements for the self test.
template <Parity P>
Element<P> random_element(std::mt19937_64& rng, int n, int terms, int deg) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Element<P> e(n);
  for (int t = 0; t < terms; ++t) {
    MultiIndex a(n), b(n);
    int d = uni(0, deg);
    for (int k = 0; k < d; ++k) {
      MultiIndex& m = uni(0, 1) ? a : b;
      int i = uni(0, n - 1);
      if (P == Parity::even || m[i] == 0) m.add(i, 1);
    }
    RatFunc c(Rational(uni(1, 5), uni(1, 3)));
    if (n >= 2 && uni(0, 1)) {
      int i = uni(1, n - 1);
      c *= RatFunc::hk(i, uni(i + 1, n), uni(1, 3));
    }
    e.add_term({a, b}, c);
  }
  return e;
}

void emit(const Options& opt, const Report& r, std::ostream& out) {
  if (opt.json) {
    json j;
    j["inputs"] = r.inputs;
    j["result"] = r.result;
    j["checks"] = json::array();
    for (const auto& [name, pass] : r.checks) j["checks"].push_back({{"name", name}, {"pass", pass}});
    out << j.dump(2) << "\n";
    return;
  }
  out << r.result;
  if (!r.result.empty() && r.result.back() != '\n') out << "\n";
  for (const auto& [name, pass] : r.checks) {
    if (!pass) out << "FAILED check: " << name << "\n";
  }
}

// ---- verbs ----

template <Parity P>
Report normal_order_verb(const Options& opt, const std::string& expr) {
  Report r;
  r.inputs = {{"n", opt.n}, {"parity", opt.parity}, {"expr", expr}};
  auto u = parse_element<P>(expr, opt.n);
  r.result = u.to_string();
  r.check("print/parse round trip", parse_element<P>(r.result, opt.n) == u);
  return r;
}

template <Parity P>
Report mul_verb(const Options& opt, const std::string& us, const std::string& vs) {
  Report r;
  r.inputs = {{"n", opt.n}, {"parity", opt.parity}, {"u", us}, {"v", vs}};
  auto u = parse_element<P>(us, opt.n), v = parse_element<P>(vs, opt.n);
  auto uv = diamond_mul(u, v);
  r.result = uv.to_string();
  r.check("print/parse round trip", parse_element<P>(r.result, opt.n) == uv);
  return r;
}

template <Parity P>
Report form_verb(const Options& opt, const std::string& us, const std::string& vs) {
  Report r;
  r.inputs = {{"n", opt.n}, {"parity", opt.parity}, {"u", us}, {"v", vs}};
  auto u = module_of<P>(us, opt.n), v = module_of<P>(vs, opt.n);
  RatFunc f = contravariant_form(u, v);
  r.result = f.to_string();
  r.check("symmetry", f == contravariant_form(v, u));
  return r;
}

template <Parity P>
Report norm_table_verb(const Options& opt, int deg, const std::string& mu_text, bool verify) {
  Report r;
  r.inputs = {{"n", opt.n}, {"parity", opt.parity}, {"deg", deg}};
  if (deg < 0) throw std::invalid_argument("degree must be non-negative");
  WeightPoint mu;
  if (!mu_text.empty()) {
    mu = weight_list(mu_text, opt.n);
    r.inputs["mu"] = mu_text;
  }
  std::vector<MultiIndex> nus;
  if (P == Parity::odd) {
    for (const auto& nu : binary_indices(opt.n)) {
      if (nu.degree() <= deg) nus.push_back(nu);
    }
  } else {
    for (int d = 0; d <= deg; ++d) {
      for (const auto& nu : multi_indices(opt.n, d)) nus.push_back(nu);
    }
  }
  std::vector<std::string> rows(nus.size());
  std::vector<char> agree(nus.size(), 1);
  parallel_for(nus.size(), [&](std::size_t k) {
    const auto& nu = nus[k];
    RatFunc closed = closed_norm<P>(nu);
    std::string row = nu.to_string() + "\t" + closed.to_string();
    if (!mu.empty()) {
      try {
        row += "\t" + evaluate_norm(nu, mu, P).get_str();
      } catch (const InvalidWeight&) {
        row += "\tsingular";
      }
    }
    rows[k] = row;
    if (verify) {
      auto m = PolyModuleElement<P>::monomial(nu);
      agree[k] = contravariant_form(m, m) == closed;
    }
  });
  std::string table = mu.empty() ? "nu\tnorm\n" : "nu\tnorm\tvalue\n";
  for (const auto& row : rows) table += row + "\n";
  r.result = table;
  if (verify) {
    bool all = std::all_of(agree.begin(), agree.end(), [](char c) { return c != 0; });
    r.check("closed form equals contravariant form", all);
  }
  return r;
}

template <Parity P>
Report zhelobenko_verb(const Options& opt, const std::string& word, const std::string& expr, bool inverse) {
  Report r;
  r.inputs = {{"n", opt.n}, {"parity", opt.parity}, {"word", word}, {"expr", expr}, {"inverse", inverse}};
  WeylWord w;
  if (word == "w0") w = WeylWord::longest(opt.n);
  else w.letters = int_list(word);
  for (int c : w.letters) {
    if (c < 1 || c >= opt.n) throw std::invalid_argument("word letter out of range: " + std::to_string(c));
  }
  auto u = parse_element<P>(expr, opt.n);
  auto img = inverse ? xicheck_word(w, u) : qcheck_word(w, u);
  r.result = img.to_string();
  auto back = inverse ? qcheck_word(w, img) : xicheck_word(w, img);
  r.check("inverse recovers the input", back == u);
  return r;
}

Report oracle_verb(const Options& opt, int deg, Parity parity, int samples) {
  Report r;
  r.inputs = {{"n", opt.n}, {"parity", opt.parity}, {"deg", deg}, {"samples", samples}, {"seed", opt.seed}};
  if (opt.n > 4) throw std::invalid_argument("the oracle is limited to n <= 4");
  if (deg < 0 || samples < 1) throw std::invalid_argument("degree and samples must be positive");
  std::mt19937_64 rng(opt.seed);
  struct Job {
    WeightPoint mu;
    MultiIndex nu;
    Rational lhs, rhs;
  };
  std::vector<Job> jobs;
  for (int s = 0; s < samples; ++s) {
    WeightPoint mu = generic_weight(opt.n, deg, rng);
    for (int d = 0; d <= deg; ++d) {
      for (const auto& nu : multi_indices(opt.n, d)) {
        if (parity == Parity::odd && !nu.is_binary()) continue;
        jobs.push_back({mu, nu, 0, 0});
      }
    }
  }
  parallel_for(jobs.size(), [&](std::size_t k) {
    jobs[k].lhs = oracle_norm(jobs[k].nu, jobs[k].mu, parity);
    jobs[k].rhs = evaluate_norm(jobs[k].nu, jobs[k].mu, parity);
  });
  std::string table = "mu\tnu\toracle\tclosed\tstatus\n";
  bool all = true;
  for (const auto& j : jobs) {
    std::string mu;
    for (std::size_t i = 0; i < j.mu.size(); ++i) mu += (i ? "," : "") + j.mu[i].get_str();
    bool ok = j.lhs == j.rhs;
    all = all && ok;
    table += "(" + mu + ")\t" + j.nu.to_string() + "\t" + j.lhs.get_str() + "\t" + j.rhs.get_str() + "\t" +
             (ok ? "pass" : "FAIL") + "\n";
  }
  r.result = table;
  r.check("oracle norm equals closed norm", all);
  return r;
}

Report pieri_verb(const Options& opt, const std::string& mu_text, int m, bool dual) {
  Report r;
  r.inputs = {{"n", opt.n}, {"mu", mu_text}, {"m", m}, {"dual", dual}};
  Partition mu = parse_partition(mu_text);
  auto set = dual ? dual_pieri_decompose(mu, m, opt.n) : pieri_decompose(mu, m, opt.n);
  auto strips = strip_set(mu, m, opt.n, dual);
  auto dim = dimension_check(mu, set, m, opt.n, dual);
  std::string res = join(set);
  if (!opt.json) res += "\ndimension " + dim.sum.get_str() + " = " + dim.expected.get_str();
  r.result = res;
  r.check(dual ? "equals the vertical strips" : "equals the horizontal strips", set == strips);
  r.check("dimension sum", dim.pass());
  return r;
}

// Aggregate of the property suites on a reduced range.
Report selftest_verb(const Options& opt, const std::string& level) {
  if (level != "quick" && level != "full") throw std::invalid_argument("level must be 'quick' or 'full'");
  const bool full = level == "full";
  Report r;
  r.inputs = {{"level", level}, {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed);
  const int triples = full ? 200 : 20;
  const int max_n = full ? 4 : 3;

  auto assoc = [&]<Parity P>(std::integral_constant<Parity, P>) {
    bool ok = true;
    for (int n = 2; n <= max_n; ++n) {
      for (int t = 0; t < triples; ++t) {
        auto a = random_element<P>(rng, n, 2, 2), b = random_element<P>(rng, n, 2, 2),
             c = random_element<P>(rng, n, 2, 2);
        ok = ok && diamond_mul(diamond_mul(a, b), c) == diamond_mul(a, diamond_mul(b, c));
        ok = ok && epsilon(epsilon(a)) == a;
        ok = ok && parse_element<P>(a.to_string(), n) == a;
      }
    }
    return ok;
  };
  r.check("associativity, epsilon involution, round trip (even)", assoc(std::integral_constant<Parity, Parity::even>{}));
  r.check("associativity, epsilon involution, round trip (odd)", assoc(std::integral_constant<Parity, Parity::odd>{}));

  bool routes = true;
  for (int n = 2; n <= max_n; ++n) {
    for (int d = 0; d <= (full ? 4 : 3) - (n == 4); ++d) {
      for (const auto& nu : multi_indices(n, d)) {
        auto m = PolyModuleElement<Parity::even>::monomial(nu);
        RatFunc f = contravariant_form(m, m);
        routes = routes && f == closed_norm_even(nu) && f == form_via_zhelobenko<Parity::even>(nu, nu) &&
                 f == form_via_shifted_projector<Parity::even>(nu, nu);
      }
    }
    for (const auto& nu : binary_indices(n)) {
      auto m = PolyModuleElement<Parity::odd>::monomial(nu);
      RatFunc f = contravariant_form(m, m);
      routes = routes && f == closed_norm_odd(nu) && f == form_via_zhelobenko<Parity::odd>(nu, nu) &&
               f == form_via_shifted_projector<Parity::odd>(nu, nu);
    }
  }
  r.check("closed norm, Zhelobenko route and projector route agree", routes);

  bool oracle = true;
  for (int n = 2; n <= (full ? 3 : 2); ++n) {
    WeightPoint mu = generic_weight(n, 3, rng);
    for (int d = 0; d <= 3; ++d) {
      for (const auto& nu : multi_indices(n, d)) {
        oracle = oracle && oracle_norm(nu, mu, Parity::even) == evaluate_norm(nu, mu, Parity::even);
        if (nu.is_binary()) oracle = oracle && oracle_norm(nu, mu, Parity::odd) == evaluate_norm(nu, mu, Parity::odd);
      }
    }
  }
  r.check("classical oracle matches the closed norms", oracle);

  bool gl2 = true;
  for (const auto& c : gl2_example_check(generic_weight(2, 2, rng))) gl2 = gl2 && c.pass;
  r.check("gl2 action table", gl2);

  bool pieri = true;
  for (int n = 1; n <= (full ? 5 : 3); ++n) {
    for (int size = 0; size <= (full ? 8 : 4); ++size) {
      for (const auto& mu : partitions_of(size, n)) {
        for (int m = 0; m <= (full ? 4 : 2); ++m) {
          auto even = pieri_decompose(mu, m, n);
          pieri = pieri && even == strip_set(mu, m, n, false) && dimension_check(mu, even, m, n, false).pass();
          if (m <= n) {
            auto odd = dual_pieri_decompose(mu, m, n);
            pieri = pieri && odd == strip_set(mu, m, n, true) && dimension_check(mu, odd, m, n, true).pass();
          }
        }
      }
    }
  }
  r.check("Pieri and dual Pieri rules", pieri);

  std::string text;
  for (const auto& [name, pass] : r.checks) text += std::string(pass ? "pass" : "FAIL") + "\t" + name + "\n";
  r.result = text;
  return r;
}

template <class F>
Report dispatch(Parity p, F&& f) {
  return p == Parity::even ? f(std::integral_constant<Parity, Parity::even>{})
                           : f(std::integral_constant<Parity, Parity::odd>{});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the h-deformed differential operator algebras"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit JSON");
  app.add_option("--seed", opt.seed, "seed for random sampling");

  auto common = [&](CLI::App* sub, bool with_parity = true) {
    sub->add_option("--n", opt.n, "number of variables")->check(CLI::Range(1, kMaxN));
    if (with_parity) sub->add_option("--parity", opt.parity, "even or odd")->check(CLI::IsMember({"even", "odd"}));
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_option("--seed", opt.seed, "seed for random sampling");
  };

  std::string expr, u, v, word = "w0", mu, level = "quick";
  int deg = 3, m = 1, samples = 3;
  bool dual = false, inverse = false, verify = true;

  auto* no = app.add_subcommand("normal-order", "print the normal form of an expression");
  common(no);
  no->add_option("--expr", expr, "element")->required();

  auto* mul = app.add_subcommand("mul", "diamond product of two elements");
  common(mul);
  mul->add_option("--u", u)->required();
  mul->add_option("--v", v)->required();

  auto* form = app.add_subcommand("form", "contravariant form of u.1 and v.1 in the polynomial module");
  common(form);
  form->add_option("--u", u)->required();
  form->add_option("--v", v)->required();

  auto* table = app.add_subcommand("norm-table", "closed norms of all :x^nu: up to a degree (TSV)");
  common(table);
  table->add_option("--deg", deg, "maximal |nu|");
  table->add_option("--mu", mu, "evaluate at this weight, e.g. 1/2,0");
  table->add_flag("!--no-verify", verify, "skip the comparison with the contravariant form");

  auto* zh = app.add_subcommand("zhelobenko", "Zhelobenko automorphisms");
  auto* zh_apply = zh->add_subcommand("apply", "apply q_w (or its inverse) to an element");
  zh->require_subcommand(1);
  common(zh_apply);
  zh_apply->add_option("--word", word, "comma separated simple reflections, or w0");
  zh_apply->add_option("--expr", expr)->required();
  zh_apply->add_flag("--inverse", inverse, "apply the inverse map");

  auto* oracle = app.add_subcommand("oracle", "classical gl_n cross-check");
  auto* oracle_check = oracle->add_subcommand("check", "oracle norms against the closed form");
  oracle->require_subcommand(1);
  common(oracle_check);
  oracle_check->add_option("--deg", deg, "maximal |nu|");
  oracle_check->add_option("--samples", samples, "number of generic weights");

  auto* pieri = app.add_subcommand("pieri", "Pieri rule from the zeros of the norms");
  common(pieri, false);
  pieri->add_option("--mu", mu, "partition, e.g. 2,1")->required();
  pieri->add_option("--m", m, "number of added boxes");
  pieri->add_flag("--dual", dual, "dual rule (vertical strips)");

  auto* self = app.add_subcommand("selftest", "run the property suites");
  self->add_option("--level", level, "quick or full");
  self->add_flag("--json", opt.json, "emit JSON");
  self->add_option("--seed", opt.seed, "seed for random sampling");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Parity p = parity_of(opt.parity);
    Report rep;
    if (no->parsed()) {
      rep = dispatch(p, [&]<Parity P>(std::integral_constant<Parity, P>) { return normal_order_verb<P>(opt, expr); });
    } else if (mul->parsed()) {
      rep = dispatch(p, [&]<Parity P>(std::integral_constant<Parity, P>) { return mul_verb<P>(opt, u, v); });
    } else if (form->parsed()) {
      rep = dispatch(p, [&]<Parity P>(std::integral_constant<Parity, P>) { return form_verb<P>(opt, u, v); });
    } else if (table->parsed()) {
      rep = dispatch(p, [&]<Parity P>(std::integral_constant<Parity, P>) {
        return norm_table_verb<P>(opt, deg, mu, verify);
      });
    } else if (zh_apply->parsed()) {
      rep = dispatch(p, [&]<Parity P>(std::integral_constant<Parity, P>) {
        return zhelobenko_verb<P>(opt, word, expr, inverse);
      });
    } else if (oracle_check->parsed()) {
      rep = oracle_verb(opt, deg, p, samples);
    } else if (pieri->parsed()) {
      rep = pieri_verb(opt, mu, m, dual);
    } else if (self->parsed()) {
      rep = selftest_verb(opt, level);
    }
    emit(opt, rep, out);
    return rep.ok() ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace redalg::cli
