#include "sltensor/report.hpp"
#include "sltensor/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sltensor;

namespace {

struct Options {
  std::string n, V, S, g, bound, samples, b, a, lambda, k, l;
  std::uint64_t seed = SuiteConfig{}.seed;
  std::string out, format = "table", config;
  bool timing = false;
};

void add_shared(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "rank parameter n (the algebra is sl(n+1))");
  app->add_option("--V", o.V, "gl(n)-module: va:a, wedge:k, wedge:*, hw:l1,..,ln, tensor(A,B)");
  app->add_option("--S", o.S, "subset of 1..n as a comma list, \"all\", or \"\" for the empty set");
  app->add_option("--g", o.g, "polynomial with zero constant term, e.g. t1*t2");
  app->add_option("--box,--deg", o.bound, "box size, degree bound or window radius");
  app->add_option("--samples", o.samples, "number of sampled weights");
  app->add_option("--b", o.b, "comma list of rationals");
  app->add_option("--a", o.a, "rational parameter of the rank-one module");
  app->add_option("--lambda", o.lambda, "comma list of rationals");
  app->add_option("--k", o.k, "exterior degree");
  app->add_option("--l", o.l, "basis index of V (1-based)");
}

SuiteItem item_for(const std::string& check, const Options& o) {
  SuiteItem it{check, {}};
  auto put = [&](const std::string& key, const std::string& value) {
    if (!value.empty()) it.params[key] = value;
  };
  put("n", o.n);
  put("V", o.V);
  it.params["S"] = o.S;
  put("g", o.g);
  put("N", o.bound);
  put("samples", o.samples);
  put("b", o.b);
  put("a", o.a);
  put("lambda", o.lambda);
  put("k", o.k);
  put("l", o.l);
  return it;
}

// Subcommand -> checks it runs.
const std::vector<std::pair<std::string, std::vector<std::string>>> kCommands = {
    {"relations", {"relations", "fourier", "casimir"}},
    {"simplicity", {"simplicity"}},
    {"derham", {"derham"}},
    {"witten", {"witten"}},
    {"whittaker", {"whittaker"}},
    {"coherent", {"coherent"}},
    {"hfree", {"hfree", "hfree_composed", "intertwiner"}},
    {"nilsson", {"nilsson_relations", "nilsson"}},
    {"weighting", {"weighting"}},
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for tensor modules of sl(n+1)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "seed for every sampled quantity");
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--timing", o.timing, "include measured runtimes in the report");

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, checks] : kCommands) {
    auto* sub = app.add_subcommand(name, "run: " + [&] {
      std::string s;
      for (const auto& c : checks) s += (s.empty() ? "" : ", ") + c;
      return s;
    }());
    add_shared(sub, o);
    subs[name] = sub;
  }
  subs["derham"]->description("run: derham; with --k, the de Rham image inside wedge^k");
  auto* suite = app.add_subcommand("suite", "run a JSON config, or the acceptance grid when none is given");
  suite->add_option("--config", o.config, "path to a suite config");
  suite->add_option("--seed", o.seed, "overrides the config seed");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<CheckRecord> records;
    if (suite->parsed()) {
      SuiteConfig cfg = o.config.empty() ? default_suite() : SuiteConfig::from_json(read_file(o.config));
      if (suite->count("--seed") || app.count("--seed")) cfg.seed = o.seed;
      records = run_suite(cfg);
    } else {
      for (const auto& [name, checks] : kCommands) {
        if (!subs[name]->parsed()) continue;
        SuiteConfig cfg;
        cfg.seed = o.seed;
        if (name == "derham" && !o.k.empty())
          cfg.items.push_back(item_for("derham_image", o));
        else
          for (const auto& c : checks) cfg.items.push_back(item_for(c, o));
        records = run_suite(cfg);
      }
    }
    std::string text = emit_report(records, parse_report_format(o.format), o.timing);
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out);
      if (!f) throw InvalidInput("cannot write " + o.out);
      f << text;
    }
    return any_failed(records) ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
