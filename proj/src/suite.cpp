#include "sltensor/suite.hpp"

#include "sltensor/hfree.hpp"
#include "sltensor/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>

namespace sltensor {

namespace {

struct Outcome {
  Status status = Status::pass;
  std::string witness;
};

class Params {
 public:
  explicit Params(const SuiteItem& item) : p_(item.params) {}

  bool has(const std::string& k) const { return p_.count(k) > 0; }
  std::string text(const std::string& k, const std::string& fallback = "") const {
    auto it = p_.find(k);
    return it == p_.end() ? fallback : it->second;
  }
  std::string need(const std::string& k) const {
    auto it = p_.find(k);
    if (it == p_.end()) throw InvalidInput("missing parameter '" + k + "'");
    return it->second;
  }
  int integer(const std::string& k, int fallback) const {
    return has(k) ? static_cast<int>(to_long(parse_rational(need(k)))) : fallback;
  }
  int n() const { return integer("n", 0) > 0 ? integer("n", 0) : throw InvalidInput("n must be positive"); }
  GlModule V() const { return parse_module_spec(need("V"), n()); }
  Subset S() const { return Subset::parse(text("S", ""), n()); }
  MultiPoly g() const { return has("g") && !need("g").empty() ? parse_poly_expr(need("g"), n(), true) : MultiPoly(n()); }
  std::vector<Rational> list(const std::string& k) const { return parse_rational_list(need(k)); }
  Rational rational(const std::string& k) const { return parse_rational(need(k)); }

 private:
  const std::map<std::string, std::string>& p_;
};

// "h2" or "e(1,3)", 1-based.
SlElement parse_sl_element(const std::string& text, int n) {
  auto bad = [&] { return InvalidInput("bad sl element '" + text + "'"); };
  try {
    if (text.size() >= 2 && text[0] == 'h') {
      int k = std::stoi(text.substr(1));
      if (k < 1 || k > n) throw bad();
      return SlElement::h(k - 1);
    }
    if (text.rfind("e(", 0) == 0 && text.back() == ')') {
      auto comma = text.find(',');
      int i = std::stoi(text.substr(2, comma - 2)), j = std::stoi(text.substr(comma + 1));
      if (i < 1 || j < 1 || i > n + 1 || j > n + 1 || i == j) throw bad();
      return SlElement::e(i - 1, j - 1);
    }
  } catch (const std::logic_error&) {
  }
  throw bad();
}

// Fault injection: "corrupt" names one table image to negate.
template <typename Op>
SlPresentation<Op> maybe_corrupt(SlPresentation<Op> p, const Params& params) {
  if (params.has("corrupt")) {
    auto x = parse_sl_element(params.need("corrupt"), p.n);
    p.image(x) = -p.image(x);
  }
  return p;
}

Outcome from_verdict(const Verdict& v) { return {v.status, v.witness}; }

template <typename Op>
Outcome from_presentation(const PresentationVerdict& v) {
  if (v.ok) return {Status::pass, std::to_string(v.pairs_checked) + " bracket pairs"};
  const auto& f = v.failures.front();
  return {Status::fail, "[" + f.x.str() + "," + f.y.str() + "] residual " + f.residual};
}

// Lexicographically largest weight; for a simple module this is its highest weight.
std::vector<Rational> top_weight(const GlModule& v) {
  auto w = v.weights();
  return *std::max_element(w.begin(), w.end());
}

Outcome check_relations(const Params& p) {
  auto pres = twist_exp(maybe_corrupt(build_omega(p.V(), p.S()), p), p.g());
  return from_presentation<WeylOp>(verify_presentation(pres));
}

Outcome check_fourier(const Params& p) {
  const int n = p.n();
  GlModule v = p.V();
  Subset s = p.S();
  auto direct = maybe_corrupt(build_omega(v, s), p);
  auto via = twist_fourier(build_omega(v, Subset::none(n)), s);
  for (const auto& x : sl_basis(n))
    if (!(direct.image(x) == via.image(x))) return {Status::fail, x.str() + ": " + direct.image(x).str() + " vs " + via.image(x).str()};
  for (int i = 0; i < n; ++i)
    for (const WeylOp& u : {WeylOp::t(n, i), WeylOp::d(n, i)}) {
      WeylOp r = u;
      for (int k = 0; k < 4; ++k) r = fourier(r, s);
      if (!(r == u)) return {Status::fail, "fourier^4(" + u.str() + ") = " + r.str()};
    }
  return {Status::pass, "all images agree; fourier^4 = id on generators"};
}

Outcome check_casimir(const Params& p) {
  GlModule v = p.V();
  auto c = casimir_scalar(build_omega(v, p.S()));
  if (!c.scalar) return {Status::fail, "Casimir not scalar: " + c.residual};
  auto base = casimir_scalar(build_omega(v, Subset::none(p.n())));
  auto twisted = casimir_scalar(twist_exp(build_omega(v, p.S()), p.g()));
  if (!base.scalar || *base.scalar != *c.scalar) return {Status::fail, "depends on S: " + c.scalar->str()};
  if (!twisted.scalar || *twisted.scalar != *c.scalar) return {Status::fail, "depends on the exp twist"};
  return {Status::pass, "Casimir acts by " + c.scalar->str()};
}

Outcome check_model_equivalence(const Params& p) {
  return from_verdict(model_equivalence_check(TensorContext::make(p.V(), p.S(), p.g()), p.integer("N", 4)));
}

Outcome check_simplicity(const Params& p) {
  auto ctx = TensorContext::make(p.V(), p.S(), p.g());
  Prediction pred = ctx.V.dim() == 1 ? va_prediction(ctx.n, ctx.V.weight(0)[0], ctx.S)
                                     : classify_and_predict(top_weight(ctx.V), ctx.S).prediction;
  auto r = simplicity_witness(ctx, p.integer("N", 6));
  std::string expect = pred == Prediction::simple ? "simple" : "not simple";
  std::string note = simplicity_name(r.kind) + " (predicted " + expect + "): " + r.note;
  if (r.kind == SimplicityKind::inconclusive) return {Status::inconclusive, note};
  bool agree = (r.kind == SimplicityKind::simple_witnessed) == (pred == Prediction::simple);
  return {agree ? Status::pass : Status::fail, note};
}

Outcome check_tprime(const Params& p) {
  auto r = known_submodule_check(TensorContext::make(p.V(), p.S(), p.g()), {}, p.integer("N", 6));
  std::string flags = std::string(" invariant=") + (r.invariant ? "1" : "0") + " whole=" + (r.whole ? "1" : "0") +
                      " zero=" + (r.zero ? "1" : "0");
  if (r.verdict.status == Status::inconclusive) return {Status::inconclusive, r.verdict.witness};
  return {r.invariant ? Status::pass : Status::fail, r.verdict.witness + flags};
}

Outcome check_derham_image(const Params& p) {
  const int k = p.integer("k", 1);
  auto ctx = TensorContext::make(GlModule::exterior(p.n(), k), p.S(), p.g());
  auto r = known_submodule_check(ctx, {KnownSubmodule::Kind::derham_image, k}, p.integer("N", 4));
  if (r.verdict.status == Status::fail) return {Status::fail, r.verdict.witness};
  if (r.invariant && r.nonzero && r.proper) return {Status::pass, "invariant, nonzero, proper: " + r.verdict.witness};
  return {Status::fail, std::string("not a proper nonzero submodule (nonzero=") + (r.nonzero ? "1" : "0") +
                            " proper=" + (r.proper ? "1" : "0") + ")"};
}

Outcome check_derham(const Params& p) {
  return from_verdict(derham_check(TensorContext::make(p.V(), p.S(), p.g()), p.integer("N", 5)));
}

Outcome check_witten(const Params& p) { return from_verdict(witten_compare(p.n(), p.g(), p.integer("N", 4))); }

Outcome check_whittaker(const Params& p) {
  return from_verdict(whittaker_check(p.list("b"), p.S(), p.V(), p.integer("l", 1) - 1));
}

Outcome check_coherent(const Params& p) {
  auto r = coherent_checks(p.V(), p.S(), p.list("lambda"), p.integer("N", 2));
  Outcome o = from_verdict(r.verdict);
  for (const auto& i : r.info) o.witness += "; " + i;
  return o;
}

Outcome check_hfree(const Params& p) {
  auto pres = maybe_corrupt(build_hfree(p.list("b"), p.V(), p.S()), p);
  if (!h_images_literal(pres)) return {Status::fail, "h images are not multiplication operators"};
  return from_presentation<ShiftOp>(verify_presentation(pres));
}

Outcome check_hfree_composed(const Params& p) {
  auto table = maybe_corrupt(build_hfree(p.list("b"), p.V(), p.S()), p);
  auto composed = hfree_composed(p.list("b"), p.V(), p.S());
  for (const auto& x : sl_basis(p.n()))
    if (!(table.image(x) == composed.image(x)))
      return {Status::fail, x.str() + ": table " + table.image(x).str() + " vs composed " + composed.image(x).str()};
  return {Status::pass, "table equals the composed presentation"};
}

Outcome check_nilsson_relations(const Params& p) {
  return from_presentation<ShiftOp>(verify_presentation(build_nilsson(p.rational("a"), p.S())));
}

Outcome check_intertwiner(const Params& p) {
  return from_verdict(verify_intertwiner(p.list("b"), p.V(), p.S(), p.integer("N", 4)));
}

Outcome check_nilsson(const Params& p) {
  auto r = nilsson_correspondence_check(p.rational("a"), p.list("b"), p.S());
  Outcome o = from_verdict(r.verdict);
  std::string variants;
  for (const auto& v : r.matching_variants) variants += (variants.empty() ? "" : " | ") + v;
  o.witness += "; conventions that match: " + (variants.empty() ? std::string("none") : variants);
  return o;
}

Outcome check_weighting(const Params& p, std::uint64_t seed) {
  return from_verdict(weighting_iso_check(p.list("b"), p.V(), p.S(), p.integer("samples", 20), seed));
}

Outcome check_classify(const Params& p) {
  auto lam = p.list("lambda");
  Subset s = p.S();
  auto cls = classify_shifted_weight(lam);
  if (!is_dominant(lam)) return {Status::inconclusive, "class " + cls.str() + "; lambda not dominant, module not built"};
  auto pred = classify_and_predict(lam, s);
  auto r = window_submodule_search(TensorContext::make(GlModule::highest_weight(lam), s), p.integer("N", 4));
  std::string expect = pred.prediction == Prediction::simple ? "simple" : "not simple";
  std::string note = "class " + pred.cls.str() + ", predicted " + expect + "; " + simplicity_name(r.kind) + ": " + r.note;
  if (r.kind == SimplicityKind::inconclusive) return {Status::inconclusive, note};
  bool agree = (r.kind == SimplicityKind::simple_witnessed) == (pred.prediction == Prediction::simple);
  return {agree ? Status::pass : Status::fail, note};
}

using CheckFn = std::function<Outcome(const Params&, std::uint64_t)>;

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> r = {
      {"relations", [](const Params& p, std::uint64_t) { return check_relations(p); }},
      {"fourier", [](const Params& p, std::uint64_t) { return check_fourier(p); }},
      {"casimir", [](const Params& p, std::uint64_t) { return check_casimir(p); }},
      {"model_equivalence", [](const Params& p, std::uint64_t) { return check_model_equivalence(p); }},
      {"simplicity", [](const Params& p, std::uint64_t) { return check_simplicity(p); }},
      {"tprime", [](const Params& p, std::uint64_t) { return check_tprime(p); }},
      {"derham_image", [](const Params& p, std::uint64_t) { return check_derham_image(p); }},
      {"derham", [](const Params& p, std::uint64_t) { return check_derham(p); }},
      {"witten", [](const Params& p, std::uint64_t) { return check_witten(p); }},
      {"whittaker", [](const Params& p, std::uint64_t) { return check_whittaker(p); }},
      {"coherent", [](const Params& p, std::uint64_t) { return check_coherent(p); }},
      {"hfree", [](const Params& p, std::uint64_t) { return check_hfree(p); }},
      {"hfree_composed", [](const Params& p, std::uint64_t) { return check_hfree_composed(p); }},
      {"nilsson_relations", [](const Params& p, std::uint64_t) { return check_nilsson_relations(p); }},
      {"intertwiner", [](const Params& p, std::uint64_t) { return check_intertwiner(p); }},
      {"nilsson", [](const Params& p, std::uint64_t) { return check_nilsson(p); }},
      {"weighting", check_weighting},
      {"classify", [](const Params& p, std::uint64_t) { return check_classify(p); }},
  };
  return r;
}

}  // namespace

std::vector<std::string> known_checks() {
  std::vector<std::string> out;
  for (const auto& [k, f] : registry()) out.push_back(k);
  return out;
}

CheckRecord run_check(const SuiteItem& item, std::uint64_t seed) {
  auto it = registry().find(item.check);
  if (it == registry().end()) throw InvalidInput("unknown check '" + item.check + "'");
  CheckRecord rec;
  rec.id = item.check;
  for (const auto& [k, v] : item.params) rec.params.emplace_back(k, v);
  auto start = std::chrono::steady_clock::now();
  Outcome o = it->second(Params(item), seed);
  rec.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  rec.status = o.status;
  if (!o.witness.empty() || o.status == Status::fail) rec.witness = o.witness.empty() ? "(no detail)" : o.witness;
  return rec;
}

std::vector<CheckRecord> run_suite(const SuiteConfig& config) {
  for (const auto& item : config.items)
    if (!registry().count(item.check)) throw InvalidInput("unknown check '" + item.check + "'");
  std::vector<CheckRecord> out;
  for (const auto& item : config.items) out.push_back(run_check(item, config.seed));
  return out;
}

SuiteConfig SuiteConfig::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
  }
  SuiteConfig c;
  if (doc.contains("seed")) c.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("items"))
    for (const auto& it : doc.at("items")) {
      SuiteItem item;
      item.check = it.at("check").get<std::string>();
      if (it.contains("params"))
        for (const auto& [k, v] : it.at("params").items()) item.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
      c.items.push_back(item);
    }
  return c;
}

namespace {

std::vector<std::string> subset_texts(int n) {
  std::vector<std::string> out;
  for (const auto& s : all_subsets(n)) {
    std::string t;
    for (int i : s.members()) t += (t.empty() ? "" : ",") + std::to_string(i + 1);
    out.push_back(t);
  }
  return out;
}

std::string first_n(const std::vector<std::string>& xs, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += (i ? "," : "") + xs[i];
  return out;
}

}  // namespace

SuiteConfig default_suite() {
  SuiteConfig c;
  auto add = [&](const std::string& check, std::map<std::string, std::string> params) {
    c.items.push_back({check, std::move(params)});
  };
  const std::vector<std::string> a_grid = {"0", "1/3", "1/2", "1", "4/3", "-2"};
  auto module_grid = [&](int n) {
    std::vector<std::string> vs;
    for (const auto& a : a_grid) vs.push_back("va:" + a);
    for (int k = 0; k <= n; ++k) vs.push_back("wedge:" + std::to_string(k));
    if (n == 2) vs.push_back("hw:2,1");
    return vs;
  };
  for (int n = 1; n <= 3; ++n)
    for (const auto& v : module_grid(n))
      for (const auto& s : subset_texts(n)) {
        std::map<std::string, std::string> p{{"n", std::to_string(n)}, {"V", v}, {"S", s}};
        add("relations", p);
        add("fourier", p);
        p["g"] = "t1";
        add("casimir", p);
      }
  for (int n = 1; n <= 2; ++n)
    for (const auto& a : a_grid)
      for (const auto& s : subset_texts(n))
        for (std::string g : {"0", "t1", "t1*t2"}) {
          if (n == 1 && g == "t1*t2") continue;
          add("simplicity", {{"n", std::to_string(n)}, {"V", "va:" + a}, {"S", s}, {"g", g}, {"N", "6"}});
        }
  for (int n = 2; n <= 3; ++n)
    for (const auto& s : subset_texts(n))
      for (std::string g : {"0", "t1"}) {
        for (int k = 1; k < n; ++k)
          add("derham_image", {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"S", s}, {"g", g}, {"N", "4"}});
        for (int k : {0, n})
          add("simplicity", {{"n", std::to_string(n)}, {"V", "wedge:" + std::to_string(k)}, {"S", s}, {"g", g}, {"N", "6"}});
      }
  for (std::string lam : {"1,1", "2,1", "1,0", "1/2,0", "5/2,1", "3,1"})
    for (const auto& s : subset_texts(2)) add("classify", {{"n", "2"}, {"lambda", lam}, {"S", s}, {"N", "4"}});
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : subset_texts(n))
      for (std::string g : {"0", "t1", "t1*t2"}) {
        if (n == 1 && g == "t1*t2") continue;
        add("derham", {{"n", std::to_string(n)}, {"V", "wedge:*"}, {"S", s}, {"g", g}, {"N", "5"}});
        add("model_equivalence", {{"n", std::to_string(n)}, {"V", n == 1 ? "va:0" : "wedge:1"}, {"S", s}, {"g", g}, {"N", "4"}});
      }
  for (int n = 2; n <= 3; ++n)
    for (std::string g : {"0", "t1", "t1*t2"}) add("witten", {{"n", std::to_string(n)}, {"g", g}, {"N", "4"}});
  const std::vector<std::string> b_vals = {"1", "2", "3"}, b_mixed = {"-1/2", "3", "1/3"}, ones = {"1", "1", "1"};
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : subset_texts(n)) {
      for (const auto& bs : {ones, b_vals, b_mixed})
        for (std::string v : {"va:1/2", "wedge:1"}) {
          add("hfree", {{"n", std::to_string(n)}, {"b", first_n(bs, n)}, {"V", v}, {"S", s}});
          add("hfree_composed", {{"n", std::to_string(n)}, {"b", first_n(bs, n)}, {"V", v}, {"S", s}});
        }
      for (std::string a : {"0", "1/2", "1"}) add("nilsson_relations", {{"n", std::to_string(n)}, {"a", a}, {"S", s}});
    }
  for (int n = 1; n <= 2; ++n)
    for (const auto& s : subset_texts(n))
      for (std::string v : {"va:0", "va:1/2", "wedge:1"})
        for (std::string deg : {"4", "6"})
          add("intertwiner", {{"n", std::to_string(n)}, {"b", first_n(b_vals, n)}, {"V", v}, {"S", s}, {"N", deg}});
  for (int n = 1; n <= 2; ++n)
    for (std::string a : {"0", "1/2"})
      for (const auto& s : subset_texts(n))
        add("nilsson", {{"n", std::to_string(n)}, {"a", a}, {"b", n == 1 ? "1" : "1,2"}, {"S", s}});
  for (std::string v : {"va:1/2", "wedge:1"})
    for (std::string s : {"", "1", "1,2"})
      for (std::string b : {"1,1", "1,2"})
        add("weighting", {{"n", "2"}, {"V", v}, {"S", s}, {"b", b}, {"samples", "20"}});
  for (const auto& s : subset_texts(2))
    for (std::string lam : {"1/2,1/3", "-2/3,5/4"})
      add("coherent", {{"n", "2"}, {"V", "wedge:1"}, {"S", s}, {"lambda", lam}, {"N", "2"}});
  add("whittaker", {{"n", "2"}, {"V", "wedge:1"}, {"S", "2"}, {"b", "2,3"}, {"l", "1"}});
  add("whittaker", {{"n", "2"}, {"V", "wedge:1"}, {"S", "1"}, {"b", "2,3"}, {"l", "2"}});
  add("whittaker", {{"n", "2"}, {"V", "wedge:1"}, {"S", "1,2"}, {"b", "2,3"}, {"l", "1"}});
  add("whittaker", {{"n", "2"}, {"V", "wedge:1"}, {"S", "1,2"}, {"b", "2,3"}, {"l", "2"}});
  for (const auto& s : subset_texts(3))
    if (!s.empty()) add("whittaker", {{"n", "3"}, {"V", "va:1/3"}, {"S", s}, {"b", "1,-2,1/2"}, {"l", "1"}});
  return c;
}

}  // namespace sltensor
