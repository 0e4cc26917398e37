#include "sltensor/tensor_module.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sltensor {

void accumulate(TVec& v, const TKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

TVec operator+(TVec a, const TVec& b) {
  for (const auto& [k, c] : b) accumulate(a, k, c);
  return a;
}

TVec operator-(TVec a, const TVec& b) {
  for (const auto& [k, c] : b) accumulate(a, k, -c);
  return a;
}

TVec scale(TVec a, const Rational& c) {
  if (c == 0) return {};
  for (auto& [k, v] : a) v *= c;
  return a;
}

std::string tvec_str(const TVec& v) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v) {
    std::string mono = "t^(";
    for (std::size_t i = 0; i < k.first.size(); ++i) mono += (i ? "," : "") + std::to_string(k.first[i]);
    mono += ")*v" + std::to_string(k.second + 1);
    out += format_term(c, mono, first);
    first = false;
  }
  return out;
}

TensorContext TensorContext::make(const GlModule& v, const Subset& s, const MultiPoly& g) {
  if (s.n() != v.n() || g.nvars() != v.n()) throw InvalidInput("context pieces disagree on n");
  if (g.laurent()) throw InvalidInput("g must be a polynomial");
  if (g.constant_term() != 0) throw InvalidInput("g must have zero constant term");
  return TensorContext{v.n(), s, g, v};
}

std::string TensorContext::str() const {
  return "n=" + std::to_string(n) + " V=" + V.name() + " S=" + S.str() + " g=" + g.str();
}

std::string model_name(ModelKind k) {
  switch (k) {
    case ModelKind::corner:
      return "corner";
    case ModelKind::polynomial:
      return "polynomial";
    case ModelKind::exponential_first:
      return "exponential_first";
  }
  return "?";
}

Model::Model(ModelKind kind, const TensorContext& ctx) : kind_(kind), ctx_(ctx) {
  const int n = ctx.n;
  std::vector<WeylOp> ts;
  for (int i = 0; i < n; ++i) ts.push_back(WeylOp::t(n, i));
  switch (kind) {
    case ModelKind::corner:
      pres_ = twist_exp(build_omega(ctx.V, Subset::none(n)), ctx.g);
      t_ops_ = ts;
      corner_ = ctx.S;
      break;
    case ModelKind::polynomial:
      pres_ = twist_fourier(twist_exp(build_omega(ctx.V, Subset::none(n)), ctx.g), ctx.S);
      for (auto& t : ts) t_ops_.push_back(fourier(exp_twist(t, ctx.g), ctx.S));
      break;
    case ModelKind::exponential_first:
      pres_ = twist_exp(build_omega(ctx.V, ctx.S), ctx.g);
      for (auto& t : ts) t_ops_.push_back(exp_twist(fourier(t, ctx.S), ctx.g));
      break;
  }
}

bool Model::admissible(const MultiIndex& m) const {
  if (corner_) return in_corner(m, *corner_);
  for (int e : m)
    if (e < 0) return false;
  return true;
}

TVec Model::apply(const OpMatrix<WeylOp>& mat, const TVec& w) const {
  TVec out;
  for (const auto& [key, c] : w) {
    const auto& [m, l] = key;
    for (int r = 0; r < mat.dim(); ++r) {
      const WeylOp& u = mat(r, l);
      if (u.is_zero()) continue;
      for (const auto& [e, x] : apply_to_monomial(u, m, corner_)) accumulate(out, {e, r}, c * x);
    }
  }
  return out;
}

TVec Model::act(const SlElement& x, const TVec& w) const { return apply(pres_.image(x), w); }

TVec Model::act(const SlCombination& x, const TVec& w) const {
  TVec out;
  for (const auto& [e, c] : x) out = out + scale(act(e, w), c);
  return out;
}

TVec Model::apply_t(int i, const TVec& w) const {
  TVec out;
  for (const auto& [key, c] : w)
    for (const auto& [e, x] : apply_to_monomial(t_ops_[i], key.first, corner_)) accumulate(out, {e, key.second}, c * x);
  return out;
}

TVec act_corner(const SlElement& x, const TVec& w, const TensorContext& ctx) {
  return Model(ModelKind::corner, ctx).act(x, w);
}

TVec act_polynomial_model(const SlElement& x, const TVec& w, const TensorContext& ctx) {
  return Model(ModelKind::polynomial, ctx).act(x, w);
}

namespace {

void enumerate_box(int n, int lo, int hi, const std::function<void(const MultiIndex&)>& f) {
  MultiIndex m(n, lo);
  if (n == 0) {
    f(m);
    return;
  }
  while (true) {
    f(m);
    int i = n - 1;
    while (i >= 0 && m[i] == hi) {
      m[i] = lo;
      --i;
    }
    if (i < 0) return;
    ++m[i];
  }
}

int corner_level(const MultiIndex& m, const Subset& s) {
  int lvl = 0;
  for (int i = 0; i < s.n(); ++i) lvl += s.contains(i) ? -1 - m[i] : m[i];
  return lvl;
}

}  // namespace

std::vector<MultiIndex> corner_monomials_by_level(const Subset& s, int level) {
  std::vector<MultiIndex> out;
  enumerate_box(s.n(), -level - 1, level, [&](const MultiIndex& m) {
    if (in_corner(m, s) && corner_level(m, s) <= level) out.push_back(m);
  });
  return out;
}

std::vector<MultiIndex> corner_monomials_in_box(const Subset& s, int box) {
  std::vector<MultiIndex> out;
  enumerate_box(s.n(), -box, box, [&](const MultiIndex& m) {
    if (in_corner(m, s)) out.push_back(m);
  });
  return out;
}

std::vector<MultiIndex> polynomial_monomials(int n, int degree) {
  return corner_monomials_by_level(Subset::none(n), degree);
}

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

// ------------------------------------------------------- model equivalence

Rational default_bijection_scale(const MultiIndex& k, const Subset& s) {
  Rational r = 1;
  for (int i : s.members()) r *= factorial(k[i]);
  return r;
}

Rational literal_bijection_scale(const MultiIndex& k, const Subset& s) {
  Rational r = 1;
  for (int i : s.members()) r *= (k[i] % 2 ? -1 : 1) * factorial(k[i]);
  return r;
}

Verdict model_equivalence_check(const TensorContext& ctx, int degree, const BijectionScale& scale_fn) {
  Model corner(ModelKind::corner, ctx), poly(ModelKind::polynomial, ctx);
  const Subset& s = ctx.S;
  auto phi = [&](const TVec& w) {
    TVec out;
    for (const auto& [key, c] : w) {
      MultiIndex m = key.first;
      for (int i : s.members()) m[i] = -1 - m[i];
      accumulate(out, {m, key.second}, c * scale_fn(key.first, s));
    }
    return out;
  };
  Verdict v;
  for (const auto& k : polynomial_monomials(ctx.n, degree))
    for (int l = 0; l < ctx.V.dim(); ++l) {
      TVec w{{{k, l}, Rational(1)}};
      TVec image = phi(w);
      for (const auto& x : sl_basis(ctx.n)) {
        ++v.checked;
        TVec lhs = corner.act(x, image);
        TVec rhs = phi(poly.act(x, w));
        if (lhs != rhs)
          v.fail(x.str() + " on " + tvec_str(w) + ": corner gives " + tvec_str(lhs) + ", mapped polynomial gives " +
                 tvec_str(rhs));
      }
    }
  return v;
}

// --------------------------------------------------------------- simplicity

std::string simplicity_name(SimplicityKind k) {
  switch (k) {
    case SimplicityKind::simple_witnessed:
      return "simple_witnessed";
    case SimplicityKind::proper_submodule:
      return "proper_submodule";
    case SimplicityKind::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Prediction va_prediction(int n, const Rational& a, const Subset& s) {
  const Rational c = Rational(n + 1) * (a - 1);
  bool simple;
  if (!is_integer(c))
    simple = true;
  else if (c <= -n - 1)
    simple = s.empty();
  else if (c <= -1)
    simple = s.empty() || s.full();
  else
    simple = s.full();
  return simple ? Prediction::simple : Prediction::not_simple;
}

std::optional<long> tprime_threshold(const TensorContext& ctx) {
  if (ctx.V.dim() != 1) return std::nullopt;
  Rational c = Rational(ctx.n + 1) * (ctx.V.weight(0)[0] - 1);
  if (!is_integer(c)) return std::nullopt;
  return to_long(c) + 1;
}

SubmoduleVerdict check_tprime(const TensorContext& ctx, int box) {
  SubmoduleVerdict out;
  if (ctx.V.dim() != 1) throw InvalidInput("T' is defined for one-dimensional V");
  auto thr = tprime_threshold(ctx);
  if (!thr) {
    out.verdict.status = Status::inconclusive;
    out.verdict.witness = "(n+1)(a-1) is not an integer; T' is not defined";
    return out;
  }
  const long t = *thr;
  Model model(ModelKind::corner, ctx);
  out.invariant = true;
  for (const auto& m : corner_monomials_in_box(ctx.S, box)) {
    if (total_degree(m) < t) continue;
    TVec w{{{m, 0}, Rational(1)}};
    for (const auto& x : sl_basis(ctx.n)) {
      ++out.verdict.checked;
      for (const auto& [key, c] : model.act(x, w))
        if (total_degree(key.first) < t) {
          out.invariant = false;
          out.verdict.fail(x.str() + " maps " + tvec_str(w) + " outside T' (threshold " + std::to_string(t) + ")");
        }
    }
  }
  // Extremes of sum(m) over the corner: S empty -> min 0; S full -> max -n.
  out.whole = ctx.S.empty() && t <= 0;
  out.zero = ctx.S.full() && -ctx.n < t;
  out.nonzero = !out.zero;
  out.proper = !out.whole;
  if (out.verdict.status != Status::fail)
    out.verdict.witness = "T' = span{t^m : sum m >= " + std::to_string(t) + "}" + (out.whole ? " (whole module)" : "") +
                          (out.zero ? " (zero)" : "");
  return out;
}

namespace {

SimplicityResult graph_witness(const TensorContext& ctx, int requested_box) {
  SimplicityResult res;
  TensorContext flat = ctx;
  flat.g = MultiPoly(ctx.n);
  Model ladder(ModelKind::corner, flat);
  auto thr = tprime_threshold(ctx);
  // The box must reach the level sum m = threshold from both sides.
  const int box = thr ? std::max<int>(requested_box, static_cast<int>(std::abs(*thr)) + ctx.n + 2) : requested_box;
  auto nodes = corner_monomials_in_box(ctx.S, box);
  std::map<MultiIndex, int> id;
  for (std::size_t k = 0; k < nodes.size(); ++k) id[nodes[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> fwd(nodes.size()), bwd(nodes.size());
  bool crosses = false;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    TVec w{{{nodes[k], 0}, Rational(1)}};
    for (const auto& x : sl_basis(ctx.n)) {
      if (x.is_h) continue;
      for (const auto& [key, c] : ladder.act(x, w)) {
        auto it = id.find(key.first);
        if (it == id.end()) continue;
        fwd[k].push_back(it->second);
        bwd[it->second].push_back(static_cast<int>(k));
        if (thr && total_degree(nodes[k]) >= *thr && total_degree(key.first) < *thr) crosses = true;
      }
    }
  }
  std::vector<int> interior;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    bool inside = true;
    for (int e : nodes[k])
      if (std::abs(e) > box - 1) inside = false;
    if (inside) interior.push_back(static_cast<int>(k));
  }
  auto reach = [&](const std::vector<std::vector<int>>& adj, int start) {
    std::vector<bool> seen(nodes.size(), false);
    std::deque<int> q{start};
    seen[start] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          q.push_back(v);
        }
    }
    return seen;
  };
  bool connected = !interior.empty();
  if (connected) {
    auto f = reach(fwd, interior[0]), b = reach(bwd, interior[0]);
    for (int k : interior)
      if (!f[k] || !b[k]) connected = false;
  }
  bool both_sides = false;
  if (thr) {
    SubmoduleVerdict exact = check_tprime(ctx, 0);
    both_sides = exact.proper && exact.nonzero;
  }
  if (connected && (!both_sides || crosses)) {
    res.kind = SimplicityKind::simple_witnessed;
    res.note = "interior of box " + std::to_string(box) + " strongly connected (" + std::to_string(interior.size()) +
               " monomials)";
    return res;
  }
  if (!thr) {
    res.note = "ladder graph not strongly connected and T' undefined";
    return res;
  }
  SubmoduleVerdict tp = check_tprime(ctx, box);
  if (tp.invariant && tp.nonzero && tp.proper) {
    res.kind = SimplicityKind::proper_submodule;
    for (const auto& m : nodes)
      if (total_degree(m) >= *thr) res.submodule_basis.push_back(TVec{{{m, 0}, Rational(1)}});
    res.note = tp.verdict.witness + " intersected with box " + std::to_string(box);
    return res;
  }
  res.note = "ladder graph disconnected but T' is not a proper nonzero submodule";
  return res;
}

}  // namespace

SimplicityResult simplicity_witness(const TensorContext& ctx, int box) {
  if (ctx.V.dim() == 1) return graph_witness(ctx, box);
  if (ctx.g.is_zero()) return window_submodule_search(ctx, box);
  SimplicityResult res;
  res.note = "g != 0 with dim V > 1: the module is not a weight module and no finite certificate is attempted";
  return res;
}

// Weight-window search. Weight of t^m (x) v_l in the corner model is wt(v_l) - 1 - m;
// basis elements are grouped by p = m - (wt(v_l) - wt(v_0)), which is integral.
namespace {

struct WindowData {
  int n = 0;
  int big = 0;
  std::vector<MultiIndex> offsets;
  std::map<MultiIndex, std::vector<TKey>> spaces;  // p -> basis keys
  std::map<TKey, std::pair<MultiIndex, int>> where;  // key -> (p, local index)

  MultiIndex weight_of(const TKey& k) const { return k.first - offsets[k.second]; }
  bool inside(const MultiIndex& p, int r) const {
    for (int e : p)
      if (std::abs(e) > r) return false;
    return true;
  }
};

RatVector local_coords(const WindowData& wd, const MultiIndex& p, const TVec& v) {
  const auto& keys = wd.spaces.at(p);
  RatVector out = RatVector::Zero(static_cast<Eigen::Index>(keys.size()));
  for (const auto& [k, c] : v) out(wd.where.at(k).second) = c;
  return out;
}

TVec from_local(const WindowData& wd, const MultiIndex& p, const RatVector& v) {
  TVec out;
  const auto& keys = wd.spaces.at(p);
  for (Eigen::Index i = 0; i < v.size(); ++i) accumulate(out, keys[i], v(i));
  return out;
}

}  // namespace

SimplicityResult window_submodule_search(const TensorContext& ctx, int radius, int margin) {
  SimplicityResult res;
  if (!ctx.g.is_zero()) {
    res.note = "window search needs g = 0";
    return res;
  }
  const int n = ctx.n;
  WindowData wd;
  wd.n = n;
  wd.big = radius + margin;
  for (int l = 0; l < ctx.V.dim(); ++l) {
    MultiIndex off(n);
    for (int i = 0; i < n; ++i) {
      Rational d = ctx.V.weight(l)[i] - ctx.V.weight(0)[i];
      if (!is_integer(d)) {
        res.note = "weights of V are not congruent mod the root lattice";
        return res;
      }
      off[i] = static_cast<int>(to_long(d));
    }
    wd.offsets.push_back(off);
  }
  Model model(ModelKind::corner, ctx);
  enumerate_box(n, -wd.big, wd.big, [&](const MultiIndex& p) {
    std::vector<TKey> keys;
    for (int l = 0; l < ctx.V.dim(); ++l) {
      MultiIndex m = p + wd.offsets[l];
      if (model.admissible(m)) keys.push_back({m, l});
    }
    for (std::size_t k = 0; k < keys.size(); ++k) wd.where[keys[k]] = {p, static_cast<int>(k)};
    wd.spaces[p] = keys;
  });

  std::vector<SlElement> roots;
  for (const auto& x : sl_basis(n))
    if (!x.is_h) roots.push_back(x);
  // Cached action of each root vector on basis keys, restricted to the window.
  std::vector<std::map<TKey, TVec>> cache(roots.size());
  auto act_key = [&](std::size_t r, const TKey& k) -> const TVec& {
    auto it = cache[r].find(k);
    if (it != cache[r].end()) return it->second;
    TVec out;
    for (const auto& [key, c] : model.act(roots[r], TVec{{k, Rational(1)}}))
      if (wd.where.count(key)) accumulate(out, key, c);
    return cache[r].emplace(k, out).first->second;
  };
  auto act_vec = [&](std::size_t r, const TVec& v) {
    TVec out;
    for (const auto& [k, c] : v)
      for (const auto& [k2, c2] : act_key(r, k)) accumulate(out, k2, c * c2);
    return out;
  };

  std::set<MultiIndex> good;  // weights holding a vector known to generate everything
  auto inner_full = [&](const std::map<MultiIndex, EchelonBasis<Rational>>& cl) {
    for (const auto& [p, keys] : wd.spaces) {
      if (!wd.inside(p, radius) || keys.empty()) continue;
      auto it = cl.find(p);
      if (it == cl.end() || it->second.size() != static_cast<Eigen::Index>(keys.size())) return false;
    }
    return true;
  };

  // Closure of a vector at weight p0; stops early once a good weight space is filled.
  auto closure = [&](const MultiIndex& p0, const RatVector& v0, bool& reached_good) {
    std::map<MultiIndex, EchelonBasis<Rational>> cl;
    std::deque<std::pair<MultiIndex, RatVector>> queue;
    reached_good = false;
    auto insert = [&](const MultiIndex& p, const RatVector& v) {
      auto it = cl.try_emplace(p, EchelonBasis<Rational>(v.size())).first;
      if (!it->second.insert(v)) return;
      queue.emplace_back(p, v);
      if (good.count(p) && it->second.size() == v.size()) reached_good = true;
    };
    insert(p0, v0);
    while (!queue.empty() && !reached_good) {
      auto [p, v] = queue.front();
      queue.pop_front();
      TVec w = from_local(wd, p, v);
      for (std::size_t r = 0; r < roots.size(); ++r) {
        TVec y = act_vec(r, w);
        if (y.empty()) continue;
        MultiIndex q = wd.weight_of(y.begin()->first);
        insert(q, local_coords(wd, q, y));
        if (reached_good) break;
      }
    }
    return cl;
  };

  std::vector<MultiIndex> inner;
  enumerate_box(n, -radius, radius, [&](const MultiIndex& p) {
    if (!wd.spaces.at(p).empty()) inner.push_back(p);
  });
  // Visit weights from the centre outwards.
  std::stable_sort(inner.begin(), inner.end(), [](const MultiIndex& a, const MultiIndex& b) {
    int na = 0, nb = 0;
    for (int e : a) na = std::max(na, std::abs(e));
    for (int e : b) nb = std::max(nb, std::abs(e));
    return na < nb;
  });

  int candidates = 0;
  for (const auto& p : inner) {
    const auto& keys = wd.spaces.at(p);
    const Eigen::Index d = static_cast<Eigen::Index>(keys.size());
    std::vector<RatVector> cands;
    for (Eigen::Index i = 0; i < d; ++i) {
      RatVector e = RatVector::Zero(d);
      e(i) = 1;
      cands.push_back(e);
    }
    // Kernels of single root vectors and of Borel nilradicals (all orderings of 1..n+1).
    std::vector<RatMatrix> blocks;
    std::vector<bool> usable(roots.size(), false);
    for (std::size_t r = 0; r < roots.size(); ++r) {
      std::map<TKey, int> rowid;
      std::vector<TVec> cols;
      bool leaves = false;
      for (const auto& k : keys) {
        TVec full = model.act(roots[r], TVec{{k, Rational(1)}});
        for (const auto& [k2, c2] : full)
          if (!wd.where.count(k2)) leaves = true;
        cols.push_back(full);
        for (const auto& [k2, c2] : full) rowid.try_emplace(k2, static_cast<int>(rowid.size()));
      }
      RatMatrix m = RatMatrix::Zero(static_cast<Eigen::Index>(rowid.size()), d);
      for (Eigen::Index c = 0; c < d; ++c)
        for (const auto& [k2, c2] : cols[c]) m(rowid[k2], c) = c2;
      blocks.push_back(m);
      usable[r] = !leaves;
    }
    auto add_kernel = [&](const std::vector<std::size_t>& which) {
      Eigen::Index rows = 0;
      for (auto r : which) rows += blocks[r].rows();
      RatMatrix stacked(rows, d);
      Eigen::Index off = 0;
      for (auto r : which) {
        stacked.middleRows(off, blocks[r].rows()) = blocks[r];
        off += blocks[r].rows();
      }
      RatMatrix ker = kernel(stacked);
      for (Eigen::Index c = 0; c < ker.cols(); ++c) cands.push_back(ker.col(c));
    };
    for (std::size_t r = 0; r < roots.size(); ++r)
      if (usable[r]) add_kernel({r});
    std::vector<int> perm(n + 1);
    for (int i = 0; i <= n; ++i) perm[i] = i;
    do {
      std::vector<std::size_t> which;
      for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          std::size_t r = static_cast<std::size_t>(sl_index(SlElement::e(perm[a], perm[b]), n) - n);
          if (usable[r]) which.push_back(r);
        }
      if (!which.empty()) add_kernel(which);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Normalize and deduplicate.
    std::set<std::vector<std::string>> seen;
    for (auto& c : cands) {
      Eigen::Index lead = 0;
      while (lead < d && c(lead) == 0) ++lead;
      if (lead == d) continue;
      c /= Rational(c(lead));
      std::vector<std::string> sig;
      for (Eigen::Index i = 0; i < d; ++i) sig.push_back(c(i).str());
      if (!seen.insert(sig).second) continue;
      ++candidates;
      bool reached_good = false;
      auto cl = closure(p, c, reached_good);
      if (reached_good || inner_full(cl)) {
        good.insert(p);
        continue;
      }
      // Deficient on the inner window: re-verify invariance away from the truncation edge.
      for (const auto& [q, eb] : cl) {
        if (!wd.inside(q, wd.big - 1)) continue;
        for (const auto& row : eb.rows()) {
          TVec w = from_local(wd, q, row);
          for (const auto& x : roots) {
            TVec y = model.act(x, w);
            if (y.empty()) continue;
            MultiIndex q2 = wd.weight_of(y.begin()->first);
            auto it = cl.find(q2);
            if (it == cl.end() || !it->second.contains(local_coords(wd, q2, y))) {
              res.note = "closure failed exact re-verification";
              return res;
            }
          }
        }
      }
      res.kind = SimplicityKind::proper_submodule;
      for (const auto& [q, eb] : cl)
        if (wd.inside(q, radius))
          for (const auto& row : eb.rows()) res.submodule_basis.push_back(from_local(wd, q, row));
      res.note = "vector " + tvec_str(from_local(wd, p, c)) + " generates a subspace deficient on the radius-" +
                 std::to_string(radius) + " window";
      return res;
    }
  }
  // A submodule may avoid the window entirely, so this is not a simplicity certificate.
  res.kind = SimplicityKind::inconclusive;
  res.note = std::to_string(candidates) + " candidate vectors each generate the whole radius-" +
             std::to_string(radius) + " window; no submodule meets it";
  return res;
}

// ----------------------------------------------------------------- de Rham

namespace {

struct ExteriorIndex {
  std::vector<std::vector<int>> subsets;
  std::map<std::vector<int>, int> index;
  explicit ExteriorIndex(int n) {
    for (int k = 0; k <= n; ++k)
      for (auto& L : k_subsets(n, k)) {
        index[L] = static_cast<int>(subsets.size());
        subsets.push_back(L);
      }
  }
  int block_start(int k, int n) const {
    int start = 0;
    for (int j = 0; j < k; ++j) start += static_cast<int>(k_subsets(n, j).size());
    return start;
  }
};

// e_i ^ e_L = sign * e_{L u {i}}, sign 0 when i is in L.
std::pair<int, int> wedge_left(const ExteriorIndex& ex, int i, int l) {
  const auto& L = ex.subsets[l];
  if (std::binary_search(L.begin(), L.end(), i)) return {0, -1};
  int before = 0;
  for (int x : L)
    if (x < i) ++before;
  std::vector<int> target = L;
  target.insert(std::upper_bound(target.begin(), target.end(), i), i);
  return {before % 2 ? -1 : 1, ex.index.at(target)};
}

TensorContext full_exterior(const TensorContext& ctx) {
  return TensorContext::make(GlModule::exterior_algebra(ctx.n), ctx.S, ctx.g);
}

}  // namespace

TVec derham_d(const Model& m, const TVec& w) {
  const int n = m.context().n;
  ExteriorIndex ex(n);
  if (m.context().V.dim() != static_cast<int>(ex.subsets.size()))
    throw InvalidInput("de Rham differential needs the full exterior algebra");
  TVec out;
  for (int i = 0; i < n; ++i) {
    TVec ti = m.apply_t(i, w);
    for (const auto& [key, c] : ti) {
      auto [sign, target] = wedge_left(ex, i, key.second);
      if (sign != 0) accumulate(out, {key.first, target}, c * sign);
    }
  }
  return out;
}

SubmoduleVerdict known_submodule_check(const TensorContext& ctx, const KnownSubmodule& which, int bound) {
  if (which.kind == KnownSubmodule::Kind::tprime) return check_tprime(ctx, bound);
  return check_derham_image(ctx, which.k, bound);
}

Verdict derham_check(const TensorContext& ctx, int degree, ModelKind kind) {
  Model model(kind, full_exterior(ctx));
  Verdict v;
  auto monomials = kind == ModelKind::corner ? corner_monomials_by_level(ctx.S, degree)
                                             : polynomial_monomials(ctx.n, degree);
  const int dim = model.context().V.dim();
  for (const auto& m : monomials)
    for (int l = 0; l < dim; ++l) {
      TVec w{{{m, l}, Rational(1)}};
      TVec dw = derham_d(model, w);
      ++v.checked;
      TVec dd = derham_d(model, dw);
      if (!dd.empty()) v.fail("d^2 of " + tvec_str(w) + " is " + tvec_str(dd));
      for (const auto& x : sl_basis(ctx.n)) {
        ++v.checked;
        TVec lhs = derham_d(model, model.act(x, w));
        TVec rhs = model.act(x, dw);
        if (lhs != rhs) v.fail("d(" + x.str() + " . " + tvec_str(w) + ") != " + x.str() + " . d(...): " + tvec_str(lhs - rhs));
      }
    }
  return v;
}

SubmoduleVerdict check_derham_image(const TensorContext& ctx, int k, int degree) {
  if (k < 1 || k > ctx.n) throw InvalidInput("de Rham image needs 1 <= k <= n");
  SubmoduleVerdict out;
  Model model(ModelKind::corner, full_exterior(ctx));
  ExteriorIndex ex(ctx.n);
  const int src_lo = ex.block_start(k - 1, ctx.n), src_hi = ex.block_start(k, ctx.n);
  const int dst_hi = ex.block_start(k + 1 > ctx.n ? ctx.n + 1 : k + 1, ctx.n);
  const int dst_lo = src_hi;
  auto monomials = corner_monomials_by_level(ctx.S, degree);

  // Invariance: x . d(w) = d(x . w) for source basis vectors w.
  out.invariant = true;
  for (const auto& m : monomials)
    for (int l = src_lo; l < src_hi; ++l) {
      TVec w{{{m, l}, Rational(1)}};
      TVec dw = derham_d(model, w);
      if (!dw.empty()) out.nonzero = true;
      for (const auto& x : sl_basis(ctx.n)) {
        ++out.verdict.checked;
        if (derham_d(model, model.act(x, w)) != model.act(x, dw)) {
          out.invariant = false;
          out.verdict.fail("image not invariant under " + x.str() + " at " + tvec_str(w));
        }
      }
    }

  // Properness: d preserves the grading wt(L) - m, so compare ranks grade by grade.
  auto grade = [&](const MultiIndex& m, int l) {
    MultiIndex g(ctx.n, 0);
    for (int i : ex.subsets[l]) g[i] += 1;
    return g - m;
  };
  std::set<MultiIndex> tried;
  for (const auto& m : monomials) {
    for (int l = dst_lo; l < dst_hi && !out.proper; ++l) {
      MultiIndex gr = grade(m, l);
      if (!tried.insert(gr).second) continue;
      std::vector<TKey> target, source;
      for (int l2 = dst_lo; l2 < dst_hi; ++l2) {
        MultiIndex m2 = grade(MultiIndex(ctx.n, 0), l2) - gr;
        if (model.admissible(m2)) target.push_back({m2, l2});
      }
      for (int l2 = src_lo; l2 < src_hi; ++l2) {
        MultiIndex m2 = grade(MultiIndex(ctx.n, 0), l2) - gr;
        if (model.admissible(m2)) source.push_back({m2, l2});
      }
      std::map<TKey, int> row;
      for (std::size_t r = 0; r < target.size(); ++r) row[target[r]] = static_cast<int>(r);
      RatMatrix dm = RatMatrix::Zero(static_cast<Eigen::Index>(target.size()), static_cast<Eigen::Index>(source.size()));
      for (std::size_t c = 0; c < source.size(); ++c)
        for (const auto& [key, val] : derham_d(model, TVec{{source[c], Rational(1)}})) {
          auto it = row.find(key);
          if (it == row.end()) throw std::logic_error("de Rham differential left its grade");
          dm(it->second, static_cast<Eigen::Index>(c)) = val;
        }
      Eigen::Index rk = rank(dm);
      if (rk < static_cast<Eigen::Index>(target.size())) {
        out.proper = true;
        std::string gtxt;
        for (int i = 0; i < ctx.n; ++i) gtxt += (i ? "," : "") + std::to_string(gr[i]);
        out.verdict.witness = "grade (" + gtxt + "): image rank " + std::to_string(rk) + " < " +
                              std::to_string(target.size());
      }
    }
    if (out.proper) break;
  }
  out.whole = !out.proper;
  out.zero = !out.nonzero;
  if (out.verdict.status != Status::fail && !(out.invariant && out.nonzero && out.proper))
    out.verdict.status = Status::inconclusive;
  return out;
}

Verdict witten_compare(int n, const MultiPoly& g, int degree) {
  TensorContext ctx = TensorContext::make(GlModule::exterior_algebra(n), Subset::all(n), g);
  Model model(ModelKind::exponential_first, ctx);
  ExteriorIndex ex(n);
  Verdict v;
  // Classical side: forms as (L -> polynomial coefficient).
  auto classical = [&](const MultiIndex& k, int l) {
    std::map<int, MultiPoly> form;
    MultiPoly f = MultiPoly::monomial(k);
    const auto& L = ex.subsets[l];
    for (int i = 0; i < n; ++i) {
      if (std::find(L.begin(), L.end(), i) != L.end()) continue;
      MultiPoly coef = f.diff(i) + g.diff(i) * f;
      if (coef.is_zero()) continue;
      std::vector<int> target = L;
      target.push_back(i);
      std::sort(target.begin(), target.end());
      int pos = static_cast<int>(std::find(target.begin(), target.end(), i) - target.begin());
      auto it = form.try_emplace(ex.index.at(target), MultiPoly(n)).first;
      it->second += coef * Rational(pos % 2 ? -1 : 1);
    }
    TVec out;
    for (const auto& [idx, p] : form)
      for (const auto& [m, c] : p.terms()) accumulate(out, {m, idx}, c);
    return out;
  };
  for (const auto& k : polynomial_monomials(n, degree))
    for (int l = 0; l < static_cast<int>(ex.subsets.size()); ++l) {
      ++v.checked;
      TVec lhs = derham_d(model, TVec{{{k, l}, Rational(1)}});
      TVec rhs = classical(k, l);
      if (lhs != rhs)
        v.fail("form " + tvec_str(TVec{{{k, l}, Rational(1)}}) + ": d_P gives " + tvec_str(lhs) + ", d + dg^ gives " +
               tvec_str(rhs));
    }
  return v;
}

// --------------------------------------------------------------- Whittaker

Verdict whittaker_check(const std::vector<Rational>& b, const Subset& s, const GlModule& v, int l) {
  const int n = v.n();
  if (static_cast<int>(b.size()) != n) throw InvalidInput("b needs n entries");
  if (s.empty()) throw InvalidInput("Whittaker check needs nonempty S");
  if (l < 0 || l >= v.dim()) throw InvalidInput("basis index out of range");
  for (int i = 0; i < n; ++i) {
    if (s.contains(i)) continue;
    for (int j : s.members())
      if (!is_zero(RatVector(v.E(i, j).col(l))))
        throw InvalidInput("E_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} v != 0 at (i,j) = (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  MultiPoly g(n);
  for (int i = 0; i < n; ++i) g.add_term(unit_index(n, i), b[i]);
  Model model(ModelKind::exponential_first, TensorContext::make(v, s, g));
  std::vector<Rational> bb = b;
  bb.push_back(1);
  TVec w{{{MultiIndex(n, 0), l}, Rational(1)}};
  Verdict out;
  for (int i = 0; i <= n; ++i) {
    if (i < n && s.contains(i)) continue;
    for (int j : s.members()) {
      ++out.checked;
      SlElement x = SlElement::e(i, j);
      TVec y = model.act(x, w);
      TVec expect = scale(w, -bb[i] * bb[j]);
      if (y != expect) out.fail(x.str() + " . w = " + tvec_str(y) + ", expected " + tvec_str(expect));
    }
  }
  out.witness = out.ok() ? std::to_string(out.checked) + " root vectors act by -b_i b_j" : out.witness;
  return out;
}

// ------------------------------------------------------------- coherent

namespace {

using QExp = std::vector<Rational>;
using QKey = std::pair<QExp, int>;
using QVec = std::map<QKey, Rational>;

void qacc(QVec& v, const QKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, ins] = v.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

QVec qapply(const OpMatrix<WeylOp>& mat, const QKey& key) {
  QVec out;
  const auto& [mu, l] = key;
  const int n = static_cast<int>(mu.size());
  for (int r = 0; r < mat.dim(); ++r)
    for (const auto& [k, c] : mat(r, l).terms()) {
      Rational coef = c;
      QExp e(n);
      for (int i = 0; i < n; ++i) {
        coef *= falling(mu[i], k.second[i]);
        e[i] = mu[i] - k.second[i] + k.first[i];
      }
      qacc(out, {e, r}, coef);
    }
  return out;
}

}  // namespace

CoherentReport coherent_checks(const GlModule& v, const Subset& s, const std::vector<Rational>& lam, int radius) {
  const int n = v.n();
  if (static_cast<int>(lam.size()) != n) throw InvalidInput("lambda needs n entries");
  CoherentReport rep;
  auto pres = build_omega(v, s);
  int spread = 1;
  for (const auto& w : v.weights())
    for (int i = 0; i < n; ++i) {
      Rational d = w[i] - v.weight(0)[i];
      if (!is_integer(d)) throw InvalidInput("weights of V must differ by integers");
      spread = std::max<int>(spread, static_cast<int>(abs(to_long(d))) + 1);
    }
  // Weight of each basis element, read off exactly from the h images.
  auto weight_of = [&](const QKey& key) {
    QExp wt(n);
    for (int k = 0; k < n; ++k) {
      QVec img = qapply(pres.image(SlElement::h(k)), key);
      if (img.size() > 1 || (img.size() == 1 && img.begin()->first != key))
        throw std::logic_error("h does not act diagonally on t^mu (x) v");
      wt[k] = img.empty() ? Rational(0) : img.begin()->second;
    }
    return wt;
  };
  std::map<QExp, std::vector<QKey>> spaces;
  const int reach = radius + spread;
  auto centre = weight_of({lam, 0});
  enumerate_box(n, -reach, reach, [&](const MultiIndex& off) {
    for (int l = 0; l < v.dim(); ++l) {
      QExp mu(n);
      for (int i = 0; i < n; ++i) mu[i] = lam[i] + off[i];
      QKey key{mu, l};
      spaces[weight_of(key)].push_back(key);
    }
  });
  std::vector<QExp> window;
  enumerate_box(n, -radius, radius, [&](const MultiIndex& q) {
    QExp w = centre;
    for (int i = 0; i < n; ++i) w[i] += q[i];
    window.push_back(w);
  });
  for (const auto& w : window) {
    ++rep.verdict.checked;
    auto it = spaces.find(w);
    int mult = it == spaces.end() ? 0 : static_cast<int>(it->second.size());
    if (mult != v.dim()) {
      std::string txt;
      for (int i = 0; i < n; ++i) txt += (i ? "," : "") + w[i].str();
      rep.verdict.fail("weight (" + txt + ") has multiplicity " + std::to_string(mult));
    }
  }
  auto root_rank = [&](const SlElement& x, const QExp& w) -> std::pair<int, int> {
    auto it = spaces.find(w);
    if (it == spaces.end()) return {0, 0};
    std::map<QKey, int> rows;
    std::vector<QVec> cols;
    for (const auto& key : it->second) {
      cols.push_back(qapply(pres.image(x), key));
      for (const auto& [k2, c] : cols.back()) rows.try_emplace(k2, static_cast<int>(rows.size()));
    }
    RatMatrix m = RatMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [k2, val] : cols[c]) m(rows[k2], static_cast<Eigen::Index>(c)) = val;
    return {static_cast<int>(rank(m)), static_cast<int>(cols.size())};
  };
  // Sigma_{S u {n+1}}: e_ij with i in S u {n+1}, j in [n] \ S.
  std::vector<int> tilde = s.members();
  tilde.push_back(n);
  for (int i : tilde)
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      SlElement x = SlElement::e(i, j);
      for (const auto& w : window) {
        ++rep.verdict.checked;
        auto [rk, d] = root_rank(x, w);
        if (rk != d) rep.verdict.fail(x.str() + " not injective on a weight space (rank " + std::to_string(rk) + " < " + std::to_string(d) + ")");
      }
    }
  // Informational scans: root vectors outside Sigma.
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      bool in_sigma = (i == n || s.contains(i)) && j < n && !s.contains(j);
      if (in_sigma) continue;
      SlElement x = SlElement::e(i, j);
      int singular = 0;
      for (const auto& w : window) {
        auto [rk, d] = root_rank(x, w);
        if (rk < d) ++singular;
      }
      rep.info.push_back(x.str() + ": singular on " + std::to_string(singular) + " of " + std::to_string(window.size()) +
                         " weight spaces");
    }
  if (rep.verdict.ok())
    rep.verdict.witness = std::to_string(window.size()) + " weights of multiplicity " + std::to_string(v.dim()) +
                          "; Sigma root vectors injective";
  return rep;
}

}  // namespace sltensor
