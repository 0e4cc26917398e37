#include "sltensor/hfree.hpp"

#include <random>

namespace sltensor {

namespace {

using SM = OpMatrix<ShiftOp>;

void require_nonzero(const std::vector<Rational>& b, int n) {
  if (static_cast<int>(b.size()) != n) throw InvalidInput("b needs n entries");
  for (const auto& x : b)
    if (x == 0) throw InvalidInput("b entries must be nonzero");
}

MultiIndex integral_difference(const Weight& a, const Weight& b) {
  MultiIndex d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational x = a[i] - b[i];
    if (!is_integer(x)) throw InvalidInput("weights of V must differ by integers");
    d[i] = static_cast<int>(to_long(x));
  }
  return d;
}

MultiPoly poly_falling(const MultiPoly& p, int k) {
  MultiPoly r = MultiPoly::constant(p.nvars(), 1);
  for (int j = 0; j < k; ++j) r = r * (p - MultiPoly::constant(p.nvars(), j));
  return r;
}

// Helpers shared by the tables.
struct Kit {
  int n;
  int dim;
  const GlModule& v;
  ShiftOp one() const { return ShiftOp::constant(n, 1); }
  ShiftOp h(int i) const { return ShiftOp::h(n, i); }
  ShiftOp hsum() const {
    ShiftOp r(n);
    for (int k = 0; k < n; ++k) r += h(k);
    return r;
  }
  ShiftOp sig(int i, int e = 1) const {
    MultiIndex k(n, 0);
    k[i] = e;
    return ShiftOp::shift(k);
  }
  ShiftOp sig2(int i, int j) const { return sig(i) * sig(j, -1); }
  SM sc(const ShiftOp& u) const { return SM::scalar(u, dim); }
  SM ten(const ShiftOp& u, const RatMatrix& m) const { return SM::tensor(u, m); }
  RatMatrix E(int i, int j) const { return v.E(i, j); }
};

}  // namespace

ShiftPresentation build_hfree(const std::vector<Rational>& b, const GlModule& v, const Subset& s) {
  const int n = v.n();
  require_nonzero(b, n);
  if (s.n() != n) throw InvalidInput("subset and module disagree on n");
  Kit k{n, v.dim(), v};
  ShiftPresentation p;
  p.n = n;
  p.V = v;
  p.label = "hfree(" + v.name() + "," + s.str() + ")";
  p.images.assign(sl_basis(n).size(), SM(n, v.dim()));
  const ShiftOp H = k.hsum();

  for (int i = 0; i < n; ++i) p.image(SlElement::h(i)) = k.sc(k.h(i));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool si = s.contains(i), sj = s.contains(j);
      const ShiftOp ss = k.sig2(i, j);
      SM img = k.ten(ss, k.E(i, j));
      if (si && sj) {
        img += (k.sc(k.h(i) * ss) - k.ten(ss, k.E(i, i))) * (b[j] / b[i]);
      } else if (!si && !sj) {
        img += (k.sc((k.h(j) + k.one()) * ss) - k.ten(ss, k.E(j, j))) * (b[i] / b[j]);
      } else if (!si && sj) {
        img += k.sc(ss) * (-b[i] * b[j]);
      } else {
        SM part = -k.sc(k.h(i) * (k.h(j) + k.one()) * ss) + k.ten((k.h(j) + k.one()) * ss, k.E(i, i)) +
                  k.ten(k.h(i) * ss, k.E(j, j)) - k.ten(ss, k.E(i, i) * k.E(j, j));
        img += part * (Rational(1) / (b[i] * b[j]));
      }
      p.image(SlElement::e(i, j)) = img;
    }

  for (int j = 0; j < n; ++j) {
    const ShiftOp si = k.sig(j, -1);
    p.image(SlElement::e(n, j)) =
        s.contains(j) ? k.sc(si) * (-b[j])
                      : (k.sc(k.h(j) * si) - k.ten(si, k.E(j, j)) + k.sc(si)) * (Rational(1) / b[j]);
  }

  for (int i = 0; i < n; ++i) {
    const ShiftOp si = k.sig(i);
    SM tail(n, v.dim());
    for (int j = 0; j < n; ++j)
      if (!s.contains(j)) tail -= k.ten(si, k.E(i, j)) * b[j];
    for (int q : s.members()) {
      const Rational inv = Rational(1) / b[q];
      tail += (k.ten(k.h(q) * si, k.E(i, q)) - k.ten(si, k.E(i, q) * k.E(q, q)) + k.ten(si, k.E(i, q))) * inv;
    }
    SM head = s.contains(i) ? (k.sc((H - k.one()) * k.h(i) * si) - k.ten(H * si, k.E(i, i))) * (Rational(1) / b[i])
                            : k.sc((H - k.one()) * si) * (-b[i]);
    p.image(SlElement::e(i, n)) = head + tail;
  }
  return p;
}

ShiftPresentation hfree_composed(const std::vector<Rational>& b, const GlModule& v, const Subset& s) {
  const int n = v.n();
  require_nonzero(b, n);
  Kit k{n, v.dim(), v};
  std::vector<SM> t_img, d_img;
  for (int i = 0; i < n; ++i) {
    const Rational inv = Rational(1) / b[i];
    if (s.contains(i)) {
      t_img.push_back((k.sc(k.h(i) * k.sig(i)) - k.ten(k.sig(i), k.E(i, i))) * inv);
      d_img.push_back(k.sc(k.sig(i, -1)) * b[i]);
    } else {
      t_img.push_back((k.sc((k.h(i) + k.one()) * k.sig(i, -1)) - k.ten(k.sig(i, -1), k.E(i, i))) * (-inv));
      d_img.push_back(k.sc(k.sig(i)) * b[i]);
    }
  }
  auto weyl_image = [&](const WeylOp& u) {
    SM r(n, v.dim());
    for (const auto& [key, c] : u.terms()) {
      SM term = SM::identity(n, v.dim());
      for (int i = 0; i < n; ++i)
        for (int e = 0; e < key.first[i]; ++e) term = term * t_img[i];
      for (int i = 0; i < n; ++i)
        for (int e = 0; e < key.second[i]; ++e) term = term * d_img[i];
      r += term * c;
    }
    return r;
  };
  auto omega = build_omega(v, s);
  ShiftPresentation p;
  p.n = n;
  p.V = v;
  p.label = "hfree_composed(" + v.name() + "," + s.str() + ")";
  for (const auto& img : omega.images) {
    SM out(n, v.dim());
    for (int r = 0; r < v.dim(); ++r)
      for (int c = 0; c < v.dim(); ++c) {
        if (img(r, c).is_zero()) continue;
        RatMatrix unit = RatMatrix::Zero(v.dim(), v.dim());
        unit(r, c) = 1;
        out += weyl_image(img(r, c)) * k.ten(ShiftOp::shift(integral_difference(v.weight(r), v.weight(c))), unit);
      }
    p.images.push_back(out);
  }
  return p;
}

ShiftPresentation build_nilsson(const Rational& b, const Subset& s) {
  const int n = s.n();
  GlModule v = GlModule::one_dim(n, 0).with_name("rank1");
  Kit k{n, 1, v};
  ShiftPresentation p;
  p.n = n;
  p.V = v;
  p.label = "nilsson(" + b.str() + "," + s.str() + ")";
  p.images.assign(sl_basis(n).size(), SM(n, 1));
  const ShiftOp H = k.hsum();
  const ShiftOp bb = ShiftOp::constant(n, b);
  for (int i = 0; i < n; ++i) p.image(SlElement::h(i)) = k.sc(k.h(i));
  for (int i = 0; i < n; ++i)
    p.image(SlElement::e(i, n)) =
        k.sc(s.contains(i) ? (H + bb) * k.sig(i) : (H + bb) * (k.h(i) - bb - k.one()) * k.sig(i));
  for (int j = 0; j < n; ++j)
    p.image(SlElement::e(n, j)) = k.sc(s.contains(j) ? -((k.h(j) - bb) * k.sig(j, -1)) : -k.sig(j, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool si = s.contains(i), sj = s.contains(j);
      const ShiftOp ss = k.sig2(i, j);
      ShiftOp u = si && sj    ? (k.h(j) - bb) * ss
                  : si        ? ss
                  : sj        ? (k.h(i) - bb - k.one()) * (k.h(j) - bb) * ss
                              : (k.h(i) - bb - k.one()) * ss;
      p.image(SlElement::e(i, j)) = k.sc(u);
    }
  return p;
}

bool h_images_literal(const ShiftPresentation& p) {
  for (int k = 0; k < p.n; ++k)
    if (!(p.image(SlElement::h(k)) == SM::scalar(ShiftOp::h(p.n, k), p.V.dim()))) return false;
  return true;
}

HVector hvector_apply(const OpMatrix<ShiftOp>& m, const HVector& f) {
  HVector out(f.size(), MultiPoly(m.n()));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      if (!m(r, c).is_zero()) out[r] += m(r, c).apply(f[c]);
  return out;
}

std::string hvector_str(const HVector& f) {
  std::string out;
  for (std::size_t l = 0; l < f.size(); ++l) {
    if (f[l].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + f[l].str("h") + ")*v" + std::to_string(l + 1);
  }
  return out.empty() ? "0" : out;
}

HVector intertwine(const std::vector<Rational>& b, const GlModule& v, const Subset& s, const TKey& key) {
  const int n = v.n();
  require_nonzero(b, n);
  const auto& [k, l] = key;
  MultiPoly p = MultiPoly::constant(n, 1);
  const Weight& wt = v.weight(l);
  for (int i = 0; i < n; ++i) {
    if (k[i] < 0) throw InvalidInput("intertwiner takes exponents k >= 0");
    MultiPoly base = s.contains(i) ? MultiPoly::variable(n, i) - MultiPoly::constant(n, wt[i])
                                   : MultiPoly::constant(n, wt[i] - 1) - MultiPoly::variable(n, i);
    p = p * poly_falling(base, k[i]) * (Rational(1) / ipow(b[i], k[i]));
  }
  HVector out(v.dim(), MultiPoly(n));
  out[l] = p;
  return out;
}

Verdict verify_intertwiner(const std::vector<Rational>& b, const GlModule& v, const Subset& s, int degree) {
  return verify_intertwiner(build_hfree(b, v, s), b, s, degree);
}

Verdict verify_intertwiner(const ShiftPresentation& target, const std::vector<Rational>& b, const Subset& s,
                           int degree) {
  const GlModule& v = target.V;
  const int n = v.n();
  require_nonzero(b, n);
  MultiPoly g(n);
  for (int i = 0; i < n; ++i) g.add_term(unit_index(n, i), b[i]);
  Model model(ModelKind::exponential_first, TensorContext::make(v, s, g));
  auto phi = [&](const TVec& w) {
    HVector out(v.dim(), MultiPoly(n));
    for (const auto& [key, c] : w) {
      HVector part = intertwine(b, v, s, key);
      for (int l = 0; l < v.dim(); ++l) out[l] += part[l] * c;
    }
    return out;
  };
  Verdict out;
  for (const auto& k : polynomial_monomials(n, degree))
    for (int l = 0; l < v.dim(); ++l) {
      TVec w{{{k, l}, Rational(1)}};
      HVector pw = phi(w);
      for (const auto& x : sl_basis(n)) {
        ++out.checked;
        HVector lhs = phi(model.act(x, w));
        HVector rhs = hvector_apply(target.image(x), pw);
        if (lhs != rhs)
          out.fail(x.str() + " on " + tvec_str(w) + ": Phi(x.w) = " + hvector_str(lhs) + ", x.Phi(w) = " +
                   hvector_str(rhs));
      }
    }
  if (out.ok()) out.witness = std::to_string(out.checked) + " generator/basis pairs intertwined";
  return out;
}

// ---------------------------------------------------------------- Nilsson

namespace {

// Scalar r with a = r * b, if one exists (both zero gives nullopt with ok = true).
std::optional<Rational> ratio(const ShiftOp& a, const ShiftOp& b, bool& ok) {
  ok = true;
  if (a.is_zero() && b.is_zero()) return std::nullopt;
  if (a.is_zero() || b.is_zero() || a.terms().size() != b.terms().size()) {
    ok = false;
    return std::nullopt;
  }
  const auto& [k0, p0] = *b.terms().begin();
  auto it = a.terms().find(k0);
  if (it == a.terms().end()) {
    ok = false;
    return std::nullopt;
  }
  const auto& [m0, c0] = *p0.terms().begin();
  Rational r = it->second.coeff(m0) / c0;
  if (!(a == b * r)) ok = false;
  return r;
}

}  // namespace

ScalarComparison compare_rank_one(const ShiftPresentation& left, const ShiftPresentation& right) {
  if (left.V.dim() != 1 || right.V.dim() != 1 || left.n != right.n) throw InvalidInput("rank-one presentations expected");
  ScalarComparison out;
  out.ok = true;
  for (const auto& x : sl_basis(left.n)) {
    const ShiftOp& a = left.image(x)(0, 0);
    const ShiftOp& b = right.image(x)(0, 0);
    bool proportional = true;
    auto r = ratio(a, b, proportional);
    bool consistent = proportional && (!r || !out.scalar || *out.scalar == *r);
    if (proportional && r && !out.scalar) out.scalar = r;
    if (!consistent) {
      out.ok = false;
      out.mismatches.push_back(x.str() + ": " + a.str() + " vs " + b.str());
    }
  }
  return out;
}

NilssonReport nilsson_correspondence_check(const Rational& a, const std::vector<Rational>& b, const Subset& s) {
  const int n = s.n();
  require_nonzero(b, n);
  // A convention is (sign, power) for phi, for b_S on S and for b_S off S: entry = sign * b^power.
  struct Convention {
    int phi_sign, phi_power, on_sign, on_power, off_sign, off_power;
    std::string str() const {
      auto one = [](int sg, int pw) { return std::string(sg < 0 ? "-" : "") + (pw > 0 ? "b" : "1/b"); };
      return "phi=" + one(phi_sign, phi_power) + " on_S=" + one(on_sign, on_power) + " off_S=" + one(off_sign, off_power);
    }
  };
  auto entry = [](int sg, int pw, const Rational& x) { return Rational(sg) * (pw > 0 ? x : Rational(1) / x); };
  auto build = [&](const Convention& c) {
    std::vector<Rational> phi;
    for (const auto& x : b) phi.push_back(entry(c.phi_sign, c.phi_power, x));
    phi.push_back(1);
    ShiftPresentation left = twist_phi(build_nilsson(a, s), phi);
    std::vector<Rational> bs(n);
    for (int j = 0; j < n; ++j)
      bs[j] = s.contains(j) ? entry(c.on_sign, c.on_power, b[j]) : entry(c.off_sign, c.off_power, b[j]);
    ShiftPresentation right = build_hfree(bs, GlModule::one_dim(n, a + 1), s.complement());
    return compare_rank_one(left, right);
  };
  NilssonReport rep;
  rep.literal = build({1, 1, 1, 1, -1, -1});
  rep.verdict.checked = static_cast<int>(sl_basis(n).size());
  if (rep.literal.ok) {
    rep.verdict.witness = "tables agree up to the scalar " + (rep.literal.scalar ? rep.literal.scalar->str() : "1");
  } else {
    rep.verdict.fail(std::to_string(rep.literal.mismatches.size()) + " generators differ; first " +
                     rep.literal.mismatches.front());
  }
  for (int ps : {1, -1})
    for (int pp : {1, -1})
      for (int os : {1, -1})
        for (int op : {1, -1})
          for (int fs : {-1, 1})
            for (int fp : {-1, 1}) {
              Convention c{ps, pp, os, op, fs, fp};
              if (build(c).ok) rep.matching_variants.push_back(c.str());
            }
  return rep;
}

// --------------------------------------------------------------- weighting

std::vector<Rational> root_of(const SlElement& x, int n) {
  std::vector<Rational> r(n, Rational(0));
  if (x.is_h) return r;
  if (x.i < n) r[x.i] += 1;
  if (x.j < n) r[x.j] -= 1;
  return r;
}

RatVector weighting_fiber_act(const ShiftPresentation& m, const SlElement& x, const std::vector<Rational>& lam, int l) {
  const int n = m.n;
  auto alpha = root_of(x, n);
  std::vector<Rational> at(n);
  for (int i = 0; i < n; ++i) at[i] = lam[i] + alpha[i];
  const auto& img = m.image(x);
  RatVector out = RatVector::Zero(m.V.dim());
  for (int j = 0; j < m.V.dim(); ++j) {
    MultiPoly q(n);
    for (const auto& [k, p] : img(j, l).terms()) q += p;  // sigma^k fixes the constant 1
    out(j) = q.eval(at);
  }
  return out;
}

namespace {

// Remainder of f modulo (h_i - c), by synthetic division in h_i.
MultiPoly synthetic_remainder(const MultiPoly& f, int i, const Rational& c) {
  std::map<int, MultiPoly> by_power;
  for (const auto& [m, coef] : f.terms()) {
    MultiIndex rest = m;
    rest[i] = 0;
    auto it = by_power.try_emplace(m[i], MultiPoly(f.nvars())).first;
    it->second.add_term(rest, coef);
  }
  if (by_power.empty()) return MultiPoly(f.nvars());
  MultiPoly acc(f.nvars());
  for (int e = by_power.rbegin()->first; e >= 0; --e) {
    acc = acc * c;
    auto it = by_power.find(e);
    if (it != by_power.end()) acc += it->second;
  }
  return acc;
}

}  // namespace

RatVector weighting_fiber_oracle(const ShiftPresentation& m, const SlElement& x, const std::vector<Rational>& lam,
                                 int l) {
  const int n = m.n;
  auto alpha = root_of(x, n);
  HVector unit(m.V.dim(), MultiPoly(n));
  unit[l] = MultiPoly::constant(n, 1);
  HVector image = hvector_apply(m.image(x), unit);
  RatVector out = RatVector::Zero(m.V.dim());
  for (int j = 0; j < m.V.dim(); ++j) {
    MultiPoly r = image[j];
    for (int i = 0; i < n; ++i) r = synthetic_remainder(r, i, lam[i] + alpha[i]);
    out(j) = r.constant_term();
  }
  return out;
}

FormalScalar::FormalScalar(const std::vector<Rational>& b, const Rational& c) : b_(b) {
  add(Key(b.size() + 1, Rational(0)), c);
}

FormalScalar FormalScalar::power(const std::vector<Rational>& b, int i, const Rational& q) {
  FormalScalar r;
  r.b_ = b;
  Key k(b.size() + 1, Rational(0));
  k[i] = q;
  r.add(k, 1);
  return r;
}

// Canonical form: integral parts of exponents are folded into the coefficient,
// b_i = 1 is dropped, and the exponent of -1 is kept in [0, 1).
void FormalScalar::add(Key k, Rational c) {
  const std::size_t n = b_.size();
  for (std::size_t i = 0; i <= n; ++i) {
    Rational fl = floor_of(k[i]);
    Rational base = i < n ? b_[i] : Rational(-1);
    if (i < n && base == 1) {
      k[i] = 0;
      continue;
    }
    c *= ipow(base, static_cast<int>(to_long(fl)));
    k[i] -= fl;
  }
  if (c == 0) return;
  auto [it, ins] = terms_.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalScalar& FormalScalar::operator+=(const FormalScalar& o) {
  if (b_.empty()) b_ = o.b_;
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

FormalScalar operator*(const FormalScalar& a, const FormalScalar& o) {
  FormalScalar r;
  r.b_ = a.b_.empty() ? o.b_ : a.b_;
  for (const auto& [k1, c1] : a.terms_)
    for (const auto& [k2, c2] : o.terms_) {
      FormalScalar::Key k(k1.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = k1[i] + k2[i];
      r.add(k, c1 * c2);
    }
  return r;
}

FormalScalar operator*(FormalScalar a, const Rational& c) {
  if (c == 0) return FormalScalar(a.b_, 0);
  for (auto& [k, v] : a.terms_) v *= c;
  return a;
}

std::string FormalScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (i < b_.size() ? "b" + std::to_string(i + 1) : std::string("(-1)")) + "^(" + k[i].str() + ")";
    }
    out += format_term(c, mono, first);
    first = false;
  }
  return out;
}

std::string WeightingBases::str() const {
  std::string out;
  for (std::size_t i = 0; i < sign.size(); ++i) {
    out += (i ? "," : "") + std::string(sign[i] < 0 ? "-" : "") + (power[i] > 0 ? "b" : "1/b") + std::to_string(i + 1);
  }
  return out;
}

WeightingBases literal_weighting_bases(int n) { return {std::vector<int>(n, 1), std::vector<int>(n, 1)}; }

std::vector<Rational> sample_rational_weight(int n, std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1));
  std::uniform_int_distribution<int> num(-9, 9), den(2, 7);
  std::vector<Rational> lam(n);
  for (int i = 0; i < n; ++i) {
    do {
      lam[i] = Rational(num(rng), den(rng));
    } while (is_integer(lam[i]));
  }
  return lam;
}

namespace {

using QExp = std::vector<Rational>;
using QKey = std::pair<QExp, int>;
using FVec = std::map<QKey, FormalScalar>;

void facc(FVec& v, const QKey& k, const FormalScalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = v.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

std::string fvec_str(const FVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    if (!out.empty()) out += " + ";
    std::string e;
    for (std::size_t i = 0; i < k.first.size(); ++i) e += (i ? "," : "") + k.first[i].str();
    out += "(" + c.str() + ")*t^(" + e + ")*v" + std::to_string(k.second + 1);
  }
  return out;
}

}  // namespace

Verdict weighting_iso_check(const std::vector<Rational>& b, const GlModule& v, const Subset& s, int samples,
                            std::uint64_t seed) {
  return weighting_iso_check(b, v, s, samples, seed, literal_weighting_bases(v.n()));
}

Verdict weighting_iso_check(const std::vector<Rational>& b, const GlModule& v, const Subset& s, int samples,
                            std::uint64_t seed, const WeightingBases& bases) {
  const int n = v.n();
  require_nonzero(b, n);
  ShiftPresentation source = build_hfree(b, v, s);
  auto target = build_omega(v, s.complement());
  // psi(v_{mu,l}) as a formal scalar times t^E (x) v_l.
  auto psi = [&](const std::vector<Rational>& mu, int l) {
    const Weight& wt = v.weight(l);
    QExp e(n);
    FormalScalar c(b, 1);
    for (int i = 0; i < n; ++i) {
      e[i] = s.contains(i) ? -mu[i] + wt[i] - 1 : mu[i] - wt[i];
      c = c * FormalScalar::power(b, i, e[i] * bases.power[i]);
      if (bases.sign[i] < 0) c = c * FormalScalar::power(b, n, e[i]);
    }
    return std::make_pair(e, c);
  };
  Verdict out;
  for (int sample = 0; sample < samples; ++sample) {
    auto lam = sample_rational_weight(n, seed, sample);
    for (const auto& x : sl_basis(n)) {
      auto alpha = root_of(x, n);
      std::vector<Rational> shifted(n);
      for (int i = 0; i < n; ++i) shifted[i] = lam[i] + alpha[i];
      for (int l = 0; l < v.dim(); ++l) {
        ++out.checked;
        FVec lhs, rhs;
        RatVector q = weighting_fiber_act(source, x, lam, l);
        for (int j = 0; j < v.dim(); ++j) {
          if (q(j) == 0) continue;
          auto [e, c] = psi(shifted, j);
          facc(lhs, {e, j}, c * q(j));
        }
        auto [e0, c0] = psi(lam, l);
        const auto& img = target.image(x);
        for (int r = 0; r < v.dim(); ++r)
          for (const auto& [key, coef] : img(r, l).terms()) {
            Rational k = coef;
            QExp e(n);
            for (int i = 0; i < n; ++i) {
              k *= falling(e0[i], key.second[i]);
              e[i] = e0[i] - key.second[i] + key.first[i];
            }
            facc(rhs, {e, r}, c0 * k);
          }
        if (lhs != rhs) {
          std::string lt;
          for (int i = 0; i < n; ++i) lt += (i ? "," : "") + lam[i].str();
          out.fail(x.str() + " at lambda=(" + lt + "), v" + std::to_string(l + 1) + ": " + fvec_str(lhs) + " vs " +
                   fvec_str(rhs));
        }
      }
    }
  }
  if (out.ok()) out.witness = std::to_string(samples) + " sampled weights, bases " + bases.str();
  return out;
}

}  // namespace sltensor
