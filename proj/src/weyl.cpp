#include "sltensor/weyl.hpp"

#include <functional>

namespace sltensor {

WeylOp WeylOp::constant(int n, const Rational& c) {
  WeylOp u(n);
  u.add_term(MultiIndex(n, 0), MultiIndex(n, 0), c);
  return u;
}

WeylOp WeylOp::term(const MultiIndex& a, const MultiIndex& b, const Rational& c) {
  WeylOp u(static_cast<int>(a.size()));
  u.add_term(a, b, c);
  return u;
}

WeylOp WeylOp::t(int n, int i) { return term(unit_index(n, i), MultiIndex(n, 0)); }
WeylOp WeylOp::d(int n, int i) { return term(MultiIndex(n, 0), unit_index(n, i)); }

WeylOp WeylOp::multiplication(const MultiPoly& p) {
  if (p.laurent()) throw InvalidInput("Weyl operators have polynomial coefficients");
  WeylOp u(p.nvars());
  for (const auto& [m, c] : p.terms()) u.add_term(m, MultiIndex(p.nvars(), 0), c);
  return u;
}

void WeylOp::add_term(const MultiIndex& a, const MultiIndex& b, const Rational& c) {
  if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
    throw InvalidInput("Weyl monomial has the wrong number of variables");
  for (int i = 0; i < n_; ++i)
    if (a[i] < 0 || b[i] < 0) throw InvalidInput("negative exponent in a Weyl monomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational WeylOp::coeff(const MultiIndex& a, const MultiIndex& b) const {
  auto it = terms_.find(Key{a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> WeylOp::as_scalar() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, c] = *terms_.begin();
  if (total_degree(key.first) != 0 || total_degree(key.second) != 0) return std::nullopt;
  return c;
}

void WeylOp::check_same(const WeylOp& o) const {
  if (n_ != o.n_) throw InvalidInput("Weyl operators over different n");
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

WeylOp& WeylOp::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

WeylOp operator*(const WeylOp& u, const WeylOp& v) {
  u.check_same(v);
  const int n = u.n_;
  WeylOp r(n);
  // t^a d^b t^c d^e = sum_k prod_i C(b_i,k_i) (c_i)_(k_i) t^(a+c-k) d^(b+e-k)
  for (const auto& [ku, cu] : u.terms_) {
    const auto& [a, b] = ku;
    for (const auto& [kv, cv] : v.terms_) {
      const auto& [c, e] = kv;
      MultiIndex k(n, 0);
      std::function<void(int, Rational)> rec = [&](int i, Rational coef) {
        if (i == n) {
          MultiIndex tt(n), dd(n);
          for (int j = 0; j < n; ++j) {
            tt[j] = a[j] + c[j] - k[j];
            dd[j] = b[j] + e[j] - k[j];
          }
          r.add_term(tt, dd, coef);
          return;
        }
        int top = std::min(b[i], c[i]);
        Rational binom = 1;
        for (int ki = 0; ki <= top; ++ki) {
          k[i] = ki;
          rec(i + 1, coef * binom * falling(c[i], ki));
          binom = binom * (b[i] - ki) / (ki + 1);
        }
        k[i] = 0;
      };
      rec(0, cu * cv);
    }
  }
  return r;
}

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono = monomial_string(k.first, "t");
    std::string dpart = monomial_string(k.second, "d");
    if (!dpart.empty()) mono = mono.empty() ? dpart : mono + "*" + dpart;
    out += format_term(c, mono, first);
    first = false;
  }
  return out;
}

WeylOp commutator(const WeylOp& u, const WeylOp& v) { return u * v - v * u; }

namespace {

// Image of t^a d^b under a map given on generators.
WeylOp map_monomial(const WeylOp::Key& key, const std::vector<WeylOp>& t_img, const std::vector<WeylOp>& d_img, int n) {
  WeylOp r = WeylOp::constant(n, 1);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < key.first[i]; ++p) r = r * t_img[i];
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < key.second[i]; ++p) r = r * d_img[i];
  return r;
}

WeylOp map_generators(const WeylOp& u, const std::vector<WeylOp>& t_img, const std::vector<WeylOp>& d_img) {
  const int n = u.n();
  WeylOp r(n);
  for (const auto& [k, c] : u.terms()) r += map_monomial(k, t_img, d_img, n) * c;
  return r;
}

}  // namespace

WeylOp fourier(const WeylOp& u, const Subset& s) {
  const int n = u.n();
  if (s.n() != n) throw InvalidInput("subset and operator disagree on n");
  std::vector<WeylOp> t_img, d_img;
  for (int i = 0; i < n; ++i) {
    if (s.contains(i)) {
      t_img.push_back(WeylOp::d(n, i));
      d_img.push_back(-WeylOp::t(n, i));
    } else {
      t_img.push_back(WeylOp::t(n, i));
      d_img.push_back(WeylOp::d(n, i));
    }
  }
  return map_generators(u, t_img, d_img);
}

WeylOp exp_twist(const WeylOp& u, const MultiPoly& g) {
  const int n = u.n();
  if (g.nvars() != n) throw InvalidInput("exponent polynomial has the wrong number of variables");
  if (g.constant_term() != 0) throw InvalidInput("exponent polynomial must have zero constant term");
  std::vector<WeylOp> t_img, d_img;
  for (int i = 0; i < n; ++i) {
    t_img.push_back(WeylOp::t(n, i));
    d_img.push_back(WeylOp::d(n, i) + WeylOp::multiplication(g.diff(i)));
  }
  return map_generators(u, t_img, d_img);
}

bool in_corner(const MultiIndex& m, const Subset& s) {
  for (int i = 0; i < s.n(); ++i)
    if ((m[i] < 0) != s.contains(i)) return false;
  return true;
}

LaurentVec apply_to_monomial(const WeylOp& u, const MultiIndex& m, const std::optional<Subset>& corner) {
  const int n = u.n();
  if (static_cast<int>(m.size()) != n) throw InvalidInput("monomial has the wrong number of variables");
  if (corner && !in_corner(m, *corner)) throw InvalidInput("monomial lies outside the corner");
  LaurentVec out;
  for (const auto& [k, c] : u.terms()) {
    const auto& [a, b] = k;
    Rational coef = c;
    MultiIndex e(n);
    for (int i = 0; i < n; ++i) {
      coef *= falling(m[i], b[i]);
      e[i] = m[i] - b[i] + a[i];
    }
    if (coef == 0) continue;
    if (corner) {
      bool keep = true;
      for (int i = 0; i < n; ++i)
        if (corner->contains(i) && e[i] >= 0) keep = false;
      if (!keep) continue;
    }
    auto [it, inserted] = out.try_emplace(e, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

LaurentVec apply_to_vector(const WeylOp& u, const LaurentVec& v, const std::optional<Subset>& corner) {
  LaurentVec out;
  for (const auto& [m, c] : v) {
    for (const auto& [e, x] : apply_to_monomial(u, m, corner)) {
      auto [it, inserted] = out.try_emplace(e, c * x);
      if (!inserted) {
        it->second += c * x;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace sltensor
