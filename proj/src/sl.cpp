#include "sltensor/sl.hpp"

#include <stdexcept>

namespace sltensor {

std::string SlElement::str() const {
  if (is_h) return "h" + std::to_string(i + 1);
  return "e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::vector<SlElement> sl_basis(int n) {
  std::vector<SlElement> out;
  for (int k = 0; k < n; ++k) out.push_back(SlElement::h(k));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) out.push_back(SlElement::e(i, j));
  return out;
}

int sl_index(const SlElement& x, int n) {
  if (x.is_h) {
    if (x.i < 0 || x.i >= n) throw InvalidInput("h index out of range");
    return x.i;
  }
  if (x.i == x.j || x.i < 0 || x.j < 0 || x.i > n || x.j > n) throw InvalidInput("bad root vector " + x.str());
  return n + x.i * n + (x.j < x.i ? x.j : x.j - 1);
}

RatMatrix sl_matrix(const SlElement& x, int n) {
  RatMatrix m = RatMatrix::Zero(n + 1, n + 1);
  if (x.is_h) {
    for (int k = 0; k <= n; ++k) m(k, k) = Rational(-1, n + 1);
    m(x.i, x.i) += 1;
  } else {
    m(x.i, x.j) = 1;
  }
  return m;
}

SlCombination sl_decompose(const RatMatrix& m, int n) {
  SlCombination out;
  Rational trace = 0;
  for (int k = 0; k <= n; ++k) trace += m(k, k);
  if (trace != 0) throw InvalidInput("matrix is not traceless");
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j && m(i, j) != 0) out[SlElement::e(i, j)] = m(i, j);
  // sum_k c_k h_k has diagonal c_k - (sum c)/(n+1) and -(sum c)/(n+1) in the last slot.
  for (int k = 0; k < n; ++k) {
    Rational c = m(k, k) - m(n, n);
    if (c != 0) out[SlElement::h(k)] = c;
  }
  return out;
}

SlCombination sl_bracket(const SlElement& x, const SlElement& y, int n) {
  RatMatrix a = sl_matrix(x, n), b = sl_matrix(y, n);
  return sl_decompose(a * b - b * a, n);
}

std::string combination_str(const SlCombination& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [x, coef] : c) {
    out += format_term(coef, x.str(), first);
    first = false;
  }
  return out;
}

SlPresentation<WeylOp> twist_exp(const SlPresentation<WeylOp>& p, const MultiPoly& g) {
  SlPresentation<WeylOp> r = p;
  for (auto& img : r.images) img = img.map([&](const WeylOp& u) { return exp_twist(u, g); });
  r.label = p.label + "|exp(" + g.str() + ")";
  return r;
}

SlPresentation<WeylOp> twist_fourier(const SlPresentation<WeylOp>& p, const Subset& s) {
  SlPresentation<WeylOp> r = p;
  for (auto& img : r.images) img = img.map([&](const WeylOp& u) { return fourier(u, s); });
  r.label = p.label + "|psi" + s.str();
  return r;
}

SlPresentation<WeylOp> build_omega(const GlModule& v, const Subset& s) {
  const int n = v.n();
  if (s.n() != n) throw InvalidInput("subset and module disagree on n");
  const int dim = v.dim();
  using M = OpMatrix<WeylOp>;
  auto one = [&] { return WeylOp::constant(n, 1); };
  auto t = [&](int i) { return WeylOp::t(n, i); };
  auto d = [&](int i) { return WeylOp::d(n, i); };
  auto E = [&](int i, int j) { return M::tensor(one(), v.E(i, j)); };
  auto sc = [&](const WeylOp& u) { return M::scalar(u, dim); };
  auto opE = [&](const WeylOp& u, int i, int j) { return M::tensor(u, v.E(i, j)); };
  const Rational sz = s.size();

  SlPresentation<WeylOp> p;
  p.n = n;
  p.V = v;
  p.label = "omega(" + v.name() + "," + s.str() + ")";
  p.images.assign(sl_basis(n).size(), M(n, dim));

  for (int k = 0; k < n; ++k)
    p.image(SlElement::h(k)) = s.contains(k) ? sc(t(k) * d(k)) + E(k, k) : sc(-(t(k) * d(k)) - one()) + E(k, k);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool si = s.contains(i), sj = s.contains(j);
      WeylOp u = !si && !sj ? -(t(j) * d(i))
                 : si && sj ? t(i) * d(j)
                 : si       ? t(i) * t(j)
                            : -(d(i) * d(j));
      p.image(SlElement::e(i, j)) = E(i, j) + sc(u);
    }

  for (int j = 0; j < n; ++j) p.image(SlElement::e(n, j)) = sc(s.contains(j) ? -d(j) : -t(j));

  for (int i = 0; i < n; ++i) {
    M img(n, dim);
    for (int j = 0; j < n; ++j) {
      if (s.contains(j))
        img += opE(t(j), i, j);
      else
        img -= opE(d(j), i, j);
    }
    if (!s.contains(i)) {
      for (int j = 0; j < n; ++j) {
        if (s.contains(j))
          img -= sc(t(j) * d(j) * d(i));
        else
          img += sc(t(j) * d(j) * d(i));
        img -= opE(d(i), j, j);
      }
      img += sc(d(i) * (Rational(n + 1) - sz));
    } else {
      for (int j = 0; j < n; ++j) {
        if (s.contains(j))
          img += sc(t(i) * t(j) * d(j));
        else
          img -= sc(t(i) * t(j) * d(j));
        img += opE(t(i), j, j);
      }
      img -= sc(t(i) * (Rational(n) - sz));
    }
    p.image(SlElement::e(i, n)) = img;
  }
  return p;
}

std::optional<Rational> casimir_oracle(const std::vector<Rational>& nu) {
  const int n = static_cast<int>(nu.size());
  Rational s = 0;
  for (const auto& x : nu) s += x;
  std::vector<Rational> lam(n + 1);
  for (int i = 0; i < n; ++i) lam[i] = nu[i] + s;
  lam[n] = 0;
  if (!is_dominant(lam) || !is_integer(lam[n - 1]) || lam[n - 1] < 0) return std::nullopt;
  GlModule big = GlModule::highest_weight(lam);
  const int d = big.dim();
  auto mat = [&](const SlElement& x) -> RatMatrix {
    if (!x.is_h) return big.E(x.i, x.j);
    RatMatrix m = big.E(x.i, x.i);
    for (int k = 0; k <= n; ++k) m -= big.E(k, k) / Rational(n + 1);
    return m;
  };
  RatMatrix c = RatMatrix::Zero(d, d), hsum = RatMatrix::Zero(d, d);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) c += big.E(i, j) * big.E(j, i);
  for (int k = 0; k < n; ++k) {
    RatMatrix h = mat(SlElement::h(k));
    c += h * h;
    hsum += h;
  }
  c += hsum * hsum;
  Rational val = c(0, 0);
  if (c != val * RatMatrix::Identity(d, d)) throw std::logic_error("Casimir is not scalar on a simple module");
  return val;
}

std::string WeightClass::str() const {
  switch (family) {
    case WeightFamily::N:
      return "N";
    case WeightFamily::S:
      return "H^{" + std::to_string(k - 1) + "," + std::to_string(k) + "}";
    case WeightFamily::R:
      return "H^" + std::to_string(k);
  }
  return "?";
}

WeightClass classify_shifted_weight(const std::vector<Rational>& lam) {
  const int n = static_cast<int>(lam.size());
  Rational s = 0;
  for (const auto& x : lam) s += x;
  if (!is_integer(lam[n - 1] + s)) return {WeightFamily::N, 0};
  // 1-based lambda_m - m
  auto shifted = [&](int m) { return lam[m - 1] - m; };
  for (int k = 0; k < n; ++k)
    if (shifted(n - k) == -s) return {WeightFamily::S, k + 1};
  for (int k = 0; k <= n; ++k) {
    bool left = (n - k == 0) || shifted(n - k) > -s;
    bool right = (k == 0) || -s > shifted(n - k + 1);
    if (left && right) return {WeightFamily::R, k};
  }
  throw std::logic_error("integral weight fits no class");
}

ClassPrediction classify_and_predict(const std::vector<Rational>& lam, const Subset& s) {
  if (static_cast<int>(lam.size()) != s.n()) throw InvalidInput("weight and subset disagree on n");
  if (!is_dominant(lam)) throw InvalidInput("weight is not dominant");
  const int n = s.n();
  WeightClass c = classify_shifted_weight(lam);
  bool simple = true;
  switch (c.family) {
    case WeightFamily::N:
      simple = true;
      break;
    case WeightFamily::S:
      simple = s.empty() || s.full();
      break;
    case WeightFamily::R:
      if (c.k == 0)
        simple = s.full();
      else if (c.k == n)
        simple = s.empty();
      else
        simple = false;
      break;
  }
  return {c, simple ? Prediction::simple : Prediction::not_simple};
}

}  // namespace sltensor
