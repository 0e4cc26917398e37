#pragma once

#include "sltensor/glmodule.hpp"
#include "sltensor/opmatrix.hpp"
#include "sltensor/subset.hpp"
#include "sltensor/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sltensor {

/// Basis element of sl(n+1): h(k) with 0 <= k < n, or e(i, j) with
/// 0 <= i != j <= n. Index n is the extra coordinate n+1.
struct SlElement {
  bool is_h = false;
  int i = 0;
  int j = 0;

  static SlElement h(int k) { return {true, k, k}; }
  static SlElement e(int i, int j) { return {false, i, j}; }

  /// "h2", "e(1,3)" (1-based).
  std::string str() const;
  friend auto operator<=>(const SlElement&, const SlElement&) = default;
};

using SlCombination = std::map<SlElement, Rational>;

/// h_1..h_n followed by e(i,j) in lexicographic order.
std::vector<SlElement> sl_basis(int n);
/// Position of x in sl_basis(n).
int sl_index(const SlElement& x, int n);

/// (n+1)x(n+1) matrix of x: e(i,j) -> E_ij, h(k) -> E_kk - I/(n+1).
RatMatrix sl_matrix(const SlElement& x, int n);
/// Coordinates of a traceless matrix in the fixed basis.
SlCombination sl_decompose(const RatMatrix& m, int n);
SlCombination sl_bracket(const SlElement& x, const SlElement& y, int n);
std::string combination_str(const SlCombination& c);

/// Map from the sl(n+1) basis to operator matrices over `Op`.
template <typename Op>
struct SlPresentation {
  int n = 0;
  GlModule V;
  std::vector<OpMatrix<Op>> images;  // indexed like sl_basis(n)
  std::string label;

  const OpMatrix<Op>& image(const SlElement& x) const { return images[sl_index(x, n)]; }
  OpMatrix<Op>& image(const SlElement& x) { return images[sl_index(x, n)]; }

  OpMatrix<Op> image(const SlCombination& c) const {
    OpMatrix<Op> r(n, V.dim());
    for (const auto& [x, coef] : c) r += image(x) * coef;
    return r;
  }
};

struct PairFailure {
  SlElement x;
  SlElement y;
  std::string residual;
};

struct PresentationVerdict {
  bool ok = true;
  int pairs_checked = 0;
  std::vector<PairFailure> failures;
};

/// Checks [P(x), P(y)] = P([x, y]) for every unordered basis pair.
template <typename Op>
PresentationVerdict verify_presentation(const SlPresentation<Op>& p) {
  PresentationVerdict out;
  auto basis = sl_basis(p.n);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      ++out.pairs_checked;
      OpMatrix<Op> lhs = commutator(p.images[a], p.images[b]);
      OpMatrix<Op> rhs = p.image(sl_bracket(basis[a], basis[b], p.n));
      if (!(lhs == rhs)) out.failures.push_back({basis[a], basis[b], (lhs - rhs).str()});
    }
  out.ok = out.failures.empty();
  return out;
}

/// x -> P(tau(x)) with tau(e_ij) = -e_ji, tau(h_k) = -h_k.
template <typename Op>
SlPresentation<Op> twist_tau(const SlPresentation<Op>& p) {
  SlPresentation<Op> r = p;
  for (const auto& x : sl_basis(p.n))
    r.image(x) = x.is_h ? -p.image(x) : -p.image(SlElement::e(x.j, x.i));
  r.label = p.label + "|tau";
  return r;
}

/// Scales the image of e_ij by a_i / a_j; a has length n+1, entries nonzero.
template <typename Op>
SlPresentation<Op> twist_phi(const SlPresentation<Op>& p, const std::vector<Rational>& a) {
  if (static_cast<int>(a.size()) != p.n + 1) throw InvalidInput("phi twist needs n+1 scalars");
  for (const auto& x : a)
    if (x == 0) throw InvalidInput("phi twist scalars must be nonzero");
  SlPresentation<Op> r = p;
  for (const auto& x : sl_basis(p.n))
    if (!x.is_h) r.image(x) = p.image(x) * (a[x.i] / a[x.j]);
  r.label = p.label + "|phi";
  return r;
}

/// Entrywise exp(g) twist.
SlPresentation<WeylOp> twist_exp(const SlPresentation<WeylOp>& p, const MultiPoly& g);
/// Entrywise Fourier twist psi_S.
SlPresentation<WeylOp> twist_fourier(const SlPresentation<WeylOp>& p, const Subset& s);

/// omega_{V,S} from its closed-form table.
SlPresentation<WeylOp> build_omega(const GlModule& v, const Subset& s);

/// Quadratic Casimir sum_{i!=j} e_ij e_ji + sum_k h_k^2 + (sum_k h_k)^2 evaluated in P.
template <typename Op>
OpMatrix<Op> casimir_image(const SlPresentation<Op>& p) {
  const int n = p.n;
  OpMatrix<Op> c(n, p.V.dim());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) c += p.image(SlElement::e(i, j)) * p.image(SlElement::e(j, i));
  OpMatrix<Op> hsum(n, p.V.dim());
  for (int k = 0; k < n; ++k) {
    const auto& h = p.image(SlElement::h(k));
    c += h * h;
    hsum += h;
  }
  c += hsum * hsum;
  return c;
}

struct CasimirResult {
  std::optional<Rational> scalar;
  std::string residual;  // set when not scalar
};

template <typename Op>
CasimirResult casimir_scalar(const SlPresentation<Op>& p) {
  OpMatrix<Op> c = casimir_image(p);
  CasimirResult out;
  std::optional<Rational> val = c(0, 0).as_scalar();
  if (val) {
    OpMatrix<Op> expect = OpMatrix<Op>::identity(p.n, p.V.dim()) * *val;
    if (c == expect) {
      out.scalar = val;
      return out;
    }
  }
  out.residual = c.str();
  return out;
}

/// Casimir scalar of the finite-dimensional sl(n+1)-module of highest weight nu
/// (nu_k = value on h_k), computed by matrix arithmetic. Nullopt if nu is not dominant integral.
std::optional<Rational> casimir_oracle(const std::vector<Rational>& nu);

enum class WeightFamily { N, S, R };

struct WeightClass {
  WeightFamily family = WeightFamily::N;
  int k = 0;  // S: 1..n (H^{k-1,k}); R: 0..n (H^k)
  std::string str() const;
};

/// Family (N, H^{k-1,k} or H^k) of lam - 1 for a gl(n) weight lam; no dominance check.
WeightClass classify_shifted_weight(const std::vector<Rational>& lam);

enum class Prediction { simple, not_simple };

struct ClassPrediction {
  WeightClass cls;
  Prediction prediction;
};

/// Classification plus the predicted simplicity of T(g, L(lam), S). Rejects non-dominant lam.
ClassPrediction classify_and_predict(const std::vector<Rational>& lam, const Subset& s);

}  // namespace sltensor
