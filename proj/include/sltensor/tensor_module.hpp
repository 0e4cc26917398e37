#pragma once

#include "sltensor/sl.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sltensor {

/// Basis element t^m (x) v_l of a tensor module.
using TKey = std::pair<MultiIndex, int>;
/// Finite combination of basis elements.
using TVec = std::map<TKey, Rational>;

void accumulate(TVec& v, const TKey& k, const Rational& c);
TVec operator+(TVec a, const TVec& b);
TVec operator-(TVec a, const TVec& b);
TVec scale(TVec a, const Rational& c);
std::string tvec_str(const TVec& v);

/// Parameters (n, S, g, V) of T(g, V, S).
struct TensorContext {
  int n = 0;
  Subset S;
  MultiPoly g;
  GlModule V;

  static TensorContext make(const GlModule& v, const Subset& s, const MultiPoly& g);
  static TensorContext make(const GlModule& v, const Subset& s) { return make(v, s, MultiPoly(v.n())); }
  std::string str() const;
};

/// Concrete realizations of T(g, V, S):
///  corner             theta_g(omega_V) on the corner C_S of Laurent monomials, with
///                     outputs leaving the corner discarded;
///  polynomial         psi_S(theta_g(omega_V)) on C[t] (isomorphic to corner);
///  exponential_first  theta_g(omega_{V,S}) on C[t], i.e. the D(n)-module e^g C[t]
///                     under omega_{V,S}. Differs from the others when g involves
///                     variables in S.
enum class ModelKind { corner, polynomial, exponential_first };

std::string model_name(ModelKind k);

class Model {
 public:
  Model(ModelKind kind, const TensorContext& ctx);

  ModelKind kind() const { return kind_; }
  const TensorContext& context() const { return ctx_; }
  const SlPresentation<WeylOp>& presentation() const { return pres_; }
  const std::optional<Subset>& corner() const { return corner_; }

  TVec act(const SlElement& x, const TVec& w) const;
  TVec act(const SlCombination& x, const TVec& w) const;
  /// Operator matrix applied to w (entry (r, l) sends t^m (x) v_l to (u t^m) (x) v_r).
  TVec apply(const OpMatrix<WeylOp>& m, const TVec& w) const;
  /// The D(n)-action of t_i on the first factor (identity on V).
  TVec apply_t(int i, const TVec& w) const;
  /// Whether t^m is a basis monomial of the underlying space.
  bool admissible(const MultiIndex& m) const;

 private:
  ModelKind kind_;
  TensorContext ctx_;
  SlPresentation<WeylOp> pres_;
  std::vector<WeylOp> t_ops_;
  std::optional<Subset> corner_;
};

TVec act_corner(const SlElement& x, const TVec& w, const TensorContext& ctx);
TVec act_polynomial_model(const SlElement& x, const TVec& w, const TensorContext& ctx);

/// Corner monomials (m_i < 0 on S, >= 0 off S) with sum_{i in S}(-1-m_i) + sum_{i notin S} m_i <= level.
std::vector<MultiIndex> corner_monomials_by_level(const Subset& s, int level);
/// Corner monomials with |m_i| <= box.
std::vector<MultiIndex> corner_monomials_in_box(const Subset& s, int box);
/// Exponents k >= 0 with |k| <= degree.
std::vector<MultiIndex> polynomial_monomials(int n, int degree);

// ---------------------------------------------------------------- verdicts

enum class Status { pass, fail, inconclusive };
std::string status_name(Status s);

struct Verdict {
  Status status = Status::pass;
  int checked = 0;
  std::string witness;  // first failure, or a description of the certificate
  std::vector<std::string> notes;

  bool ok() const { return status == Status::pass; }
  void fail(const std::string& w) {
    if (status != Status::fail) witness = w;
    status = Status::fail;
  }
};

/// Scalar attached to t^k in the polynomial-to-corner bijection t^k (x) v -> c(k) t^{m(k)} (x) v,
/// m_i = -1 - k_i on S. The default is prod_{i in S} k_i!, from (-d_S)^k (t_S^{-1}).
using BijectionScale = std::function<Rational(const MultiIndex& k, const Subset& s)>;
Rational default_bijection_scale(const MultiIndex& k, const Subset& s);
/// The map k -> d_S^k(t_S^{-1}) read literally: prod (-1)^{k_i} k_i!.
Rational literal_bijection_scale(const MultiIndex& k, const Subset& s);

/// x . Phi(w) = Phi(x . w) for all generators and polynomial basis w of degree <= N.
Verdict model_equivalence_check(const TensorContext& ctx, int degree,
                                const BijectionScale& scale = default_bijection_scale);

enum class SimplicityKind { simple_witnessed, proper_submodule, inconclusive };
std::string simplicity_name(SimplicityKind k);

struct SimplicityResult {
  SimplicityKind kind = SimplicityKind::inconclusive;
  /// Basis of the invariant subspace found (monomials for dim V = 1).
  std::vector<TVec> submodule_basis;
  std::string note;
};

/// dim V = 1: ladder graph on the corner box |m_i| <= box, T' witness when disconnected.
/// g = 0 and dim V > 1: weight-window search. Otherwise inconclusive.
SimplicityResult simplicity_witness(const TensorContext& ctx, int box);

/// Weight-window invariant-subspace search for g = 0 (corner model). Returns proper_submodule
/// or inconclusive; a window cannot certify simplicity.
SimplicityResult window_submodule_search(const TensorContext& ctx, int radius, int margin = 2);

/// Simplicity of T(g, V_a, S) by the four branches on c = (n+1)(a-1): c not integral -> simple;
/// c <= -n-1 -> iff S empty; -n <= c <= -1 -> iff S empty or full; c >= 0 -> iff S full.
Prediction va_prediction(int n, const Rational& a, const Subset& s);

/// Level sum m >= (n+1)(a-1)+1 defining T', if (n+1)(a-1) is an integer.
std::optional<long> tprime_threshold(const TensorContext& ctx);

struct SubmoduleVerdict {
  Verdict verdict;
  bool invariant = false;
  bool nonzero = false;
  bool proper = false;
  bool whole = false;   // submodule equals the module
  bool zero = false;    // submodule is zero
};

/// T' for dim V = 1, checked on the corner box |m_i| <= box.
SubmoduleVerdict check_tprime(const TensorContext& ctx, int box);
/// d(T(P, wedge^{k-1})) inside T(P, wedge^k), corner model, checked on levels <= degree.
SubmoduleVerdict check_derham_image(const TensorContext& ctx, int k, int degree);

/// Which known submodule to test: T' (k unused) or the de Rham image in wedge^k.
struct KnownSubmodule {
  enum class Kind { tprime, derham_image } kind = Kind::tprime;
  int k = 0;
};
/// Dispatches to check_tprime (bound = box) or check_derham_image (bound = level).
SubmoduleVerdict known_submodule_check(const TensorContext& ctx, const KnownSubmodule& which, int bound);

/// d_P on T(P, full exterior algebra) in the given model.
TVec derham_d(const Model& m, const TVec& w);
/// d^2 = 0 and d(x.w) = x.d(w) for all generators on basis vectors of level <= degree.
Verdict derham_check(const TensorContext& ctx, int degree, ModelKind kind = ModelKind::corner);
/// S = {1..n}: d_P(w) = dw + dg ^ w on forms of polynomial degree <= degree.
Verdict witten_compare(int n, const MultiPoly& g, int degree);

/// Whittaker vector check for w = e^{bt} (x) v_l, b of length n (b_{n+1} = 1 implied).
/// Throws InvalidInput naming (i, j) when E_ij v_l != 0 for some i notin S, j in S.
Verdict whittaker_check(const std::vector<Rational>& b, const Subset& s, const GlModule& v, int l);

struct CoherentReport {
  Verdict verdict;
  std::vector<std::string> info;  // non-asserted rank observations
};

/// Multiplicities and (S u {n+1})-injectivity of T((t^lam C[t^{+-1}])^{psi_S}, V) on a window.
CoherentReport coherent_checks(const GlModule& v, const Subset& s, const std::vector<Rational>& lam, int radius);

}  // namespace sltensor
