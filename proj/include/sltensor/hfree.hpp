#pragma once

#include "sltensor/shift.hpp"
#include "sltensor/tensor_module.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sltensor {

using ShiftPresentation = SlPresentation<ShiftOp>;

/// The h-free module on C[h] (x) V with parameters b (all nonzero), from its closed-form table.
ShiftPresentation build_hfree(const std::vector<Rational>& b, const GlModule& v, const Subset& s);

/// The same module obtained by pushing omega_{V,S} through the substitution
/// t_i, d_i -> shift operators and 1 (x) e_rc -> sigma^{wt_r - wt_c} e_rc.
ShiftPresentation hfree_composed(const std::vector<Rational>& b, const GlModule& v, const Subset& s);

/// Rank-one module M_b^S on C[h].
ShiftPresentation build_nilsson(const Rational& b, const Subset& s);

/// h-freeness at operator level: every h_k image is h_k (x) 1.
bool h_images_literal(const ShiftPresentation& p);

/// Element of C[h] (x) V.
using HVector = std::vector<MultiPoly>;

HVector hvector_apply(const OpMatrix<ShiftOp>& m, const HVector& f);
std::string hvector_str(const HVector& f);

/// Image of e^{bt} t^k (x) v_l (k >= 0, exponential-first basis) in C[h] (x) V.
HVector intertwine(const std::vector<Rational>& b, const GlModule& v, const Subset& s, const TKey& key);

/// Phi(x.w) = x.Phi(w) for every generator x and basis w of degree <= N. The target defaults to build_hfree.
Verdict verify_intertwiner(const std::vector<Rational>& b, const GlModule& v, const Subset& s, int degree);
Verdict verify_intertwiner(const ShiftPresentation& target, const std::vector<Rational>& b, const Subset& s,
                           int degree);

/// Per-generator comparison of two rank-one presentations up to a single global scalar.
struct ScalarComparison {
  bool ok = false;
  std::optional<Rational> scalar;
  std::vector<std::string> mismatches;  // generator: left vs right
};
ScalarComparison compare_rank_one(const ShiftPresentation& left, const ShiftPresentation& right);

struct NilssonReport {
  Verdict verdict;
  ScalarComparison literal;
  /// Sign and inversion conventions under which the two tables agree, if any.
  std::vector<std::string> matching_variants;
};

/// phi_b(M_a^S) against build_hfree(b_S, one_dim(a+1), complement of S), (b_S)_j = b_j on S, -1/b_j off S.
NilssonReport nilsson_correspondence_check(const Rational& a, const std::vector<Rational>& b, const Subset& s);

/// Fiber action: x . (1_l + ker(lambda)M) in M / ker(lambda + alpha)M, as coordinates in the 1_j.
RatVector weighting_fiber_act(const ShiftPresentation& m, const SlElement& x, const std::vector<Rational>& lam,
                              int l);
/// Same value via reduction of x . 1_l modulo the ideal (h - lambda - alpha) by synthetic division.
RatVector weighting_fiber_oracle(const ShiftPresentation& m, const SlElement& x, const std::vector<Rational>& lam,
                                 int l);
/// Root of x in h-coordinates.
std::vector<Rational> root_of(const SlElement& x, int n);

/// Formal products c * prod b_i^{q_i} * (-1)^{q_0} with rational q, kept symbolic.
class FormalScalar {
 public:
  using Key = std::vector<Rational>;  // exponents of b_1..b_n, then of -1

  FormalScalar() = default;
  FormalScalar(const std::vector<Rational>& b, const Rational& c);
  /// c * base^q where base is b_i (i < n) or -1 (i == n).
  static FormalScalar power(const std::vector<Rational>& b, int i, const Rational& q);

  bool is_zero() const { return terms_.empty(); }
  FormalScalar& operator+=(const FormalScalar& o);
  friend FormalScalar operator*(const FormalScalar& a, const FormalScalar& o);
  friend FormalScalar operator*(FormalScalar a, const Rational& c);
  friend bool operator==(const FormalScalar& a, const FormalScalar& o) { return a.terms_ == o.terms_; }
  std::string str() const;

 private:
  void add(Key k, Rational c);
  std::vector<Rational> b_;
  std::map<Key, Rational> terms_;
};

/// Base choices for the weighting isomorphism: position i < n uses sign * b_i^{power}.
struct WeightingBases {
  std::vector<int> sign;   // +1 or -1
  std::vector<int> power;  // +1 or -1
  std::string str() const;
};
/// The displayed choice: b_i everywhere.
WeightingBases literal_weighting_bases(int n);

/// For seeded rational lambda: the map v_{lam,l} -> prod_{i in S}(beta_i t_i)^{-lam_i+wt_i-1}
/// prod_{j notin S}(beta_j t_j)^{lam_j-wt_j} (x) v_l intertwines the weighting of build_hfree(b,V,S)
/// with the coherent family of (V, complement of S).
Verdict weighting_iso_check(const std::vector<Rational>& b, const GlModule& v, const Subset& s, int samples,
                            std::uint64_t seed, const WeightingBases& bases);
Verdict weighting_iso_check(const std::vector<Rational>& b, const GlModule& v, const Subset& s, int samples,
                            std::uint64_t seed);

/// Seeded rational tuple with small numerators and denominators, never an integer.
std::vector<Rational> sample_rational_weight(int n, std::uint64_t seed, int index);

}  // namespace sltensor
