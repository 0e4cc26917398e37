#pragma once

#include "sltensor/linalg.hpp"
#include "sltensor/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace sltensor {

using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;
using Weight = std::vector<Rational>;

/// Finite-dimensional gl(n)-module on an explicit weight basis.
class GlModule {
 public:
  GlModule() = default;

  int n() const { return n_; }
  int dim() const { return dim_; }
  /// Matrix of E_ij (0-based i, j).
  const RatMatrix& E(int i, int j) const { return action_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& weight(int l) const { return weights_[l]; }
  const std::string& name() const { return name_; }

  /// a * trace: dim 1, E_ij -> a delta_ij.
  static GlModule one_dim(int n, const Rational& a);
  /// k-th exterior power of the natural module, basis e_L for k-subsets L in lex order.
  static GlModule exterior(int n, int k);
  /// V (x) W with basis v_a (x) w_b at index a * dim W + b.
  static GlModule tensor(const GlModule& v, const GlModule& w);
  /// Direct sum, blocks in the given order.
  static GlModule direct_sum(const std::vector<GlModule>& parts, const std::string& name);
  /// Whole exterior algebra, graded by degree (blocks exterior(0..n)).
  static GlModule exterior_algebra(int n);
  /// From supplied matrices; rejects data failing the gl(n) relations.
  static GlModule from_matrices(int n, std::vector<RatMatrix> action, std::vector<Weight> weights,
                                const std::string& name = "explicit");
  /// Simple module of highest weight lam (lam_i - lam_{i+1} nonnegative integers).
  static GlModule highest_weight(const std::vector<Rational>& lam);

  /// Replaces E_ij by E_ij + c delta_ij (tensoring with one_dim(c)).
  GlModule shifted_by_trace(const Rational& c) const;
  GlModule with_name(std::string name) const {
    GlModule r = *this;
    r.name_ = std::move(name);
    return r;
  }

  /// Direct access for corruption tests.
  RatMatrix& mutable_E(int i, int j) { return action_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<RatMatrix> action_;
  std::vector<Weight> weights_;
  std::string name_;
};

struct GlVerdict {
  bool ok = true;
  /// 1-based (i, j, k, l) with [E_ij, E_kl] != delta_jk E_il - delta_li E_kj.
  std::vector<std::array<int, 4>> bracket_failures;
  /// 1-based k with E_kk not diagonal or disagreeing with the weights.
  std::vector<int> weight_failures;
};

GlVerdict verify_gl_relations(const GlModule& v);

/// Weyl dimension formula prod_{i<j} (lam_i - lam_j + j - i) / (j - i).
Rational weyl_dimension(const std::vector<Rational>& lam);

/// True when lam_i - lam_{i+1} is a nonnegative integer for all i.
bool is_dominant(const std::vector<Rational>& lam);

/// "va:1/3", "wedge:2", "hw:2,0", "tensor(wedge:1,va:1/2)".
GlModule parse_module_spec(const std::string& text, int n);

/// Lex-ordered k-subsets of {0..n-1}.
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace sltensor
