#include "sltensor/glmodule.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sltensor {

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

GlModule GlModule::one_dim(int n, const Rational& a) {
  GlModule v;
  v.n_ = n;
  v.dim_ = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.action_.push_back(RatMatrix::Constant(1, 1, i == j ? a : Rational(0)));
  v.weights_.assign(1, Weight(n, a));
  v.name_ = "va:" + a.str();
  return v;
}

GlModule GlModule::exterior(int n, int k) {
  if (k < 0 || k > n) throw InvalidInput("exterior degree out of range");
  auto basis = k_subsets(n, k);
  std::map<std::vector<int>, int> index;
  for (std::size_t b = 0; b < basis.size(); ++b) index[basis[b]] = static_cast<int>(b);
  GlModule v;
  v.n_ = n;
  v.dim_ = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatMatrix m = RatMatrix::Zero(v.dim_, v.dim_);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const auto& L = basis[b];
        if (!std::binary_search(L.begin(), L.end(), j)) continue;
        if (i == j) {
          m(b, b) = 1;
          continue;
        }
        if (std::binary_search(L.begin(), L.end(), i)) continue;
        // e_j is replaced by e_i in place, then moved past the factors strictly between.
        int between = 0;
        for (int l : L)
          if (l > std::min(i, j) && l < std::max(i, j)) ++between;
        std::vector<int> target = L;
        std::replace(target.begin(), target.end(), j, i);
        std::sort(target.begin(), target.end());
        m(index[target], b) = between % 2 ? -1 : 1;
      }
      v.action_.push_back(m);
    }
  for (const auto& L : basis) {
    Weight w(n, 0);
    for (int l : L) w[l] = 1;
    v.weights_.push_back(w);
  }
  v.name_ = "wedge:" + std::to_string(k);
  return v;
}

GlModule GlModule::tensor(const GlModule& a, const GlModule& b) {
  if (a.n_ != b.n_) throw InvalidInput("tensor factors over different n");
  GlModule v;
  v.n_ = a.n_;
  v.dim_ = a.dim_ * b.dim_;
  RatMatrix ia = RatMatrix::Identity(a.dim_, a.dim_), ib = RatMatrix::Identity(b.dim_, b.dim_);
  for (int i = 0; i < v.n_; ++i)
    for (int j = 0; j < v.n_; ++j) v.action_.push_back(kron(a.E(i, j), ib) + kron(ia, b.E(i, j)));
  for (const auto& wa : a.weights_)
    for (const auto& wb : b.weights_) {
      Weight w(v.n_);
      for (int k = 0; k < v.n_; ++k) w[k] = wa[k] + wb[k];
      v.weights_.push_back(w);
    }
  v.name_ = "tensor(" + a.name_ + "," + b.name_ + ")";
  return v;
}

GlModule GlModule::direct_sum(const std::vector<GlModule>& parts, const std::string& name) {
  if (parts.empty()) throw InvalidInput("empty direct sum");
  GlModule v;
  v.n_ = parts[0].n_;
  for (const auto& p : parts) {
    if (p.n_ != v.n_) throw InvalidInput("direct summands over different n");
    v.dim_ += p.dim_;
  }
  for (int i = 0; i < v.n_; ++i)
    for (int j = 0; j < v.n_; ++j) {
      RatMatrix m = RatMatrix::Zero(v.dim_, v.dim_);
      int off = 0;
      for (const auto& p : parts) {
        m.block(off, off, p.dim_, p.dim_) = p.E(i, j);
        off += p.dim_;
      }
      v.action_.push_back(m);
    }
  for (const auto& p : parts) v.weights_.insert(v.weights_.end(), p.weights_.begin(), p.weights_.end());
  v.name_ = name;
  return v;
}

GlModule GlModule::exterior_algebra(int n) {
  std::vector<GlModule> parts;
  for (int k = 0; k <= n; ++k) parts.push_back(exterior(n, k));
  return direct_sum(parts, "wedge:*");
}

GlModule GlModule::from_matrices(int n, std::vector<RatMatrix> action, std::vector<Weight> weights,
                                 const std::string& name) {
  if (static_cast<int>(action.size()) != n * n) throw InvalidInput("expected n^2 action matrices");
  GlModule v;
  v.n_ = n;
  v.dim_ = static_cast<int>(weights.size());
  for (const auto& m : action)
    if (m.rows() != v.dim_ || m.cols() != v.dim_) throw InvalidInput("action matrix has the wrong size");
  for (const auto& w : weights)
    if (static_cast<int>(w.size()) != n) throw InvalidInput("weight has the wrong length");
  v.action_ = std::move(action);
  v.weights_ = std::move(weights);
  v.name_ = name;
  GlVerdict verdict = verify_gl_relations(v);
  if (!verdict.bracket_failures.empty()) {
    const auto& q = verdict.bracket_failures.front();
    throw InvalidInput("gl relation fails at (i,j,k,l) = (" + std::to_string(q[0]) + "," + std::to_string(q[1]) +
                       "," + std::to_string(q[2]) + "," + std::to_string(q[3]) + ")");
  }
  if (!verdict.weight_failures.empty())
    throw InvalidInput("E_kk disagrees with the weights at k = " + std::to_string(verdict.weight_failures.front()));
  return v;
}

GlModule GlModule::shifted_by_trace(const Rational& c) const {
  GlModule v = *this;
  for (int i = 0; i < n_; ++i) v.mutable_E(i, i) += c * RatMatrix::Identity(dim_, dim_);
  for (auto& w : v.weights_)
    for (auto& x : w) x += c;
  return v;
}

GlVerdict verify_gl_relations(const GlModule& v) {
  GlVerdict out;
  const int n = v.n();
  RatMatrix zero = RatMatrix::Zero(v.dim(), v.dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          RatMatrix lhs = v.E(i, j) * v.E(k, l) - v.E(k, l) * v.E(i, j);
          RatMatrix rhs = zero;
          if (j == k) rhs += v.E(i, l);
          if (l == i) rhs -= v.E(k, j);
          if (lhs != rhs) out.bracket_failures.push_back({i + 1, j + 1, k + 1, l + 1});
        }
  for (int k = 0; k < n; ++k) {
    const RatMatrix& e = v.E(k, k);
    bool good = true;
    for (int r = 0; r < v.dim(); ++r)
      for (int c = 0; c < v.dim(); ++c) {
        Rational expect = r == c ? v.weight(r)[k] : Rational(0);
        if (e(r, c) != expect) good = false;
      }
    if (!good) out.weight_failures.push_back(k + 1);
  }
  out.ok = out.bracket_failures.empty() && out.weight_failures.empty();
  return out;
}

bool is_dominant(const std::vector<Rational>& lam) {
  for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
    Rational d = lam[i] - lam[i + 1];
    if (!is_integer(d) || d < 0) return false;
  }
  return true;
}

Rational weyl_dimension(const std::vector<Rational>& lam) {
  Rational r = 1;
  const int n = static_cast<int>(lam.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r *= (lam[i] - lam[j] + (j - i)) / Rational(j - i);
  return r;
}

GlModule GlModule::highest_weight(const std::vector<Rational>& lam) {
  const int n = static_cast<int>(lam.size());
  if (n == 0) throw InvalidInput("empty weight");
  if (!is_dominant(lam)) throw InvalidInput("weight is not dominant");
  const Rational c = lam[n - 1];
  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i) mu[i] = static_cast<int>(to_long(lam[i] - c));

  // Ambient space: one exterior power per column of the diagram of mu.
  GlModule ambient = one_dim(n, 0);
  for (int col = 1; col <= mu[0]; ++col) {
    int height = 0;
    for (int i = 0; i < n; ++i)
      if (mu[i] >= col) ++height;
    ambient = tensor(ambient, exterior(n, height));
  }
  // Basis vector 0 is e_{1..h} in every factor: the highest weight vector.
  const Eigen::Index big = ambient.dim();
  std::map<Weight, EchelonBasis<Rational>> spaces;
  std::vector<std::pair<Weight, RatVector>> queue;
  RatVector top = RatVector::Zero(big);
  top(0) = 1;
  spaces.emplace(ambient.weight(0), EchelonBasis<Rational>(big));
  spaces.at(ambient.weight(0)).insert(top);
  queue.emplace_back(ambient.weight(0), top);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [w, vec] = queue[q];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) {
        RatVector img = ambient.E(i, j) * vec;
        if (is_zero(img)) continue;
        Weight w2 = w;
        w2[i] += 1;
        w2[j] -= 1;
        auto it = spaces.try_emplace(w2, EchelonBasis<Rational>(big)).first;
        if (it->second.insert(img)) queue.emplace_back(w2, img);
      }
  }

  // Collect the basis, highest weights first, and read off matrices via pivots.
  std::vector<RatVector> basis;
  std::vector<Weight> weights;
  std::vector<Eigen::Index> pivots;
  for (auto it = spaces.rbegin(); it != spaces.rend(); ++it) {
    const auto& eb = it->second;
    for (std::size_t k = 0; k < eb.rows().size(); ++k) {
      basis.push_back(eb.rows()[k]);
      pivots.push_back(eb.pivots()[k]);
      weights.push_back(it->first);
    }
  }
  const int d = static_cast<int>(basis.size());
  std::vector<RatMatrix> action;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatMatrix m = RatMatrix::Zero(d, d);
      for (int b = 0; b < d; ++b) {
        RatVector img = ambient.E(i, j) * basis[b];
        RatVector recon = RatVector::Zero(big);
        for (int r = 0; r < d; ++r) {
          m(r, b) = img(pivots[r]);
          if (m(r, b) != 0) recon += m(r, b) * basis[r];
        }
        if (recon != img) throw std::logic_error("highest weight span is not invariant");
      }
      action.push_back(m);
    }
  Rational expect = weyl_dimension(lam);
  if (Rational(d) != expect)
    throw std::logic_error("highest weight module has dimension " + std::to_string(d) + ", expected " + expect.str());

  std::string name = "hw:";
  for (int i = 0; i < n; ++i) name += (i ? "," : "") + lam[i].str();
  GlModule v = from_matrices(n, std::move(action), std::move(weights), name);
  return c == 0 ? v : v.shifted_by_trace(c).with_name(name);
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

GlModule parse_module_spec(const std::string& raw, int n) {
  const std::string text = trim(raw);
  if (text.rfind("tensor(", 0) == 0 && text.back() == ')') {
    std::string inner = text.substr(7, text.size() - 8);
    // Split on top-level commas; pieces without a kind prefix continue an hw list.
    std::vector<std::string> fixed;
    int depth = 0;
    std::string cur;
    auto flush = [&] {
      std::string piece = trim(cur);
      cur.clear();
      if (!fixed.empty() && piece.find(':') == std::string::npos && piece.rfind("tensor(", 0) != 0)
        fixed.back() += "," + piece;
      else
        fixed.push_back(piece);
    };
    for (char ch : inner) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) {
        flush();
        continue;
      }
      cur += ch;
    }
    flush();
    if (fixed.size() < 2) throw InvalidInput("tensor(...) needs at least two factors: '" + text + "'");
    GlModule v = parse_module_spec(fixed[0], n);
    for (std::size_t k = 1; k < fixed.size(); ++k) v = GlModule::tensor(v, parse_module_spec(fixed[k], n));
    return v;
  }
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("bad module spec '" + text + "'");
  std::string kind = text.substr(0, colon), arg = trim(text.substr(colon + 1));
  if (kind == "va") return GlModule::one_dim(n, parse_rational(arg));
  if (kind == "wedge") {
    if (arg == "*") return GlModule::exterior_algebra(n);
    int k = static_cast<int>(to_long(parse_rational(arg)));
    if (k < 0 || k > n) throw InvalidInput("wedge degree " + arg + " outside 0.." + std::to_string(n));
    return GlModule::exterior(n, k);
  }
  if (kind == "hw") {
    std::vector<Rational> lam;
    std::size_t start = 0;
    while (start <= arg.size()) {
      auto comma = arg.find(',', start);
      std::string item = trim(arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      lam.push_back(parse_rational(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(lam.size()) != n)
      throw InvalidInput("hw weight has " + std::to_string(lam.size()) + " entries, expected " + std::to_string(n));
    return GlModule::highest_weight(lam);
  }
  throw InvalidInput("unknown module kind '" + kind + "'");
}

}  // namespace sltensor
