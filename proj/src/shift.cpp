#include "sltensor/shift.hpp"

namespace sltensor {

ShiftOp ShiftOp::constant(int n, const Rational& c) { return term(MultiPoly::constant(n, c), MultiIndex(n, 0)); }

ShiftOp ShiftOp::poly(const MultiPoly& p) { return term(p, MultiIndex(p.nvars(), 0)); }

ShiftOp ShiftOp::h(int n, int i) { return poly(MultiPoly::variable(n, i)); }

ShiftOp ShiftOp::shift(const MultiIndex& k) {
  const int n = static_cast<int>(k.size());
  return term(MultiPoly::constant(n, 1), k);
}

ShiftOp ShiftOp::term(const MultiPoly& p, const MultiIndex& k) {
  ShiftOp u(p.nvars());
  u.add_term(k, p);
  return u;
}

void ShiftOp::add_term(const MultiIndex& k, const MultiPoly& p) {
  if (static_cast<int>(k.size()) != n_ || p.nvars() != n_) throw InvalidInput("shift operator term has the wrong n");
  if (p.laurent()) throw InvalidInput("shift operator coefficients are ordinary polynomials");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Rational> ShiftOp::as_scalar() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [k, p] = *terms_.begin();
  if (total_degree(k) != 0 || k != MultiIndex(n_, 0) || p.degree() != 0) return std::nullopt;
  return p.constant_term();
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& o) {
  if (n_ != o.n_) throw InvalidInput("shift operators over different n");
  for (const auto& [k, p] : o.terms_) add_term(k, p);
  return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& o) {
  if (n_ != o.n_) throw InvalidInput("shift operators over different n");
  for (const auto& [k, p] : o.terms_) add_term(k, -p);
  return *this;
}

ShiftOp& ShiftOp::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, p] : terms_) p *= c;
  return *this;
}

ShiftOp operator*(const ShiftOp& u, const ShiftOp& v) {
  if (u.n_ != v.n_) throw InvalidInput("shift operators over different n");
  ShiftOp r(u.n_);
  // (p s^k)(q s^l) = p q(h - k) s^(k + l)
  for (const auto& [k, p] : u.terms_)
    for (const auto& [l, q] : v.terms_) r.add_term(k + l, p * q.shifted(k));
  return r;
}

MultiPoly ShiftOp::apply(const MultiPoly& f) const {
  MultiPoly r(n_);
  for (const auto& [k, p] : terms_) r += p * f.shifted(k);
  return r;
}

std::string ShiftOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, p] : terms_) {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (k[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "s" + std::to_string(i + 1);
      if (k[i] != 1) s += "^" + std::to_string(k[i]);
    }
    if (p.size() == 1 && p.degree() == 0) {
      out += format_term(p.constant_term(), s, first);
    } else {
      std::string coeff = "(" + p.str("h") + ")";
      out += (first ? "" : " + ") + coeff + (s.empty() ? "" : "*" + s);
    }
    first = false;
  }
  return out;
}

}  // namespace sltensor
