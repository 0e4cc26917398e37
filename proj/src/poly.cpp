#include "sltensor/poly.hpp"

#include <cctype>
#include <sstream>

namespace sltensor {

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t d = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == d) throw InvalidInput("malformed rational '" + std::string(text) + "'");
    return std::string(text.substr(start, pos - start));
  };
  std::string num = digits(true);
  if (num[0] == '+') num.erase(0, 1);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits(false);
  }
  if (pos != text.size()) throw InvalidInput("malformed rational '" + std::string(text) + "'");
  Integer d(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(Integer(num), d);
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c, bool laurent) {
  MultiPoly p(nvars, laurent);
  p.add_term(MultiIndex(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(const MultiIndex& m, const Rational& c, bool laurent) {
  MultiPoly p(static_cast<int>(m.size()), laurent);
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i, bool laurent) {
  return monomial(unit_index(nvars, i), 1, laurent);
}

Rational MultiPoly::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const MultiIndex& m, const Rational& c) {
  if (static_cast<int>(m.size()) != n_)
    throw InvalidInput("monomial has " + std::to_string(m.size()) + " exponents, expected " +
                       std::to_string(n_));
  if (!laurent_)
    for (int e : m)
      if (e < 0) throw InvalidInput("negative exponent in a non-Laurent polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (n_ != o.n_) throw InvalidInput("polynomials in different numbers of variables");
  if (laurent_ != o.laurent_) throw InvalidInput("mixing Laurent and ordinary polynomials");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.n_, a.laurent_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::diff(int i) const {
  if (i < 0 || i >= n_) throw InvalidInput("derivative index out of range");
  MultiPoly r(n_, laurent_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    MultiIndex d = m;
    d[i] -= 1;
    r.add_term(d, c * m[i]);
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != n_) throw InvalidInput("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < n_; ++i) v *= ipow(point[i], m[i]);
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::shifted(const MultiIndex& shift) const {
  if (static_cast<int>(shift.size()) != n_) throw InvalidInput("shift has wrong length");
  if (laurent_) throw InvalidInput("shifting a Laurent polynomial is not supported");
  MultiPoly r(n_, false);
  for (const auto& [m, c] : terms_) {
    MultiPoly term = constant(n_, c);
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      // (h_i - s)^e by the binomial theorem
      MultiPoly factor(n_);
      Rational binom = 1;
      Rational neg_s = -Rational(shift[i]);
      for (int k = 0; k <= m[i]; ++k) {
        MultiIndex e(n_, 0);
        e[i] = m[i] - k;
        factor.add_term(e, binom * ipow(neg_s, k));
        binom = binom * (m[i] - k) / (k + 1);
      }
      term = term * factor;
    }
    r += term;
  }
  return r;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

std::string monomial_string(const MultiIndex& m, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var + std::to_string(i + 1);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string format_term(const Rational& c, const std::string& mono, bool first) {
  std::string out;
  Rational mag = c;
  if (c < 0) {
    out += first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out += " + ";
  }
  if (mono.empty()) return out + mag.str();
  if (mag != 1) out += mag.str() + "*";
  return out + mono;
}

std::string MultiPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    out += format_term(c, monomial_string(m, var), first);
    first = false;
  }
  return out;
}

}  // namespace sltensor
