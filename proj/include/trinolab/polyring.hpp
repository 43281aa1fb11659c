// Dense univariate polynomials over GF(3^2k).
#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trinolab/gf3m.hpp"

namespace trinolab {

/// Coefficients indexed by degree, trailing zeros trimmed; the zero
/// polynomial has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(const FieldCtx& field) : field_(&field) {}
  Poly(const FieldCtx& field, std::vector<Element> coeffs) : field_(&field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
      if (c.field() != field_) throw Error("field mismatch");
    trim();
  }

  /// Coefficients given as small integers, constant term first.
  static Poly from_ints(const FieldCtx& field, std::initializer_list<long long> ints) {
    std::vector<Element> coeffs;
    coeffs.reserve(ints.size());
    for (long long v : ints) coeffs.push_back(field.from_int(v));
    return Poly(field, std::move(coeffs));
  }
  static Poly constant(const Element& c) { return Poly(*c.field(), {c}); }
  static Poly monomial(const Element& c, std::size_t degree) {
    std::vector<Element> coeffs(degree + 1, c.field()->zero());
    coeffs[degree] = c;
    return Poly(*c.field(), std::move(coeffs));
  }
  /// X - r.
  static Poly linear_root(const Element& r) { return Poly(*r.field(), {-r, r.field()->one()}); }

  const FieldCtx& field() const { return *field_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }
  const Element& leading() const {
    if (coeffs_.empty()) throw Error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  /// Horner evaluation.
  Element operator()(const Element& x) const {
    Element acc = field_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& other) {
    check_field(other);
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& other) { return *this += -other; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(*a.field_);
    std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_->zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(*a.field_, std::move(out));
  }
  friend Poly operator*(Poly a, const Element& c) {
    for (auto& x : a.coeffs_) x *= c;
    a.trim();
    return a;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_field(const Poly& other) const {
    if (field_ != other.field_) throw Error("field mismatch");
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  const FieldCtx* field_;
  std::vector<Element> coeffs_;
};

/// P = Q * quotient + remainder with deg remainder < deg Q.
inline std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error("division by zero polynomial");
  if (&p.field() != &q.field()) throw Error("field mismatch");
  const FieldCtx& f = p.field();
  if (p.degree() < q.degree()) return {Poly(f), p};
  std::vector<Element> rem = p.coeffs();
  std::vector<Element> quot(static_cast<std::size_t>(p.degree() - q.degree() + 1), f.zero());
  const Element lead_inv = inv(q.leading());
  const auto& qc = q.coeffs();
  for (std::size_t top = rem.size(); top-- > qc.size() - 1;) {
    if (rem[top].is_zero()) continue;
    const Element c = rem[top] * lead_inv;
    const std::size_t shift = top - (qc.size() - 1);
    quot[shift] = c;
    for (std::size_t i = 0; i < qc.size(); ++i) rem[shift + i] -= c * qc[i];
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

inline Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * inv(p.leading());
}

/// Monic gcd; gcd(P, 0) is monic(P) and gcd(0, 0) is an error.
inline Poly gcd(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Formal derivative; terms of degree divisible by 3 vanish.
inline Poly derivative(const Poly& p) {
  const FieldCtx& f = p.field();
  if (p.degree() < 1) return Poly(f);
  std::vector<Element> out;
  out.reserve(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out.push_back(p.coeffs()[i] * f.from_int(static_cast<long long>(i)));
  return Poly(f, std::move(out));
}

/// outer(inner(X)), Horner over polynomials.
inline Poly compose(const Poly& outer, const Poly& inner) {
  Poly acc(outer.field());
  for (auto it = outer.coeffs().rbegin(); it != outer.coeffs().rend(); ++it) acc = acc * inner + Poly::constant(*it);
  return acc;
}

/// All x in the set with P(x) = 0, increasing encoding, no repeats.
/// Exhaustive: O(|S| * deg P) field operations.
inline std::vector<Element> roots_in_set(const Poly& p, std::span<const Element> set) {
  if (p.is_zero()) throw Error("zero polynomial has every root");
  std::vector<Element> out;
  for (const auto& x : set)
    if (p(x).is_zero()) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct QuadraticFactor {
  Element a;
  Element b;

  friend bool operator==(const QuadraticFactor&, const QuadraticFactor&) = default;
  friend auto operator<=>(const QuadraticFactor& x, const QuadraticFactor& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }
  /// X^2 + aX + b.
  Poly poly() const { return Poly(*a.field(), {b, a, a.field()->one()}); }
};

namespace detail {

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return divrem(a * b, m).second; }

inline Poly cube_mod(const Poly& h, const Poly& m) { return mulmod(mulmod(h, h, m), h, m); }

/// Splits a monic squarefree product of distinct irreducibles of degree d
/// (Cantor-Zassenhaus with deterministic X + c, c in encoding order).
/// (X + c)^((Q^d - 1)/2) is the product of its 3^i-th powers, i < d*2k.
inline void split_equal_degree(const Poly& f, int d, std::vector<Poly>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const FieldCtx& field = f.field();
  const Poly x_poly = Poly::monomial(field.one(), 1);
  const std::uint64_t steps = static_cast<std::uint64_t>(d) * field.degree();
  for (std::uint64_t code = 0; code < field.size(); ++code) {
    Poly h = divrem(x_poly + Poly::constant(field.from_encoding(code)), f).second;
    Poly w = h;
    for (std::uint64_t i = 1; i < steps; ++i) {
      h = cube_mod(h, f);
      w = mulmod(w, h, f);
    }
    Poly g = gcd(f, w - Poly::constant(field.one()));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_equal_degree(g, d, out);
      split_equal_degree(divrem(f, g).first, d, out);
      return;
    }
  }
  throw Error("equal-degree splitting failed");
}

}  // namespace detail

/// Every monic X^2 + aX + b dividing P, sorted by (encoding a, encoding b).
///
/// Reducible factors come from pairs of roots (a repeated root r gives
/// (X - r)^2); irreducible ones from the degree-2 part of the distinct-degree
/// factorization gcd(P, X^(Q^2) - X) / gcd(P, X^Q - X), Q = 3^2k.
inline std::vector<QuadraticFactor> quadratic_factors(const Poly& p) {
  if (p.degree() < 2) throw Error("quadratic_factors needs degree >= 2");
  const FieldCtx& f = p.field();
  const Poly pm = monic(p);
  const Poly x_poly = Poly::monomial(f.one(), 1);

  Poly xq = x_poly;
  for (unsigned i = 0; i < f.degree(); ++i) xq = detail::cube_mod(xq, pm);
  Poly xqq = xq;
  for (unsigned i = 0; i < f.degree(); ++i) xqq = detail::cube_mod(xqq, pm);

  const Poly linear_part = gcd(pm, xq - x_poly);
  const Poly upto_quadratic = gcd(pm, xqq - x_poly);
  const Poly quadratic_part = divrem(upto_quadratic, linear_part).first;

  std::vector<Poly> linears;
  detail::split_equal_degree(linear_part, 1, linears);
  std::vector<Element> roots;
  for (const auto& l : linears) roots.push_back(-l.coeff(0));
  std::sort(roots.begin(), roots.end());

  std::vector<QuadraticFactor> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      out.push_back({-(roots[i] + roots[j]), roots[i] * roots[j]});
    const Poly lin = Poly::linear_root(roots[i]);
    const auto [quot, rem] = divrem(pm, lin * lin);
    if (rem.is_zero()) out.push_back({-(roots[i] + roots[i]), roots[i] * roots[i]});
  }

  std::vector<Poly> quads;
  detail::split_equal_degree(quadratic_part, 2, quads);
  for (const auto& qf : quads) out.push_back({qf.coeff(1), qf.coeff(0)});

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- text format: "c0,c1,...,cn", decimal element encodings --------------

inline Poly parse_poly(const FieldCtx& f, std::string_view text) {
  std::vector<Element> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    coeffs.push_back(f.from_encoding(parse_u64(tok)));
    pos = comma + 1;
  }
  return Poly(f, std::move(coeffs));
}

inline std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += to_string(p.coeffs()[i]);
  }
  return out;
}

}  // namespace trinolab
