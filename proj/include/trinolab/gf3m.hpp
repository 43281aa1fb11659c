// Exact arithmetic in GF(3^2k) = GF(3)[X] / (modulus), polynomial basis.
//
// An element is a trit vector c_0 + c_1 X + ... + c_{2k-1} X^{2k-1}. Its
// integer encoding is sum c_i 3^i; the encoding is used for canonical
// ordering and every tie-break (square roots, primitive element, roots of
// X^2+1 and X^3-X-1).
//
// A FieldCtx is immutable once created and is shared by pointer; elements
// carry a raw back-pointer, so the context must outlive its elements.
#pragma once

#include <array>
#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trinolab/numeric.hpp"

namespace trinolab {

inline constexpr unsigned kMaxSupportedK = 20;
inline constexpr unsigned kDefaultMaxK = 6;
inline constexpr std::size_t kMaxTrits = 2 * kMaxSupportedK;

using Trit = std::uint8_t;
using TritVector = std::vector<Trit>;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class Element {
 public:
  Element() = default;

  const FieldCtx* field() const { return field_; }
  bool is_zero() const {
    for (Trit t : trits_)
      if (t != 0) return false;
    return true;
  }
  bool is_one() const;
  Trit trit(std::size_t i) const { return trits_[i]; }
  TritVector trits() const;
  std::uint64_t encoding() const;

  Element& operator+=(const Element& y);
  Element& operator-=(const Element& y);
  Element& operator*=(const Element& y);
  Element& operator/=(const Element& y);

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator/(Element x, const Element& y) { return x /= y; }
  friend Element operator-(const Element& x);

  friend bool operator==(const Element& x, const Element& y) {
    return x.field_ == y.field_ && x.trits_ == y.trits_;
  }
  /// Orders by integer encoding (highest-degree trit decides first).
  friend std::strong_ordering operator<=>(const Element& x, const Element& y) {
    for (std::size_t i = kMaxTrits; i-- > 0;) {
      if (x.trits_[i] != y.trits_[i]) return x.trits_[i] <=> y.trits_[i];
    }
    return std::strong_ordering::equal;
  }

 private:
  friend class FieldCtx;
  explicit Element(const FieldCtx* field) : field_(field) {}

  const FieldCtx* field_ = nullptr;
  std::array<Trit, kMaxTrits> trits_{};
};

namespace detail {

// Dense GF(3)[X] helpers used only to validate and choose the modulus.
using Gf3Poly = std::vector<int>;

inline void gf3_trim(Gf3Poly& p) {
  while (!p.empty() && p.back() % 3 == 0) p.pop_back();
}

inline Gf3Poly gf3_mod(Gf3Poly a, const Gf3Poly& m) {
  for (auto& c : a) c = ((c % 3) + 3) % 3;
  gf3_trim(a);
  const int lead_inv = m.back();  // 1 -> 1, 2 -> 2 (self-inverse mod 3)
  while (a.size() >= m.size()) {
    const int c = (a.back() * lead_inv) % 3;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = ((a[shift + i] - c * m[i]) % 3 + 3) % 3;
    gf3_trim(a);
  }
  return a;
}

inline Gf3Poly gf3_mulmod(const Gf3Poly& a, const Gf3Poly& b, const Gf3Poly& m) {
  if (a.empty() || b.empty()) return {};
  Gf3Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return gf3_mod(std::move(out), m);
}

inline Gf3Poly gf3_gcd(Gf3Poly a, Gf3Poly b) {
  gf3_trim(a);
  gf3_trim(b);
  while (!b.empty()) {
    Gf3Poly r = gf3_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's test: f of degree n is irreducible over GF(3) iff
/// X^(3^n) = X mod f and gcd(X^(3^(n/p)) - X, f) = 1 for each prime p | n.
inline bool gf3_is_irreducible(const TritVector& modulus) {
  Gf3Poly f(modulus.begin(), modulus.end());
  gf3_trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  std::vector<Gf3Poly> frob(n + 1);  // frob[i] = X^(3^i) mod f
  frob[0] = gf3_mod({0, 1}, f);
  for (std::size_t i = 1; i <= n; ++i)
    frob[i] = gf3_mulmod(gf3_mulmod(frob[i - 1], frob[i - 1], f), frob[i - 1], f);
  if (frob[n] != frob[0]) return false;
  for (auto p : numeric::prime_factors(n)) {
    Gf3Poly d = frob[n / p];
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] -= 1;
    for (auto& c : d) c = ((c % 3) + 3) % 3;
    gf3_trim(d);
    if (gf3_gcd(d, f).size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// Lexicographically smallest monic irreducible of the given degree over
/// GF(3), comparing coefficients from the constant term upward.
inline TritVector default_modulus(unsigned degree) {
  if (degree == 0 || degree > kMaxTrits) throw Error("unsupported degree");
  const std::uint64_t count = numeric::pow3(degree);
  TritVector candidate(degree + 1, 0);
  candidate[degree] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = degree; i-- > 0;) {
      candidate[i] = static_cast<Trit>(rest % 3);
      rest /= 3;
    }
    // c_0 is the most significant digit of idx; c_0 = 0 means X divides.
    if (candidate[0] == 0) continue;
    if (detail::gf3_is_irreducible(candidate)) return candidate;
  }
  throw Error("no irreducible polynomial found");
}

class FieldCtx {
 public:
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  /// Builds GF(3^2k). The modulus, if supplied, must be monic of degree 2k
  /// and irreducible; otherwise the default modulus is used.
  static FieldPtr create(unsigned k, std::optional<TritVector> modulus = std::nullopt,
                         unsigned max_k = kDefaultMaxK) {
    if (k < 1 || k > max_k || k > kMaxSupportedK) throw Error("unsupported degree");
    const unsigned m = 2 * k;
    if (modulus) {
      if (modulus->size() != m + 1) throw Error("modulus must have degree 2k");
      for (Trit t : *modulus)
        if (t > 2) throw Error("modulus coefficients must be trits");
      if (modulus->back() != 1) throw Error("modulus must be monic");
      if (!detail::gf3_is_irreducible(*modulus)) throw Error("reducible modulus");
    } else {
      modulus = default_modulus(m);
    }
    std::shared_ptr<FieldCtx> ctx(new FieldCtx(k, std::move(*modulus)));
    ctx->init_primitive();
    return ctx;
  }

  unsigned k() const { return k_; }
  /// Extension degree m = 2k over GF(3).
  unsigned degree() const { return 2 * k_; }
  /// q = 3^k.
  std::uint64_t q() const { return q_; }
  /// Number of field elements, 3^2k.
  std::uint64_t size() const { return size_; }
  /// Order of the multiplicative group, 3^2k - 1.
  std::uint64_t group_order() const { return size_ - 1; }
  const TritVector& modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& group_order_primes() const { return primes_; }
  /// Cached primitive element (smallest encoding of full order).
  const Element& alpha() const { return alpha_; }

  Element zero() const { return Element(this); }
  Element one() const { return from_int(1); }
  /// Image of an integer under Z -> GF(3) -> GF(3^2k).
  Element from_int(long long v) const {
    Element e(this);
    e.trits_[0] = static_cast<Trit>(((v % 3) + 3) % 3);
    return e;
  }
  /// The class of X in GF(3)[X]/(modulus).
  Element generator() const {
    Element e(this);
    e.trits_[1] = 1;
    return e;
  }
  Element from_encoding(std::uint64_t code) const {
    if (code >= size_) throw Error("element encoding out of range");
    Element e(this);
    for (unsigned i = 0; i < degree(); ++i) {
      e.trits_[i] = static_cast<Trit>(code % 3);
      code /= 3;
    }
    return e;
  }
  Element from_trits(std::span<const Trit> trits) const {
    if (trits.size() > degree()) throw Error("too many trits for field");
    Element e(this);
    for (std::size_t i = 0; i < trits.size(); ++i) {
      if (trits[i] > 2) throw Error("trit out of range");
      e.trits_[i] = trits[i];
    }
    return e;
  }
  /// All elements in increasing encoding order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size_);
    Element e(this);
    for (std::uint64_t i = 0; i < size_; ++i) {
      out.push_back(e);
      for (unsigned j = 0; j < degree(); ++j) {  // base-3 increment
        if (++e.trits_[j] < 3) break;
        e.trits_[j] = 0;
      }
    }
    return out;
  }

 private:
  friend class Element;
  friend Element operator*(const Element& x, const Element& y);

  FieldCtx(unsigned k, TritVector modulus)
      : k_(k),
        q_(numeric::pow3(k)),
        size_(numeric::pow3(2 * k)),
        modulus_(std::move(modulus)),
        primes_(numeric::group_order_factors(k)) {}

  void init_primitive();

  Element mul(const Element& x, const Element& y) const {
    const unsigned m = degree();
    std::array<int, 2 * kMaxTrits> acc{};
    for (unsigned i = 0; i < m; ++i) {
      const int xi = x.trits_[i];
      if (xi == 0) continue;
      for (unsigned j = 0; j < m; ++j) acc[i + j] += xi * y.trits_[j];
    }
    for (unsigned d = 2 * m - 2; d >= m; --d) {
      const int c = ((acc[d] % 3) + 3) % 3;
      acc[d] = 0;
      if (c == 0) continue;
      for (unsigned i = 0; i < m; ++i) acc[d - m + i] -= c * modulus_[i];
    }
    Element out(this);
    for (unsigned i = 0; i < m; ++i) out.trits_[i] = static_cast<Trit>(((acc[i] % 3) + 3) % 3);
    return out;
  }

  unsigned k_;
  std::uint64_t q_;
  std::uint64_t size_;
  TritVector modulus_;
  std::vector<std::uint64_t> primes_;
  Element alpha_;
};

namespace detail {
inline const FieldCtx* common_field(const Element& x, const Element& y) {
  if (x.field() == nullptr || x.field() != y.field()) throw Error("field mismatch");
  return x.field();
}
}  // namespace detail

inline bool Element::is_one() const { return field_ != nullptr && *this == field_->one(); }

inline TritVector Element::trits() const {
  const std::size_t m = field_ ? field_->degree() : 0;
  return TritVector(trits_.begin(), trits_.begin() + static_cast<std::ptrdiff_t>(m));
}

inline std::uint64_t Element::encoding() const {
  std::uint64_t code = 0;
  for (std::size_t i = kMaxTrits; i-- > 0;) code = code * 3 + trits_[i];
  return code;
}

inline Element& Element::operator+=(const Element& y) {
  const auto* f = detail::common_field(*this, y);
  for (unsigned i = 0; i < f->degree(); ++i) trits_[i] = static_cast<Trit>((trits_[i] + y.trits_[i]) % 3);
  return *this;
}

inline Element& Element::operator-=(const Element& y) {
  const auto* f = detail::common_field(*this, y);
  for (unsigned i = 0; i < f->degree(); ++i)
    trits_[i] = static_cast<Trit>((trits_[i] + 3 - y.trits_[i]) % 3);
  return *this;
}

inline Element operator-(const Element& x) {
  Element out = x;
  for (auto& t : out.trits_) t = static_cast<Trit>((3 - t) % 3);
  return out;
}

inline Element operator*(const Element& x, const Element& y) {
  return detail::common_field(x, y)->mul(x, y);
}

inline Element& Element::operator*=(const Element& y) { return *this = *this * y; }

/// x^e by square-and-multiply. Negative exponents invert first; for nonzero
/// x the exponent is reduced modulo 3^2k - 1.
template <std::integral E>
Element pow(const Element& x, E e) {
  const FieldCtx* f = x.field();
  if (f == nullptr) throw Error("element has no field");
  std::uint64_t exp = 0;
  Element base = x;
  if constexpr (std::is_signed_v<E>) {
    if (e < 0) {
      if (x.is_zero()) throw Error("division by zero");
      // -(e + 1) + 1 avoids overflow at the minimum value.
      const std::uint64_t mag = static_cast<std::uint64_t>(-(e + 1)) + 1;
      exp = f->group_order() - (mag % f->group_order());
    } else {
      exp = static_cast<std::uint64_t>(e);
    }
  } else {
    exp = static_cast<std::uint64_t>(e);
  }
  if (x.is_zero()) return exp == 0 ? f->one() : f->zero();
  exp %= f->group_order();
  Element acc = f->one();
  while (exp != 0) {
    if (exp & 1U) acc *= base;
    exp >>= 1;
    if (exp != 0) base *= base;
  }
  return acc;
}

inline Element inv(const Element& x) {
  if (x.is_zero()) throw Error("division by zero");
  return pow(x, x.field()->group_order() - 1);
}

inline Element& Element::operator/=(const Element& y) { return *this *= inv(y); }

/// x^(3^e); frobenius(x, k) is the q-power map.
inline Element frobenius(const Element& x, std::uint64_t e) {
  const FieldCtx* f = x.field();
  if (f == nullptr) throw Error("element has no field");
  Element out = x;
  for (std::uint64_t i = 0, n = e % f->degree(); i < n; ++i) out = out * out * out;
  return out;
}

inline Element conjugate_q(const Element& x) { return frobenius(x, x.field()->k()); }

/// Multiplicative order of a nonzero element.
inline std::uint64_t order(const Element& x) {
  if (x.is_zero()) throw Error("division by zero");
  const FieldCtx* f = x.field();
  std::uint64_t n = f->group_order();
  for (auto p : f->group_order_primes()) {
    while (n % p == 0 && pow(x, n / p).is_one()) n /= p;
  }
  return n;
}

inline void FieldCtx::init_primitive() {
  for (std::uint64_t code = 1; code < size_; ++code) {
    Element cand = from_encoding(code);
    bool full = true;
    for (auto p : primes_) {
      if (pow(cand, group_order() / p).is_one()) {
        full = false;
        break;
      }
    }
    if (full) {
      alpha_ = cand;
      return;
    }
  }
  throw Error("no primitive element");
}

inline Element primitive_element(const FieldCtx& ctx) { return ctx.alpha(); }

/// Euler criterion: 0 or x^((3^2k - 1)/2) = 1.
inline bool is_square(const Element& x) {
  return x.is_zero() || pow(x, x.field()->group_order() / 2).is_one();
}

/// The smaller-encoding member of {y, -y}.
inline Element canonical_sign(const Element& y) {
  const Element neg = -y;
  return neg < y ? neg : y;
}

/// Tonelli-Shanks with the primitive element as non-residue. Returns the root
/// of smaller encoding, or nothing for a non-square.
inline std::optional<Element> sqrt(const Element& x) {
  if (x.field() == nullptr) throw Error("element has no field");
  if (x.is_zero()) return x;
  if (!is_square(x)) return std::nullopt;
  const FieldCtx& f = *x.field();
  std::uint64_t odd = f.group_order();
  unsigned s = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++s;
  }
  unsigned m = s;
  Element c = pow(f.alpha(), odd);
  Element t = pow(x, odd);
  Element r = pow(x, (odd + 1) / 2);
  while (!t.is_one()) {
    unsigned i = 0;
    for (Element probe = t; !probe.is_one(); probe *= probe) ++i;
    Element b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  return canonical_sign(r);
}

/// Root of X^2 + 1, alpha^((3^2k - 1)/4) up to sign, smaller encoding.
inline Element solve_epsilon(const FieldCtx& ctx) {
  return canonical_sign(pow(ctx.alpha(), ctx.group_order() / 4));
}

/// The three roots of X^3 - X - 1 in GF(3^2k), sorted; empty unless 3 | k.
/// They lie in the GF(27) subfield, so only its 26 nonzero elements are tried.
inline std::vector<Element> theta_roots(const FieldCtx& ctx) {
  std::vector<Element> out;
  if (ctx.degree() % 3 != 0) return out;
  const Element beta = pow(ctx.alpha(), ctx.group_order() / 26);
  const Element one = ctx.one();
  Element cand = one;
  for (int i = 0; i < 26; ++i, cand *= beta) {
    if ((cand * cand * cand - cand - one).is_zero()) out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<Element> solve_theta(const FieldCtx& ctx) {
  auto roots = theta_roots(ctx);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

struct SpecialConstants {
  Element epsilon;
  std::optional<Element> theta;
  std::optional<Element> sqrt_eps_minus_1;
  std::optional<Element> sqrt_theta;
};

inline SpecialConstants special_constants(const FieldCtx& ctx) {
  SpecialConstants out;
  out.epsilon = solve_epsilon(ctx);
  out.theta = solve_theta(ctx);
  out.sqrt_eps_minus_1 = sqrt(out.epsilon - ctx.one());
  if (out.theta) out.sqrt_theta = sqrt(*out.theta);
  return out;
}

// ---- text formats -------------------------------------------------------

/// "1,0,1" -> {1,0,1}; low degree first.
inline TritVector parse_trits(std::string_view text) {
  TritVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '2') throw Error("malformed trit list: " + std::string(text));
    out.push_back(static_cast<Trit>(tok[0] - '0'));
    pos = comma + 1;
  }
  return out;
}

inline std::string format_trits(std::span<const Trit> trits) {
  std::string out;
  for (std::size_t i = 0; i < trits.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + trits[i]);
  }
  return out;
}

inline std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error("malformed integer: " + std::string(text));
  return v;
}

/// Accepts a decimal encoding ("4") or a trit list ("1,1").
inline Element parse_element(const FieldCtx& ctx, std::string_view text) {
  if (text.find(',') != std::string_view::npos) {
    const auto trits = parse_trits(text);
    return ctx.from_trits(trits);
  }
  return ctx.from_encoding(parse_u64(text));
}

inline std::string to_string(const Element& x) { return std::to_string(x.encoding()); }

}  // namespace trinolab
