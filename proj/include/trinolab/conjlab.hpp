// The three permutation-trinomial families over GF(q^2), q = 3^k, their
// fractional maps on mu_{q+1}, and exhaustive checks of the quadratic-factor
// relations for
//
//   F_t(x) = x^5 + t x^4 - x^3 + t x^2 - x - t        (family 3)
//   G_t(x) = x^7 + t x^6 + t x^4 - x^3 - x - t        (family 2)
//   H_t(x) = x^7 + (t-1) x^6 + (t-1) x - t            (family 1)
//
// with t ranging over mu_{q+1}.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "trinolab/gf3m.hpp"
#include "trinolab/permtest.hpp"
#include "trinolab/polyring.hpp"

namespace trinolab::conjlab {

enum class Family : int { One = 1, Two = 2, Three = 3 };

inline Family family_from_int(long long v) {
  if (v < 1 || v > 3) throw Error("family must be 1, 2 or 3");
  return static_cast<Family>(v);
}
inline int to_int(Family f) { return static_cast<int>(f); }

// ---- trinomials -----------------------------------------------------------

struct TrinomialSpec {
  Family family = Family::One;
  std::uint64_t l = 0;
  std::uint64_t q = 0;
  std::array<std::uint64_t, 3> exponents{};
  std::array<int, 3> signs{};
  bool gcd_ok = false;
};

/// f_1 = x^{lq+l+5} + x^{(l+5)q+l} - x^{(l-1)q+l+6},      gcd(5+2l, q-1) = 1
/// f_2 = x^{lq+l+1} - x^{(l+4)q+l-3} + x^{(l-2)q+l+3},    gcd(1+2l, q-1) = 1
/// f_3 = x^{lq+l+1} + x^{(l+2)q+l-1} - x^{(l-2)q+l+3},    gcd(1+2l, q-1) = 1
inline TrinomialSpec trinomial_spec(Family family, std::uint64_t l, const FieldCtx& ctx) {
  using I = __int128;
  const I q = ctx.q();
  const I L = l;
  std::array<I, 3> e{};
  TrinomialSpec spec;
  spec.family = family;
  spec.l = l;
  spec.q = ctx.q();
  std::uint64_t gcd_arg = 0;
  switch (family) {
    case Family::One:
      e = {L * q + L + 5, (L + 5) * q + L, (L - 1) * q + L + 6};
      spec.signs = {1, 1, -1};
      gcd_arg = 5 + 2 * l;
      break;
    case Family::Two:
      e = {L * q + L + 1, (L + 4) * q + L - 3, (L - 2) * q + L + 3};
      spec.signs = {1, -1, 1};
      gcd_arg = 1 + 2 * l;
      break;
    case Family::Three:
      e = {L * q + L + 1, (L + 2) * q + L - 1, (L - 2) * q + L + 3};
      spec.signs = {1, 1, -1};
      gcd_arg = 1 + 2 * l;
      break;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (e[i] < 0) throw Error("l too small for family");
    if (e[i] > static_cast<I>(UINT64_MAX)) throw Error("integer overflow");
    spec.exponents[i] = static_cast<std::uint64_t>(e[i]);
  }
  spec.gcd_ok = std::gcd(gcd_arg, ctx.q() - 1) == 1;
  return spec;
}

/// Dense polynomial of a trinomial spec.
inline Poly trinomial_poly(const TrinomialSpec& spec, const FieldCtx& ctx) {
  const auto top = *std::max_element(spec.exponents.begin(), spec.exponents.end());
  std::vector<Element> coeffs(top + 1, ctx.zero());
  for (std::size_t i = 0; i < 3; ++i) coeffs[spec.exponents[i]] += ctx.from_int(spec.signs[i]);
  return Poly(ctx, std::move(coeffs));
}

inline std::pair<TrinomialSpec, Poly> trinomial_family(Family family, std::uint64_t l, const FieldCtx& ctx) {
  auto spec = trinomial_spec(family, l, ctx);
  auto poly = trinomial_poly(spec, ctx);
  return {spec, std::move(poly)};
}

/// f(x) by three exponentiations.
inline Element trinomial_eval(const TrinomialSpec& spec, const Element& x) {
  Element acc = x.field()->zero();
  for (std::size_t i = 0; i < 3; ++i) acc += x.field()->from_int(spec.signs[i]) * pow(x, spec.exponents[i]);
  return acc;
}

struct Decomposition {
  std::uint64_t r = 0;
  Poly h;
};

/// f(x) = x^r h(x^(q-1)) with d = q+1; r is the smallest exponent.
/// The identity is re-checked on dense polynomials.
inline Decomposition trinomial_decompose(const TrinomialSpec& spec, const FieldCtx& ctx) {
  const std::uint64_t step = ctx.q() - 1;
  const std::uint64_t r = *std::min_element(spec.exponents.begin(), spec.exponents.end());
  std::vector<Element> hc;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::uint64_t gap = spec.exponents[i] - r;
    if (gap % step != 0) throw Error("not in Zieve form");
    const std::uint64_t pos = gap / step;
    if (hc.size() <= pos) hc.resize(pos + 1, ctx.zero());
    hc[pos] += ctx.from_int(spec.signs[i]);
  }
  Decomposition out{r, Poly(ctx, std::move(hc))};
  const Poly rebuilt =
      Poly::monomial(ctx.one(), r) * compose(out.h, Poly::monomial(ctx.one(), static_cast<std::size_t>(step)));
  if (rebuilt != trinomial_poly(spec, ctx)) throw Error("not in Zieve form");
  return out;
}

/// Direct route: does f permute GF(q^2)?
inline MapReport trinomial_permutes_field(const TrinomialSpec& spec, const FieldCtx& ctx) {
  const auto all = ctx.elements();
  return is_bijection_on([&](const Element& x) { return trinomial_eval(spec, x); }, all);
}

// ---- fractional maps on mu_{q+1} -------------------------------------------

struct FractionalMap {
  Family family = Family::One;
  Poly numerator;
  Poly denominator;
  Element operator()(const Element& x) const { return numerator(x) / denominator(x); }
};

/// g_1 = (-x^7+x^6+x)/(x^6+x-1), g_2 = (x^6+x^4-1)/(-x^7+x^3+x),
/// g_3 = (-x^5+x^3+x)/(x^4+x^2-1).
inline FractionalMap fractional_map(Family family, const FieldCtx& ctx) {
  switch (family) {
    case Family::One:
      return {family, Poly::from_ints(ctx, {0, 1, 0, 0, 0, 0, 1, -1}), Poly::from_ints(ctx, {-1, 1, 0, 0, 0, 0, 1})};
    case Family::Two:
      return {family, Poly::from_ints(ctx, {-1, 0, 0, 0, 1, 0, 1}), Poly::from_ints(ctx, {0, 1, 0, 1, 0, 0, 0, -1})};
    case Family::Three:
      return {family, Poly::from_ints(ctx, {0, 1, 0, 1, 0, -1}), Poly::from_ints(ctx, {-1, 0, 1, 0, 1})};
  }
  throw Error("family must be 1, 2 or 3");
}

inline bool denominator_nonvanishing(Family family, const UnityGroup& mu) {
  if (mu.elements().empty()) return true;
  const auto g = fractional_map(family, *mu.elements().front().field());
  return roots_in_set(g.denominator, mu.elements()).empty();
}

inline bool denominator_nonvanishing(Family family, const FieldCtx& ctx) {
  return denominator_nonvanishing(family, mu_q_plus_1(ctx));
}

class VanishingDenominator : public Error {
 public:
  explicit VanishingDenominator(const Element& x)
      : Error("denominator vanishes on mu_{q+1} at x=" + to_string(x)), x_(x) {}
  const Element& x() const { return x_; }

 private:
  Element x_;
};

struct GReport {
  MapReport map;
  bool images_in_mu = false;
  /// fiber_sizes[i] = |g^{-1}(mu[i])|, indexed like mu.elements().
  std::vector<std::size_t> fiber_sizes;
  std::size_t max_fiber_size = 0;
};

inline GReport g_permutes_mu(Family family, const UnityGroup& mu) {
  GReport out;
  if (mu.elements().empty()) return out;
  const FieldCtx& ctx = *mu.elements().front().field();
  const auto g = fractional_map(family, ctx);
  for (const auto& x : mu.elements())
    if (g.denominator(x).is_zero()) throw VanishingDenominator(x);
  out.map = is_bijection_on(g, mu.elements());
  out.fiber_sizes.assign(mu.size(), 0);
  out.images_in_mu = true;
  for (const auto& x : mu.elements()) {
    const Element y = g(x);
    if (auto idx = mu.index_of(y)) {
      ++out.fiber_sizes[*idx];
    } else {
      out.images_in_mu = false;
    }
  }
  out.max_fiber_size = *std::max_element(out.fiber_sizes.begin(), out.fiber_sizes.end());
  return out;
}

inline GReport g_permutes_mu(Family family, const FieldCtx& ctx) { return g_permutes_mu(family, mu_q_plus_1(ctx)); }

// ---- per-t equations -------------------------------------------------------

inline Poly fifth_degree_target(const Element& t) {
  const Element one = t.field()->one();
  return Poly(*t.field(), {-t, -one, t, -one, t, one});
}

inline Poly seventh_degree_target(const Element& t) {
  const FieldCtx& f = *t.field();
  const Element one = f.one();
  return Poly(f, {-t, -one, f.zero(), -one, t, f.zero(), t, one});
}

inline Poly family1_target(const Element& t) {
  const FieldCtx& f = *t.field();
  const Element one = f.one();
  const Element z = f.zero();
  return Poly(f, {-t, t - one, z, z, z, z, t - one, one});
}

/// The polynomial whose roots in mu_{q+1} are the solutions for parameter t:
/// g_3(x) = t, g_2(x) = 1/t, g_1(x) = t respectively.
inline Poly target_polynomial(Family family, const Element& t) {
  switch (family) {
    case Family::One:
      return family1_target(t);
    case Family::Two:
      return seventh_degree_target(t);
    case Family::Three:
      return fifth_degree_target(t);
  }
  throw Error("family must be 1, 2 or 3");
}

struct SolutionCount {
  std::size_t count = 0;
  std::vector<Element> roots;
};

inline void require_unit_circle(const UnityGroup& mu, const Element& t) {
  if (mu.elements().empty() || t.field() != mu.elements().front().field() || mu.d() != t.field()->q() + 1)
    throw Error("expected mu_{q+1} of the same field");
  if (!mu.contains(t)) throw Error("t is not in mu_{q+1}");
}

inline SolutionCount count_solutions(Family family, const Element& t, const UnityGroup& mu) {
  require_unit_circle(mu, t);
  auto roots = roots_in_set(target_polynomial(family, t), mu.elements());
  return {roots.size(), std::move(roots)};
}

inline SolutionCount count_solutions_eq5(const Element& t, const UnityGroup& mu) {
  return count_solutions(Family::Three, t, mu);
}

inline SolutionCount count_solutions_eq7(const Element& t, const UnityGroup& mu) {
  return count_solutions(Family::Two, t, mu);
}

// ---- quadratic-factor witnesses ------------------------------------------

enum class LemmaCase { EpsilonCase, ThetaCase, FifthDegreeRelation, NoMatch };

inline const char* to_string(LemmaCase c) {
  switch (c) {
    case LemmaCase::EpsilonCase:
      return "EpsilonCase";
    case LemmaCase::ThetaCase:
      return "ThetaCase";
    case LemmaCase::FifthDegreeRelation:
      return "FifthDegreeRelation";
    case LemmaCase::NoMatch:
      return "NoMatch";
  }
  return "NoMatch";
}

struct QuadFactorWitness {
  Element t;
  Element a;
  Element b;
  int degree = 5;
  LemmaCase lemma_case = LemmaCase::NoMatch;
  std::optional<Element> x1;
  std::optional<Element> x2;
};

/// a^q b = a: necessary for both roots of x^2 + ax + b to lie in mu_{q+1}.
inline bool conjugate_condition(const Element& a, const Element& b) { return conjugate_q(a) * b == a; }

/// Roots a -+ sqrt(a^2 - b) of x^2 + ax + b (char 3), when in the field.
inline std::pair<std::optional<Element>, std::optional<Element>> quadratic_roots(const Element& a, const Element& b) {
  const auto s = sqrt(a * a - b);
  if (!s) return {std::nullopt, std::nullopt};
  return {a - *s, a + *s};
}

inline Poly witness_target(int degree, const Element& t) {
  if (degree == 5) return fifth_degree_target(t);
  if (degree == 7) return seventh_degree_target(t);
  throw Error("witness degree must be 5 or 7");
}

inline void require_divides(const Poly& target, const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) throw Error("witness needs ab != 0");
  if (!divrem(target, QuadraticFactor{a, b}.poly()).second.is_zero())
    throw Error("x^2+ax+b does not divide the target polynomial");
}

/// a^2 = (e-1)b^2 - (e+1)b + (e-1) for e = epsilon or -epsilon.
inline bool verify_lemma2_relation(const QuadFactorWitness& w, const FieldCtx& ctx) {
  if (w.degree != 5) throw Error("witness degree must be 5");
  require_divides(fifth_degree_target(w.t), w.a, w.b);
  const Element one = ctx.one();
  const Element eps = solve_epsilon(ctx);
  for (const Element& e : {eps, -eps}) {
    if (w.a * w.a == (e - one) * w.b * w.b - (e + one) * w.b + (e - one)) return true;
  }
  return false;
}

/// Cofactor coefficients sigma_1..sigma_n of (x^2+ax+b) * (x^n + sigma_1 x^{n-1} + ...).
inline std::vector<Element> cofactor_sigmas(const Poly& target, const Element& a, const Element& b) {
  const auto [quot, rem] = divrem(target, QuadraticFactor{a, b}.poly());
  if (!rem.is_zero()) throw Error("x^2+ax+b does not divide the target polynomial");
  std::vector<Element> sigma;
  for (int i = quot.degree() - 1; i >= 0; --i) sigma.push_back(quot.coeff(static_cast<std::size_t>(i)));
  return sigma;
}

/// The five coefficient identities of F_t = (x^2+ax+b)(x^3+s1 x^2+s2 x+s3),
/// the two identities linear in t derived from them, and
/// (b-1)^4 + 4(b^4+1) = -(b+1)^4.
inline bool verify_lemma2_derivation(const Element& a, const Element& b, const Element& t, const FieldCtx& ctx) {
  const auto s = cofactor_sigmas(fifth_degree_target(t), a, b);
  const Element one = ctx.one();
  const Element four = ctx.from_int(4);
  const Element &s1 = s.at(0), &s2 = s.at(1), &s3 = s.at(2);
  const bool system = a + s1 == t && b + s2 + a * s1 == -one && b * s1 + a * s2 + s3 == t &&
                      a * s3 + b * s2 == -one && b * s3 == -t;
  const Element b2 = b * b, b3 = b2 * b;
  const bool eq1 = (a + a * b2) * t == a * a * b2 - b3 - b2 + b;
  const bool eq2 = (b3 - b2 - b + a * a) * t == a * b3 + a * b;
  const bool disc = pow(b - one, 4) + four * (pow(b, 4) + one) == -pow(b + one, 4);
  return system && eq1 && eq2 && disc;
}

/// The degenerate cases a + ab^2 = 0 and b^3 - b^2 - b + a^2 = 0 never occur
/// on a degree-5 witness.
inline bool lemma2_cases_excluded(const Element& a, const Element& b) {
  const Element b2 = b * b;
  return !(a + a * b2).is_zero() && !(b2 * b - b2 - b + a * a).is_zero();
}

/// EpsilonCase: (a, b) = (+-e, -1). ThetaCase: a^2 = th b^2 - (th-1) b + th
/// for a root th of X^3 - X - 1 (exists iff 3 | k).
inline LemmaCase verify_lemma4_relation(const QuadFactorWitness& w, const FieldCtx& ctx) {
  if (w.degree != 7) throw Error("witness degree must be 7");
  require_divides(seventh_degree_target(w.t), w.a, w.b);
  if (!conjugate_condition(w.a, w.b)) throw Error("witness violates a^q b = a");
  const Element one = ctx.one();
  const Element eps = solve_epsilon(ctx);
  if (w.b == -one && (w.a == eps || w.a == -eps)) return LemmaCase::EpsilonCase;
  for (const auto& th : theta_roots(ctx)) {
    if (w.a * w.a == th * w.b * w.b - (th - one) * w.b + th) return LemmaCase::ThetaCase;
  }
  return LemmaCase::NoMatch;
}

/// The seven coefficient identities of G_t = (x^2+ax+b)(x^5 + ... + s5), the
/// forward/backward expressions for s3, s4, s5, and the two identities
/// linear in t.
inline bool verify_lemma4_derivation(const Element& a, const Element& b, const Element& t, const FieldCtx& ctx) {
  const auto s = cofactor_sigmas(seventh_degree_target(t), a, b);
  const Element one = ctx.one();
  const Element zero = ctx.zero();
  const Element &s1 = s.at(0), &s2 = s.at(1), &s3 = s.at(2), &s4 = s.at(3), &s5 = s.at(4);
  const bool system = a + s1 == t && b + a * s1 + s2 == zero && b * s1 + a * s2 + s3 == t &&
                      b * s2 + a * s3 + s4 == -one && b * s3 + a * s4 + s5 == zero && a * s5 + b * s4 == -one &&
                      b * s5 == -t;
  const Element a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  const Element b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  const bool forward = s1 == t - a && s2 == a2 - a * t - b && s3 == t - a3 + a2 * t - b * t - a * b &&
                       s4 == -one - a * t + a4 - a3 * t - a * b * t + b2;
  const bool backward = s5 == -t / b && s4 == (a * t - b) / b2 && s3 == (a * b + b * t - a2 * t) / b3;
  const bool eq1 = (a2 * b3 + a2 - b4 + b3 - b) * t == a3 * b3 + a * b4 + a * b;
  const bool eq2 = (a + a * b2 + a3 * b2 + a * b3) * t == a4 * b2 + b4 - b2 + b;
  return system && forward && backward && eq1 && eq2;
}

/// a^2 b^3 + a^2 - b^4 + b^3 - b = 0 never occurs on a degree-7 witness.
inline bool lemma4_case1_excluded(const Element& a, const Element& b) {
  const Element a2 = a * a, b3 = b * b * b;
  return !(a2 * b3 + a2 - b3 * b + b3 - b).is_zero();
}

struct Harvest {
  /// Factors with ab != 0 meeting the lemma hypothesis (degree 7: a^q b = a).
  std::vector<QuadFactorWitness> witnesses;
  /// Degree-7 factors with ab != 0 failing a^q b = a.
  std::vector<QuadFactorWitness> excluded;
};

/// All quadratic factors with ab != 0 of F_t (degree 5) or G_t (degree 7)
/// over t in mu_{q+1}, t in encoding order, each classified.
inline Harvest harvest_witnesses(int degree, const UnityGroup& mu) {
  Harvest out;
  if (mu.elements().empty()) return out;
  const FieldCtx& ctx = *mu.elements().front().field();
  for (const auto& t : mu.elements()) {
    for (const auto& qf : quadratic_factors(witness_target(degree, t))) {
      if (qf.a.is_zero() || qf.b.is_zero()) continue;
      QuadFactorWitness w{t, qf.a, qf.b, degree, LemmaCase::NoMatch, std::nullopt, std::nullopt};
      std::tie(w.x1, w.x2) = quadratic_roots(qf.a, qf.b);
      if (degree == 5) {
        w.lemma_case = verify_lemma2_relation(w, ctx) ? LemmaCase::FifthDegreeRelation : LemmaCase::NoMatch;
        out.witnesses.push_back(w);
      } else if (conjugate_condition(qf.a, qf.b)) {
        w.lemma_case = verify_lemma4_relation(w, ctx);
        out.witnesses.push_back(w);
      } else {
        out.excluded.push_back(w);
      }
    }
  }
  return out;
}

inline Harvest harvest_witnesses(int degree, const FieldCtx& ctx) { return harvest_witnesses(degree, mu_q_plus_1(ctx)); }

// ---- distinct-root exclusion ------------------------------------------------

struct ExclusionReport {
  Family family = Family::Three;
  unsigned k = 0;
  std::vector<std::pair<Element, std::size_t>> counts;  // (t, #roots in mu)
  std::size_t max_count = 0;
  std::vector<std::pair<Element, std::vector<Element>>> counterexamples;
  std::size_t witnesses_in_mu = 0;
  /// k odd: sqrt(e-1) is not in the field (degree 5).
  std::optional<bool> sqrt_eps_minus_1_absent;
  /// k = 0 mod 4: sqrt(e-1)^(q-1) = 1 (degree 5).
  std::optional<bool> sqrt_eps_minus_1_power_one;
  /// k = 0 mod 3: th^((q-1)/2) = 1 for every root th (degree 7).
  std::optional<bool> theta_half_power_one;

  bool ok() const {
    return counterexamples.empty() && max_count <= 1 && sqrt_eps_minus_1_absent.value_or(true) &&
           sqrt_eps_minus_1_power_one.value_or(true) && theta_half_power_one.value_or(true);
  }
};

/// For family 3 (needs k != 2 mod 4) or family 2: every t has at most one
/// solution in mu_{q+1}, plus the field facts the exclusion argument uses.
inline ExclusionReport distinct_root_exclusion(Family family, const FieldCtx& ctx) {
  if (family == Family::One) throw Error("distinct_root_exclusion applies to families 2 and 3");
  const unsigned k = ctx.k();
  if (family == Family::Three && k % 4 == 2) throw Error("family 3 exclusion requires k != 2 mod 4");
  const UnityGroup mu = mu_q_plus_1(ctx);
  ExclusionReport rep;
  rep.family = family;
  rep.k = k;
  for (const auto& t : mu.elements()) {
    auto sol = count_solutions(family, t, mu);
    rep.max_count = std::max(rep.max_count, sol.count);
    rep.counts.emplace_back(t, sol.count);
    if (sol.count >= 2) rep.counterexamples.emplace_back(t, sol.roots);
  }
  const int degree = family == Family::Three ? 5 : 7;
  for (const auto& w : harvest_witnesses(degree, mu).witnesses) {
    if (w.x1 && w.x2 && *w.x1 != *w.x2 && mu.contains(*w.x1) && mu.contains(*w.x2)) ++rep.witnesses_in_mu;
  }
  const Element one = ctx.one();
  if (family == Family::Three) {
    const auto root = sqrt(solve_epsilon(ctx) - one);
    if (k % 2 == 1) rep.sqrt_eps_minus_1_absent = !root.has_value();
    if (k % 4 == 0) rep.sqrt_eps_minus_1_power_one = root && pow(*root, ctx.q() - 1).is_one();
  } else if (k % 3 == 0) {
    bool all = true;
    for (const auto& th : theta_roots(ctx)) all = all && pow(th, (ctx.q() - 1) / 2).is_one();
    rep.theta_half_power_one = all;
  }
  return rep;
}

// ---- (u, v) identity for family 1 ------------------------------------------

struct UVWitness {
  Element t;
  Element a;
  Element b;
  Element u;  // (b+1)/a
  Element v;  // b/a^2
};

struct UVReport {
  std::vector<UVWitness> witnesses;
  std::size_t excluded = 0;  // ab != 0 factors failing a^q b = a
  bool sextic_ok = true;
  bool cubic_ok = true;
  bool shifted_ok = true;
  bool definitions_ok = true;
  bool ok() const { return sextic_ok && cubic_ok && shifted_ok && definitions_ok; }
};

/// a^6 + a^5 b + a^5 + a^4 b - a^3 b^2 - a^3 b - b^6 - b^3 - 1.
inline Element sextic_relation(const Element& a, const Element& b) {
  const Element one = a.field()->one();
  return pow(a, 6) + pow(a, 5) * b + pow(a, 5) + pow(a, 4) * b - pow(a, 3) * b * b - pow(a, 3) * b - pow(b, 6) -
         pow(b, 3) - one;
}

/// v^3 - (u-1)v - (u^6 - u - 1).
inline Element uv_cubic(const Element& u, const Element& v) {
  const Element one = u.field()->one();
  return pow(v, 3) - (u - one) * v - (pow(u, 6) - u - one);
}

/// (v-1)^3 - (u-1)(v-1) - u^6.
inline Element uv_shifted(const Element& u, const Element& v) {
  const Element one = u.field()->one();
  return pow(v - one, 3) - (u - one) * (v - one) - pow(u, 6);
}

inline UVReport uv_identity_check(const UnityGroup& mu) {
  UVReport rep;
  for (const auto& t : mu.elements()) {
    for (const auto& qf : quadratic_factors(family1_target(t))) {
      const Element &a = qf.a, &b = qf.b;
      if (a.is_zero() || b.is_zero()) continue;
      if (!conjugate_condition(a, b)) {
        ++rep.excluded;
        continue;
      }
      const Element u = (b + t.field()->one()) / a;
      const Element v = b / (a * a);
      const Element inv_a = inv(a);
      rep.definitions_ok = rep.definitions_ok && u * a == b + t.field()->one() && v * a * a == b &&
                           u == inv_a + conjugate_q(inv_a) && v == inv_a * conjugate_q(inv_a);
      rep.sextic_ok = rep.sextic_ok && sextic_relation(a, b).is_zero();
      rep.cubic_ok = rep.cubic_ok && uv_cubic(u, v).is_zero();
      rep.shifted_ok = rep.shifted_ok && uv_shifted(u, v).is_zero();
      rep.witnesses.push_back({t, a, b, u, v});
    }
  }
  return rep;
}

inline UVReport uv_identity_check(const FieldCtx& ctx) { return uv_identity_check(mu_q_plus_1(ctx)); }

}  // namespace trinolab::conjlab
