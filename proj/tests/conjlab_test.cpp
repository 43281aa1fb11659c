#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "trinolab/sweep.hpp"

using namespace trinolab;
using namespace trinolab::conjlab;

namespace {

FieldPtr field(unsigned k) { return FieldCtx::create(k); }

// x^e by repeated multiplication, no fast exponentiation.
Element slow_pow(const Element& x, unsigned e) {
  Element acc = x.field()->one();
  for (unsigned i = 0; i < e; ++i) acc = acc * x;
  return acc;
}

// Polynomial with integer coefficients evaluated term by term.
Element eval_ints(const std::vector<int>& coeffs, const Element& x) {
  const FieldCtx& f = *x.field();
  Element acc = f.zero();
  for (unsigned i = 0; i < coeffs.size(); ++i) acc = acc + f.from_int(coeffs[i]) * slow_pow(x, i);
  return acc;
}

// g written out from the family definitions.
Element g_oracle(int family, const Element& x) {
  switch (family) {
    case 1:
      return eval_ints({0, 1, 0, 0, 0, 0, 1, -1}, x) / eval_ints({-1, 1, 0, 0, 0, 0, 1}, x);
    case 2:
      return eval_ints({-1, 0, 0, 0, 1, 0, 1}, x) / eval_ints({0, 1, 0, 1, 0, 0, 0, -1}, x);
    default:
      return eval_ints({0, 1, 0, 1, 0, -1}, x) / eval_ints({-1, 0, 1, 0, 1}, x);
  }
}

// Root count of the per-t equation by direct substitution.
std::size_t count_oracle(int family, const Element& t, const UnityGroup& mu) {
  std::size_t n = 0;
  for (const auto& x : mu.elements()) {
    Element v;
    const Element one = t.field()->one();
    if (family == 3) {
      v = slow_pow(x, 5) + t * slow_pow(x, 4) - slow_pow(x, 3) + t * x * x - x - t;
    } else if (family == 2) {
      v = slow_pow(x, 7) + t * slow_pow(x, 6) + t * slow_pow(x, 4) - slow_pow(x, 3) - x - t;
    } else {
      v = slow_pow(x, 7) + (t - one) * slow_pow(x, 6) + (t - one) * x - t;
    }
    n += v.is_zero();
  }
  return n;
}

// Every monic quadratic dividing p, by trial division over all (a, b).
std::set<std::pair<std::uint64_t, std::uint64_t>> factor_oracle(const Poly& p, const FieldCtx& f, bool need_ab) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& a : f.elements())
    for (const auto& b : f.elements()) {
      if (need_ab && (a.is_zero() || b.is_zero())) continue;
      if (divrem(p, Poly(f, {b, a, f.one()})).second.is_zero()) out.emplace(a.encoding(), b.encoding());
    }
  return out;
}

std::vector<std::uint64_t> exps(unsigned f, unsigned k, std::uint64_t l) {
  auto ctx = field(k);
  auto s = trinomial_spec(family_from_int(f), l, *ctx);
  return {s.exponents.begin(), s.exponents.end()};
}

}  // namespace

// ---- trinomials ------------------------------------------------------------

TEST(Trinomial, ExponentExamples) {
  EXPECT_EQ(exps(2, 1, 1), (std::vector<std::uint64_t>{5, 13, 1}));
  EXPECT_EQ(exps(3, 1, 2), (std::vector<std::uint64_t>{9, 13, 5}));
  EXPECT_EQ(exps(1, 2, 1), (std::vector<std::uint64_t>{15, 55, 7}));
  auto ctx = field(1);
  EXPECT_TRUE(trinomial_spec(Family::Two, 1, *ctx).gcd_ok);
  EXPECT_TRUE(trinomial_spec(Family::Three, 2, *ctx).gcd_ok);
  EXPECT_EQ(trinomial_spec(Family::Two, 1, *ctx).signs, (std::array<int, 3>{1, -1, 1}));
  EXPECT_EQ(trinomial_spec(Family::One, 1, *ctx).signs, (std::array<int, 3>{1, 1, -1}));
  EXPECT_EQ(trinomial_spec(Family::Three, 1, *ctx).signs, (std::array<int, 3>{1, 1, -1}));
}

TEST(Trinomial, PolyMatchesExponents) {
  auto ctx = field(1);
  auto [spec, p] = trinomial_family(Family::Two, 1, *ctx);
  EXPECT_EQ(p.degree(), 13);
  EXPECT_TRUE(p.coeff(5).is_one());
  EXPECT_EQ(p.coeff(13), -ctx->one());
  EXPECT_TRUE(p.coeff(1).is_one());
  for (const auto& x : ctx->elements()) EXPECT_EQ(p(x), trinomial_eval(spec, x));
}

TEST(Trinomial, SmallLRejected) {
  auto ctx = field(2);
  try {
    trinomial_spec(Family::Two, 1, *ctx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "l too small for family");
  }
  EXPECT_THROW(trinomial_spec(Family::One, 0, *ctx), Error);
  EXPECT_NO_THROW(trinomial_spec(Family::Three, 2, *ctx));
}

TEST(Trinomial, GcdFlagAndDifferences) {
  for (unsigned k = 1; k <= 3; ++k) {
    auto ctx = field(k);
    const std::uint64_t q = ctx->q();
    for (int fam = 1; fam <= 3; ++fam)
      for (std::uint64_t l = 2; l <= 12; ++l) {
        const auto s = trinomial_spec(family_from_int(fam), l, *ctx);
        const std::uint64_t arg = fam == 1 ? 5 + 2 * l : 1 + 2 * l;
        EXPECT_EQ(s.gcd_ok, std::gcd(arg, q - 1) == 1);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            const auto hi = std::max(s.exponents[i], s.exponents[j]);
            const auto lo = std::min(s.exponents[i], s.exponents[j]);
            EXPECT_EQ((hi - lo) % (q - 1), 0u);
          }
      }
  }
}

TEST(Trinomial, DecomposeExamples) {
  auto ctx = field(1);
  auto d2 = trinomial_decompose(trinomial_spec(Family::Two, 1, *ctx), *ctx);
  EXPECT_EQ(d2.r, 1u);
  EXPECT_EQ(d2.h, Poly::from_ints(*ctx, {1, 0, 1, 0, 0, 0, -1}));
  auto d3 = trinomial_decompose(trinomial_spec(Family::Three, 2, *ctx), *ctx);
  EXPECT_EQ(d3.r, 5u);
  EXPECT_EQ(d3.h, Poly::from_ints(*ctx, {-1, 0, 1, 0, 1}));
}

TEST(Trinomial, DecomposeReconstructs) {
  for (unsigned k = 1; k <= 2; ++k) {
    auto ctx = field(k);
    for (int fam = 1; fam <= 3; ++fam)
      for (std::uint64_t l = 2; l <= 5; ++l) {
        auto [spec, f] = trinomial_family(family_from_int(fam), l, *ctx);
        auto dec = trinomial_decompose(spec, *ctx);
        EXPECT_EQ(dec.r, *std::min_element(spec.exponents.begin(), spec.exponents.end()));
        int terms = 0;
        for (int i = 0; i <= dec.h.degree(); ++i) terms += !dec.h.coeff(i).is_zero();
        EXPECT_EQ(terms, 3);
        const Poly rebuilt = Poly::monomial(ctx->one(), dec.r) *
                             compose(dec.h, Poly::monomial(ctx->one(), ctx->q() - 1));
        EXPECT_EQ(rebuilt, f);
      }
  }
}

// ---- fractional maps -----------------------------------------------------

TEST(FractionalMap, Coefficients) {
  auto ctx = field(1);
  auto g3 = fractional_map(Family::Three, *ctx);
  EXPECT_EQ(g3.numerator, Poly::from_ints(*ctx, {0, 1, 0, 1, 0, -1}));
  EXPECT_EQ(g3.denominator, Poly::from_ints(*ctx, {-1, 0, 1, 0, 1}));
  auto g2 = fractional_map(Family::Two, *ctx);
  EXPECT_EQ(g2.numerator, Poly::from_ints(*ctx, {-1, 0, 0, 0, 1, 0, 1}));
  EXPECT_EQ(g2.denominator, Poly::from_ints(*ctx, {0, 1, 0, 1, 0, 0, 0, -1}));
  auto g1 = fractional_map(Family::One, *ctx);
  EXPECT_EQ(g1.numerator, Poly::from_ints(*ctx, {0, 1, 0, 0, 0, 0, 1, -1}));
  EXPECT_EQ(g1.denominator, Poly::from_ints(*ctx, {-1, 1, 0, 0, 0, 0, 1}));
}

TEST(FractionalMap, ImagesStayOnUnitCircle) {
  for (unsigned k = 1; k <= 3; ++k) {
    auto ctx = field(k);
    const auto mu = mu_q_plus_1(*ctx);
    for (int fam = 1; fam <= 3; ++fam) {
      const auto g = fractional_map(family_from_int(fam), *ctx);
      for (const auto& x : mu.elements()) {
        if (g.denominator(x).is_zero()) continue;
        EXPECT_TRUE(pow(g(x), ctx->q() + 1).is_one());
        EXPECT_EQ(g(x), g_oracle(fam, x));
      }
    }
  }
}

TEST(FractionalMap, DenominatorNonvanishing) {
  for (unsigned k = 1; k <= 4; ++k) {
    auto ctx = field(k);
    EXPECT_TRUE(denominator_nonvanishing(Family::Two, *ctx)) << k;
    EXPECT_TRUE(denominator_nonvanishing(Family::Three, *ctx)) << k;
  }
  EXPECT_TRUE(denominator_nonvanishing(Family::One, *field(2)));
  EXPECT_TRUE(denominator_nonvanishing(Family::One, *field(4)));
}

TEST(FractionalMap, PermutesMu) {
  for (unsigned k = 1; k <= 4; ++k) {
    auto ctx = field(k);
    auto rep = g_permutes_mu(Family::Two, *ctx);
    EXPECT_TRUE(rep.map.is_bijection) << k;
    EXPECT_TRUE(rep.images_in_mu);
    EXPECT_EQ(rep.max_fiber_size, 1u);
  }
  for (unsigned k : {1u, 3u, 4u}) EXPECT_TRUE(g_permutes_mu(Family::Three, *field(k)).map.is_bijection) << k;
  EXPECT_TRUE(g_permutes_mu(Family::One, *field(2)).map.is_bijection);
}

TEST(FractionalMap, FibersMatchOracle) {
  // Includes the rows with no proven claim.
  for (unsigned k = 1; k <= 3; ++k) {
    auto ctx = field(k);
    const auto mu = mu_q_plus_1(*ctx);
    for (int fam = 1; fam <= 3; ++fam) {
      std::vector<std::size_t> fibers(mu.size(), 0);
      for (const auto& x : mu.elements()) ++fibers[*mu.index_of(g_oracle(fam, x))];
      const auto rep = g_permutes_mu(family_from_int(fam), mu);
      EXPECT_EQ(rep.fiber_sizes, fibers) << fam << " " << k;
      EXPECT_EQ(rep.max_fiber_size, *std::max_element(fibers.begin(), fibers.end()));
      EXPECT_EQ(rep.map.is_bijection, rep.max_fiber_size == 1);
    }
  }
}

// ---- per-t equations --------------------------------------------------------

TEST(Counts, OneIsAlwaysARoot) {
  for (unsigned k = 1; k <= 3; ++k) {
    auto ctx = field(k);
    const auto mu = mu_q_plus_1(*ctx);
    const Element one = ctx->one();
    EXPECT_TRUE(fifth_degree_target(one)(one).is_zero());
    EXPECT_TRUE(seventh_degree_target(one)(one).is_zero());
    EXPECT_EQ(count_solutions_eq5(one, mu).roots.front(), one);
  }
}

TEST(Counts, MatchOracle) {
  for (unsigned k = 1; k <= 3; ++k) {
    auto ctx = field(k);
    const auto mu = mu_q_plus_1(*ctx);
    for (int fam = 1; fam <= 3; ++fam)
      for (const auto& t : mu.elements())
        EXPECT_EQ(count_solutions(family_from_int(fam), t, mu).count, count_oracle(fam, t, mu));
  }
}

TEST(Counts, ExactlyOneWhereProven) {
  auto k1 = field(1);
  const auto mu1 = mu_q_plus_1(*k1);
  for (const auto& t : mu1.elements()) {
    EXPECT_EQ(count_solutions_eq5(t, mu1).count, 1u);
    EXPECT_EQ(count_solutions_eq7(t, mu1).count, 1u);
  }
  auto k3 = field(3);
  const auto mu3 = mu_q_plus_1(*k3);
  for (const auto& t : mu3.elements()) {
    EXPECT_EQ(count_solutions_eq7(t, mu3).count, 1u);
    EXPECT_EQ(count_solutions_eq5(t, mu3).count, 1u);
  }
}

TEST(Counts, IndexFibersOfG) {
  // F_t counts g_3 = t, G_t counts g_2 = 1/t.
  auto ctx = field(2);
  const auto mu = mu_q_plus_1(*ctx);
  for (const auto& t : mu.elements()) {
    std::size_t g3 = 0, g2 = 0;
    for (const auto& x : mu.elements()) {
      g3 += g_oracle(3, x) == t;
      g2 += g_oracle(2, x) == inv(t);
    }
    EXPECT_EQ(count_solutions_eq5(t, mu).count, g3);
    EXPECT_EQ(count_solutions_eq7(t, mu).count, g2);
  }
}

TEST(Counts, RejectsTOffUnitCircle) {
  auto ctx = field(1);
  const auto mu = mu_q_plus_1(*ctx);
  EXPECT_THROW(count_solutions_eq5(ctx->from_encoding(5), mu), Error);
  EXPECT_THROW(count_solutions_eq7(ctx->zero(), mu), Error);
}

// ---- witnesses ------------------------------------------------------------

TEST(Harvest, MatchesTrialDivision) {
  for (unsigned k = 1; k <= 2; ++k) {
    auto ctx = field(k);
    const auto mu = mu_q_plus_1(*ctx);
    for (int degree : {5, 7}) {
      std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> expect, got;
      for (const auto& t : mu.elements())
        for (auto [a, b] : factor_oracle(witness_target(degree, t), *ctx, true)) {
          const Element ea = ctx->from_encoding(a), eb = ctx->from_encoding(b);
          if (degree == 7 && !(pow(ea, ctx->q()) * eb == ea)) continue;
          expect.emplace(t.encoding(), a, b);
        }
      for (const auto& w : harvest_witnesses(degree, mu).witnesses)
        got.emplace(w.t.encoding(), w.a.encoding(), w.b.encoding());
      EXPECT_EQ(got, expect) << "k=" << k << " degree=" << degree;
    }
  }
}

TEST(Harvest, RootPairsInMuSatisfyConjugateCondition) {
  // Family 3 at k=2 has t with several roots in mu, so pairs exist.
  auto ctx = field(2);
  const auto mu = mu_q_plus_1(*ctx);
  std::size_t pairs = 0;
  for (const auto& t : mu.elements()) {
    const auto roots = count_solutions_eq5(t, mu).roots;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        const Element a = -(roots[i] + roots[j]), b = roots[i] * roots[j];
        EXPECT_TRUE(conjugate_condition(a, b));
        EXPECT_TRUE(mu.contains(b));
        ++pairs;
      }
  }
  EXPECT_GT(pairs, 0u);
}

TEST(Lemma2, RelationAndDerivationOnHarvest) {
  for (unsigned k = 1; k <= 2; ++k) {
    auto ctx = field(k);
    const auto h = harvest_witnesses(5, *ctx);
    ASSERT_FALSE(h.witnesses.empty());
    for (const auto& w : h.witnesses) {
      EXPECT_TRUE(verify_lemma2_relation(w, *ctx));
      EXPECT_EQ(w.lemma_case, LemmaCase::FifthDegreeRelation);
      EXPECT_TRUE(verify_lemma2_derivation(w.a, w.b, w.t, *ctx));
      EXPECT_TRUE(lemma2_cases_excluded(w.a, w.b));
    }
  }
}

TEST(Lemma2, DiscriminantIdentityEverywhere) {
  auto ctx = field(2);
  const Element one = ctx->one();
  for (const auto& b : ctx->elements())
    EXPECT_EQ(slow_pow(b - one, 4) + (slow_pow(b, 4) + one), -slow_pow(b + one, 4));
}

TEST(Lemma2, RepeatedRootCase) {
  // b = -1 forces a^2 = -1.
  for (unsigned k = 1; k <= 2; ++k) {
    auto ctx = field(k);
    const Element one = ctx->one(), eps = solve_epsilon(*ctx);
    for (const auto& a : ctx->elements()) {
      bool rel = false;
      for (const Element& e : {eps, -eps}) rel = rel || a * a == (e - one) + (e + one) + (e - one);
      EXPECT_EQ(rel, a == eps || a == -eps);
    }
  }
}

TEST(Lemma2, PerturbedWitnessesFail) {
  auto ctx = field(2);
  const Element one = ctx->one(), eps = solve_epsilon(*ctx);
  auto relation = [&](const Element& a, const Element& b) {
    for (const Element& e : {eps, -eps})
      if (a * a == (e - one) * b * b - (e + one) * b + (e - one)) return true;
    return false;
  };
  const auto h = harvest_witnesses(5, *ctx);
  std::size_t failed = 0;
  for (auto w : h.witnesses) {
    w.a = w.a + one;
    failed += !relation(w.a, w.b);
    if (!divrem(fifth_degree_target(w.t), Poly(*ctx, {w.b, w.a, one})).second.is_zero())
      EXPECT_THROW(verify_lemma2_relation(w, *ctx), Error);
  }
  EXPECT_GE(failed * 10, h.witnesses.size() * 9);
}

TEST(Lemma4, CasesOnHarvest) {
  for (unsigned k = 1; k <= 3; ++k) {
    auto ctx = field(k);
    const auto h = harvest_witnesses(7, *ctx);
    std::size_t theta = 0;
    for (const auto& w : h.witnesses) {
      EXPECT_NE(w.lemma_case, LemmaCase::NoMatch);
      EXPECT_EQ(verify_lemma4_relation(w, *ctx), w.lemma_case);
      EXPECT_TRUE(verify_lemma4_derivation(w.a, w.b, w.t, *ctx));
      EXPECT_TRUE(lemma4_case1_excluded(w.a, w.b));
      theta += w.lemma_case == LemmaCase::ThetaCase;
      if (w.lemma_case == LemmaCase::ThetaCase) {
        bool matched = false;
        for (const auto& th : theta_roots(*ctx))
          matched = matched || w.a * w.a == th * w.b * w.b - (th - ctx->one()) * w.b + th;
        EXPECT_TRUE(matched);
      }
    }
    if (k == 3) {
      EXPECT_GT(theta, 0u);
    } else {
      EXPECT_EQ(theta, 0u);
    }
  }
}

TEST(Lemma4, EpsilonFactorIsASquare) {
  auto ctx = field(1);
  const Element eps = solve_epsilon(*ctx);
  const Poly lin = Poly::linear_root(eps);
  EXPECT_EQ(Poly(*ctx, {-ctx->one(), eps, ctx->one()}), lin * lin);
}

TEST(Lemma4, PerturbedTFails) {
  auto ctx = field(3);
  const auto mu = mu_q_plus_1(*ctx);
  const auto h = harvest_witnesses(7, mu);
  ASSERT_FALSE(h.witnesses.empty());
  for (std::size_t i = 0; i < h.witnesses.size(); i += 7) {
    const auto& w = h.witnesses[i];
    const Element t2 = mu.elements()[(*mu.index_of(w.t) + 1) % mu.size()];
    const Element a = w.a, b = w.b, a2 = a * a, b2 = b * b, b3 = b2 * b;
    EXPECT_NE((a2 * b3 + a2 - b3 * b + b3 - b) * t2, a2 * a * b3 + a * b3 * b + a * b);
    const bool divides = divrem(seventh_degree_target(t2), Poly(*ctx, {b, a, ctx->one()})).second.is_zero();
    if (divides) {
      EXPECT_TRUE(verify_lemma4_derivation(a, b, t2, *ctx));
    } else {
      EXPECT_THROW(verify_lemma4_derivation(a, b, t2, *ctx), Error);
    }
  }
}

TEST(Lemma4, Preconditions) {
  auto ctx = field(1);
  const Element one = ctx->one();
  QuadFactorWitness w{one, one, one, 7, LemmaCase::NoMatch, std::nullopt, std::nullopt};
  EXPECT_THROW(verify_lemma4_relation(w, *ctx), Error);  // does not divide
  w.b = ctx->zero();
  EXPECT_THROW(verify_lemma4_relation(w, *ctx), Error);  // b = 0
  w.degree = 5;
  EXPECT_THROW(verify_lemma4_relation(w, *ctx), Error);
  auto k3 = field(3);
  const auto h = harvest_witnesses(7, *k3);
  ASSERT_FALSE(h.excluded.empty());
  EXPECT_THROW(verify_lemma4_relation(h.excluded.front(), *k3), Error);  // a^q b != a
}

// ---- exclusion ----------------------------------------------------------

TEST(Exclusion, Family3) {
  auto f1 = field(1);
  auto r1 = distinct_root_exclusion(Family::Three, *f1);
  EXPECT_TRUE(r1.ok());
  EXPECT_EQ(r1.counts.size(), 4u);
  for (auto& [t, c] : r1.counts) EXPECT_EQ(c, 1u);
  EXPECT_EQ(r1.sqrt_eps_minus_1_absent, true);

  auto f4 = field(4);
  auto r4 = distinct_root_exclusion(Family::Three, *f4);
  EXPECT_TRUE(r4.ok());
  EXPECT_EQ(r4.sqrt_eps_minus_1_power_one, true);
  const auto root = sqrt(solve_epsilon(*f4) - f4->one());
  ASSERT_TRUE(root);
  EXPECT_TRUE(pow(*root, 80u).is_one());

  EXPECT_THROW(distinct_root_exclusion(Family::Three, *field(2)), Error);
  EXPECT_THROW(distinct_root_exclusion(Family::One, *field(2)), Error);
}

TEST(Exclusion, Family2Theta) {
  auto ctx = field(3);
  auto rep = distinct_root_exclusion(Family::Two, *ctx);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.theta_half_power_one, true);
  EXPECT_EQ(rep.witnesses_in_mu, 0u);
  for (const auto& th : theta_roots(*ctx)) EXPECT_TRUE(slow_pow(th, 13).is_one());
}

// ---- (u, v) -------------------------------------------------------------

TEST(UV, IdentitiesAtK2) {
  auto ctx = field(2);
  auto rep = uv_identity_check(*ctx);
  EXPECT_TRUE(rep.ok());
  ASSERT_FALSE(rep.witnesses.empty());
  for (const auto& w : rep.witnesses) {
    EXPECT_EQ(w.u * w.a, w.b + ctx->one());
    EXPECT_EQ(w.v * w.a * w.a, w.b);
    EXPECT_TRUE(sextic_relation(w.a, w.b).is_zero());
    EXPECT_TRUE(uv_shifted(w.u, w.v).is_zero());
  }
}

TEST(UV, FormsAgreeAsFormalIdentity) {
  auto ctx = field(3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, ctx->size() - 1);
  for (int i = 0; i < 100; ++i) {
    const Element u = ctx->from_encoding(pick(rng)), v = ctx->from_encoding(pick(rng));
    EXPECT_EQ(uv_cubic(u, v), uv_shifted(u, v));
  }
}

// ---- sweep ----------------------------------------------------------------

TEST(Sweep, EmptyKList) { EXPECT_TRUE(sweep({2}, {}, {1, 2}).empty()); }

TEST(Sweep, Family2AllRoutesAgree) {
  const auto rows = sweep({2}, {1, 2, 3}, {1, 2, 3});
  ASSERT_EQ(rows.size(), 9u);
  std::size_t built = 0;
  for (const auto& r : rows) {
    EXPECT_TRUE(row_meets_claims(r));
    if (r.error) {
      EXPECT_EQ(*r.error, "l too small for family");
      EXPECT_EQ(r.l, 1u);
      continue;
    }
    ++built;
    EXPECT_EQ(r.direct_bijection, true);
    EXPECT_EQ(r.zieve_cond1, true);
    EXPECT_EQ(r.zieve_cond2, true);
    EXPECT_EQ(r.g_bijection, true);
    EXPECT_EQ(r.max_fiber_size, 1u);
    EXPECT_EQ(r.routes_agree, true);
    EXPECT_EQ(r.lemma_case_histogram.at("NoMatch"), 0u);
  }
  EXPECT_EQ(built, 7u);
}

TEST(Sweep, GcdFailureIsNotABijection) {
  // 1 + 2*6 = 13 divides q - 1 = 26.
  const auto rows = sweep({2}, {3}, {6});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].gcd_ok, false);
  EXPECT_EQ(rows[0].direct_bijection, false);
  EXPECT_EQ(rows[0].zieve_cond1, false);
  EXPECT_EQ(rows[0].routes_agree, true);
  EXPECT_TRUE(row_meets_claims(rows[0]));
}

TEST(Sweep, OrderAndParallelismIndependence) {
  SweepOptions serial{kDefaultMaxK, 1, {}}, parallel{kDefaultMaxK, 4, {}};
  const auto a = sweep({3, 1}, {2, 1}, {3, 2}, serial);
  const auto b = sweep({3, 1}, {2, 1}, {3, 2}, parallel);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 8u);
  EXPECT_EQ(a[0].family, 3);
  EXPECT_EQ(a[0].k, 2u);
  EXPECT_EQ(a[0].l, 3u);
  EXPECT_EQ(a[7].family, 1);
  EXPECT_EQ(a[7].k, 1u);
  EXPECT_EQ(a[7].l, 2u);
}

TEST(Sweep, FieldErrorsBecomeRows) {
  const auto rows = sweep({2}, {9}, {2});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].error, "unsupported degree");
  EXPECT_FALSE(rows[0].direct_bijection);
}

TEST(Sweep, Family3AtK2IsData) {
  const auto rows = sweep({3}, {2}, {2});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].routes_agree, true);
  EXPECT_TRUE(row_meets_claims(rows[0]));
}
