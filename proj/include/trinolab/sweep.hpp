// Batch verification over (family, k, l) rows, cross-checking every route.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trinolab/conjlab.hpp"
#include "trinolab/parallel.hpp"

namespace trinolab::conjlab {

struct SweepRow {
  int family = 0;
  unsigned k = 0;
  std::uint64_t l = 0;
  std::string modulus;
  /// Set when the row could not be built (e.g. a negative exponent); the
  /// result fields below are then absent.
  std::optional<std::string> error;
  std::optional<bool> gcd_ok;
  std::optional<bool> direct_bijection;
  std::optional<bool> zieve_cond1;
  std::optional<bool> zieve_cond2;
  std::optional<bool> g_bijection;
  std::optional<std::size_t> max_fiber_size;
  std::optional<std::size_t> witness_count;
  std::map<std::string, std::size_t> lemma_case_histogram;
  /// direct <=> cond1 and cond2, cond2 <=> g permutes mu_{q+1}, and every
  /// per-t root count equals the matching fiber of g.
  std::optional<bool> routes_agree;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepOptions {
  unsigned max_k = kDefaultMaxK;
  unsigned parallelism = 1;
  std::optional<TritVector> modulus;
};

/// Fibers of g indexed like mu; zero denominators are skipped and reported.
struct FiberScan {
  std::vector<std::size_t> sizes;
  bool denominator_vanishes = false;
};

inline FiberScan g_fibers(Family family, const UnityGroup& mu) {
  const FieldCtx& ctx = *mu.elements().front().field();
  const auto g = fractional_map(family, ctx);
  FiberScan out;
  out.sizes.assign(mu.size(), 0);
  for (const auto& x : mu.elements()) {
    const Element den = g.denominator(x);
    if (den.is_zero()) {
      out.denominator_vanishes = true;
      continue;
    }
    if (auto idx = mu.index_of(g.numerator(x) / den)) ++out.sizes[*idx];
  }
  return out;
}

/// Quantities that depend on (family, k) only, shared by every l.
struct FamilyFieldFacts {
  bool g_bijection = false;
  std::size_t max_fiber_size = 0;
  bool counts_match_fibers = true;
  std::size_t witness_count = 0;
  std::map<std::string, std::size_t> histogram;
};

inline FamilyFieldFacts family_field_facts(Family family, const UnityGroup& mu) {
  FamilyFieldFacts facts;
  const auto fibers = g_fibers(family, mu);
  facts.g_bijection = !fibers.denominator_vanishes;
  for (auto s : fibers.sizes) facts.g_bijection = facts.g_bijection && s == 1;

  for (const auto& t : mu.elements()) {
    const auto sol = count_solutions(family, t, mu);
    facts.max_fiber_size = std::max(facts.max_fiber_size, sol.count);
    // Family 2's equation indexes the fiber over 1/t.
    const Element target = family == Family::Two ? inv(t) : t;
    if (!fibers.denominator_vanishes && sol.count != fibers.sizes[*mu.index_of(target)])
      facts.counts_match_fibers = false;
  }

  switch (family) {
    case Family::One: {
      facts.witness_count = uv_identity_check(mu).witnesses.size();
      break;
    }
    case Family::Two: {
      facts.histogram = {{"EpsilonCase", 0}, {"ThetaCase", 0}, {"NoMatch", 0}};
      const auto h = harvest_witnesses(7, mu);
      facts.witness_count = h.witnesses.size();
      for (const auto& w : h.witnesses) ++facts.histogram[to_string(w.lemma_case)];
      break;
    }
    case Family::Three: {
      facts.histogram = {{"FifthDegreeRelation", 0}, {"NoMatch", 0}};
      const auto h = harvest_witnesses(5, mu);
      facts.witness_count = h.witnesses.size();
      for (const auto& w : h.witnesses) ++facts.histogram[to_string(w.lemma_case)];
      break;
    }
  }
  return facts;
}

inline SweepRow sweep_row(Family family, std::uint64_t l, const FieldCtx& ctx, const UnityGroup& mu,
                          const FamilyFieldFacts& facts) {
  SweepRow row;
  row.family = to_int(family);
  row.k = ctx.k();
  row.l = l;
  row.modulus = format_trits(ctx.modulus());
  try {
    const auto spec = trinomial_spec(family, l, ctx);
    const auto dec = trinomial_decompose(spec, ctx);
    const auto crit = zieve_criterion(ctx, dec.r, mu.d(), dec.h);
    row.gcd_ok = spec.gcd_ok;
    row.direct_bijection = trinomial_permutes_field(spec, ctx).is_bijection;
    row.zieve_cond1 = crit.cond1;
    row.zieve_cond2 = crit.cond2;
    row.g_bijection = facts.g_bijection;
    row.max_fiber_size = facts.max_fiber_size;
    row.witness_count = facts.witness_count;
    row.lemma_case_histogram = facts.histogram;
    row.routes_agree = *row.direct_bijection == (crit.cond1 && crit.cond2) && crit.cond2 == facts.g_bijection &&
                       facts.counts_match_fibers;
  } catch (const Error& e) {
    row = SweepRow{row.family, row.k, row.l, row.modulus, std::string(e.what())};
  }
  return row;
}

/// Rows ordered family-major, then k, then l, in the order given. A row that
/// cannot be built records its error and the sweep continues.
inline std::vector<SweepRow> sweep(const std::vector<int>& families, const std::vector<unsigned>& k_list,
                                   const std::vector<std::uint64_t>& l_list, const SweepOptions& options = {}) {
  struct Job {
    Family family;
    unsigned k;
    std::uint64_t l;
  };
  std::vector<Job> jobs;
  for (int fam : families)
    for (unsigned k : k_list)
      for (std::uint64_t l : l_list) jobs.push_back({family_from_int(fam), k, l});

  // Field construction and the l-independent facts are shared across rows.
  struct FieldEntry {
    FieldPtr ctx;
    std::optional<UnityGroup> mu;
    std::string error;
  };
  std::map<unsigned, FieldEntry> fields;
  for (unsigned k : k_list) {
    if (fields.contains(k)) continue;
    FieldEntry entry;
    try {
      entry.ctx = FieldCtx::create(k, options.modulus, options.max_k);
      entry.mu.emplace(mu_q_plus_1(*entry.ctx));
    } catch (const Error& e) {
      entry.error = e.what();
    }
    fields.emplace(k, std::move(entry));
  }
  std::vector<std::pair<int, unsigned>> fact_keys;
  for (int fam : families)
    for (const auto& [k, entry] : fields)
      if (entry.ctx) fact_keys.emplace_back(fam, k);
  std::vector<FamilyFieldFacts> fact_values(fact_keys.size());
  parallel_for(fact_keys.size(), options.parallelism, [&](std::size_t i) {
    const auto& [fam, k] = fact_keys[i];
    fact_values[i] = family_field_facts(family_from_int(fam), *fields.at(k).mu);
  });
  std::map<std::pair<int, unsigned>, const FamilyFieldFacts*> facts;
  for (std::size_t i = 0; i < fact_keys.size(); ++i) facts[fact_keys[i]] = &fact_values[i];

  std::vector<SweepRow> rows(jobs.size());
  parallel_for(jobs.size(), options.parallelism, [&](std::size_t i) {
    const Job& job = jobs[i];
    const FieldEntry& entry = fields.at(job.k);
    if (!entry.ctx) {
      rows[i] = SweepRow{to_int(job.family), job.k, job.l, "", entry.error};
      return;
    }
    rows[i] = sweep_row(job.family, job.l, *entry.ctx, *entry.mu, *facts.at({to_int(job.family), job.k}));
  });
  return rows;
}

/// Proven expectations a row must meet: family 2 permutes for every
/// k, family 3 for k != 2 mod 4 (rows with gcd_ok); routes always agree.
inline bool row_meets_claims(const SweepRow& row) {
  if (row.error) return true;
  if (!row.routes_agree.value_or(false)) return false;
  const bool claimed = (row.family == 2) || (row.family == 3 && row.k % 4 != 2);
  if (claimed) {
    if (!row.g_bijection.value_or(false) || row.max_fiber_size.value_or(0) != 1) return false;
    if (row.gcd_ok.value_or(false) && !row.direct_bijection.value_or(false)) return false;
  }
  if (row.gcd_ok && !*row.gcd_ok && row.direct_bijection.value_or(false)) return false;
  if (row.lemma_case_histogram.contains("NoMatch") && row.lemma_case_histogram.at("NoMatch") != 0) return false;
  return true;
}

}  // namespace trinolab::conjlab
