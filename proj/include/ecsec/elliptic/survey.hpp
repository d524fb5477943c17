#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ecsec/arith/ffpoly.hpp"
#include "ecsec/arith/poly.hpp"
#include "ecsec/elliptic/automorphism.hpp"
#include "ecsec/elliptic/sections.hpp"
#include "ecsec/elliptic/torsion.hpp"

namespace ecsec {

// One point of Y_0(N): an Aut(E)-orbit of subgroups of E[N].
struct SurveyRow {
  GF j;
  std::string subgroup;     // least label in the orbit
  int c = 0;
  int orbit_size = 1;
  std::vector<int> vanishing;  // residues m with g_m = 0
};

struct SurveyCheck {
  std::string name;
  bool ok = true;
};

struct SurveyReport {
  int n = 0;
  std::uint32_t p = 0;
  std::vector<int> extension_degrees;
  std::uint64_t seed = 0;
  std::vector<SurveyRow> rows;
  std::vector<SurveyCheck> checks;
  std::vector<std::string> gaps;  // j-invariants skipped by the extension cap
  bool partial = false;

  long count_c(int c) const {
    long k = 0;
    for (const auto& r : rows)
      if (r.c == c) ++k;
    return k;
  }
  long count_other() const {
    long k = 0;
    for (const auto& r : rows)
      if (r.c > 2) ++k;
    return k;
  }
  // Points where the trivial character vanishes.
  long d1() const {
    long k = 0;
    for (const auto& r : rows)
      if (!r.vanishing.empty() && r.vanishing.front() == 0) ++k;
    return k;
  }
  // Pairs {m, -m} of vanishing nontrivial characters, summed over points.
  long d2() const {
    long k = 0;
    for (const auto& r : rows)
      for (int m : r.vanishing)
        if (m != 0) ++k;
    return k / 2;
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

enum class SurveyScope { all, list, exceptional, closure };

struct SurveyOptions {
  int n = 5;
  std::uint32_t p = 31;
  SurveyScope scope = SurveyScope::all;
  std::vector<GF> js;        // explicit list
  std::vector<QPoly> locus;  // integer polynomials in j whose roots form the exceptional scope
  int ext_cap = 96;
  std::uint64_t seed = 1;
};

inline bool survey_row_less(const SurveyRow& a, const SurveyRow& b) {
  const int da = a.j.field().degree, db = b.j.field().degree;
  if (da != db) return da < db;
  if (a.j != b.j) return a.j < b.j;
  return a.subgroup < b.subgroup;
}

namespace detail {

// Reduction mod p of a polynomial with rational coefficients.
inline GFPoly reduce_locus(const QPoly& f, const GFContext& fp) {
  std::vector<GF> c;
  for (const auto& a : f.coeffs()) {
    if (mod_u32(a.den(), fp.p) == 0) throw DomainError("locus polynomial has a denominator divisible by p");
    c.push_back(GF(fp, a.num()) / GF(fp, a.den()));
  }
  return GFPoly(GF(fp), std::move(c));
}

// One representative per Frobenius orbit of the roots of the locus over the
// algebraic closure, each in its minimal field.
inline std::vector<GF> locus_roots(const std::vector<QPoly>& locus, const GFContext& fp, bool rational_only,
                                   std::uint64_t seed) {
  GFPoly prod = GFPoly::constant(GF(fp, 1L));
  for (const auto& f : locus) prod = prod * reduce_locus(f, fp);
  std::vector<GF> out;
  for (const auto& [d, part] : distinct_degree_factorization(prod)) {
    if (rational_only && d > 1) continue;
    const GFContext& ext = ext_field(fp.p, d);
    std::set<GF> seen;
    for (const auto& r : roots(lift(part, ext), seed)) {
      if (seen.count(r)) continue;
      for (int i = 0; i < d; ++i) seen.insert(r.frobenius(i));
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace detail

// Rows for the curve with invariant j and for its Frobenius conjugates.
inline void survey_j(const GF& j, const SurveyOptions& opt, SurveyReport& rep, std::map<std::string, bool>& checks) {
  const int n = opt.n;
  const ECurve e = curve_from_j(j);
  const bool special = j.is_zero() || j == j.from_int(1728);
  std::optional<FullTorsion> full;
  try {
    full.emplace(full_torsion(e, n, opt.seed, opt.ext_cap, special ? 2 : 1));
  } catch (const ExtensionCapExceeded& ex) {
    rep.partial = true;
    rep.gaps.push_back(j.str() + " over " + j.field_name() + ": needs degree " + std::to_string(ex.needed()));
    return;
  }
  const FullTorsion& t = *full;
  rep.extension_degrees.push_back(t.field().degree);
  const GF omega = primitive_root_of_unity(t.field(), n, opt.seed);
  const auto orbit = subgroup_orbits(t, automorphisms(t.curve));
  const int count = static_cast<int>(t.subgroups.size());
  std::vector<int> cs(count);
  std::vector<CharacterAnalysis> an(count);
  for (int i = 0; i < count; ++i) {
    const auto& c = t.subgroups[i];
    cs[i] = rank_c(t.curve, c);
    an[i] = char_vanishing(t.curve, c, omega, opt.seed + static_cast<std::uint64_t>(i));
    checks["characters = rank"] &= static_cast<int>(an[i].vanishing.size()) == cs[i];
    checks["model agreement"] &= an[i].evaluation_rank == n - cs[i];
    checks["symmetry"] &= an[i].symmetric;
    checks["product constancy"] &= an[i].product_constant;
    for (int m : an[i].vanishing)
      checks["symmetry"] &= std::binary_search(an[i].vanishing.begin(), an[i].vanishing.end(), (n - m) % n);
  }
  const int d = j.field().degree;
  for (int i = 0; i < count; ++i) {
    checks["aut invariance"] &= cs[i] == cs[orbit[i]];
    if (orbit[i] != i) continue;
    for (int f = 0; f < d; ++f) {
      SurveyRow row{j.frobenius(f), "", cs[i], 0, an[i].vanishing};
      std::string best;
      for (int k = 0; k < count; ++k) {
        if (orbit[k] != i) continue;
        ++row.orbit_size;
        std::vector<GF> xs;
        for (const auto& x : t.subgroups[k].xs) xs.push_back(x.frobenius(f));
        const std::string l = label_of(xs);
        if (best.empty() || l < best) best = l;
      }
      row.subgroup = best;
      rep.rows.push_back(std::move(row));
    }
  }
}

inline SurveyReport survey(const SurveyOptions& opt) {
  const int n = opt.n;
  if (!is_prime_small(n) || n == 2) throw DomainError("survey needs an odd prime N");
  if (opt.p % n == 0) throw DomainError("characteristic divides N");
  const GFContext& fp = prime_field(opt.p);
  SurveyReport rep;
  rep.n = n;
  rep.p = opt.p;
  rep.seed = opt.seed;
  std::vector<GF> js;
  switch (opt.scope) {
    case SurveyScope::all:
      for (std::uint32_t a = 0; a < opt.p; ++a) js.emplace_back(fp, static_cast<long>(a));
      break;
    case SurveyScope::list: {
      // Keep one representative per Frobenius orbit, in its minimal field.
      std::set<std::pair<int, GF>> seen;
      for (const auto& j : opt.js) {
        const int d = min_field_degree(j);
        const auto r = descend(j, ext_field(opt.p, d));
        GF jm = *r;
        bool dup = false;
        for (int i = 0; i < d; ++i) dup |= seen.count({d, jm.frobenius(i)}) > 0;
        if (dup) continue;
        seen.insert({d, jm});
        js.push_back(jm);
      }
      break;
    }
    case SurveyScope::exceptional:
    case SurveyScope::closure:
      js = detail::locus_roots(opt.locus, fp, opt.scope == SurveyScope::exceptional, opt.seed);
      break;
  }
  std::map<std::string, bool> checks{{"characters = rank", true}, {"model agreement", true}, {"symmetry", true},
                                     {"product constancy", true}, {"aut invariance", true}};
  for (const auto& j : js) survey_j(j, opt, rep, checks);
  std::sort(rep.rows.begin(), rep.rows.end(), survey_row_less);
  std::sort(rep.extension_degrees.begin(), rep.extension_degrees.end());
  rep.extension_degrees.erase(std::unique(rep.extension_degrees.begin(), rep.extension_degrees.end()),
                              rep.extension_degrees.end());
  const long nn = static_cast<long>(n) * n - 1;
  checks["row range"] = true;
  for (const auto& r : rep.rows) checks["row range"] &= r.c >= 0 && r.c < n;
  rep.checks = {{"characters = rank", checks["characters = rank"]},
                {"symmetry", checks["symmetry"]},
                {"product constancy", checks["product constancy"]},
                {"model agreement", checks["model agreement"]},
                {"aut invariance", checks["aut invariance"]},
                {"row range", checks["row range"]},
                {"D1 bound", rep.d1() * 24 <= nn},
                {"D2 bound", rep.d2() * 48 <= (n - 3) * nn}};
  return rep;
}

}  // namespace ecsec
