#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecsec/elliptic/survey.hpp"
#include "ecsec/ngon/ngon.hpp"
#include "ecsec/qexp/exceptional.hpp"

namespace ecsec::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kCheckFailure = 1, kPartial = 2, kUsage = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  int n = 5;
  std::uint32_t p = 31;
  int ext_cap = 96;
  int prec = 0;  // 0 selects the default for N
  std::uint64_t seed = 1;
  std::string scope = "all";
  std::string format = "json";
  std::string j;      // rank: j-invariant
  std::string curve;  // rank: "a1,a2,a3,a4,a6"
  std::string gen = "auto";
  int e = 0;  // ngon width
  std::vector<long> r;
};

struct Outcome {
  int code = kOk;
  Json report;
  std::string text;
};

// Splits on commas outside brackets.
inline std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

// "19", "-25/2" (reduced mod p) or "[c0,c1,...]" (an element of GF(p^k), k = length).
inline GF parse_gf(const std::string& s, std::uint32_t p) {
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw UsageError("unterminated field element '" + s + "'");
    const auto parts = split_top(s.substr(1, s.size() - 2));
    if (parts.empty()) throw UsageError("empty field element");
    std::vector<std::uint32_t> c;
    for (const auto& x : parts) {
      const Rational v = parse_rational(x);
      if (!v.is_integer()) throw UsageError("coefficients must be integers: '" + s + "'");
      c.push_back(mod_u32(v.num(), p));
    }
    const GFContext& f = ext_field(p, static_cast<int>(c.size()));
    return GF(f, std::move(c));
  }
  const Rational v = parse_rational(s);
  const GFContext& fp = prime_field(p);
  const GF d(fp, v.den());
  if (d.is_zero()) throw UsageError("denominator of '" + s + "' vanishes mod " + std::to_string(p));
  return GF(fp, v.num()) / d;
}

inline void validate_field(const RunConfig& cfg) {
  if (!is_prime_u32(cfg.p)) throw UsageError("p must be prime, got " + std::to_string(cfg.p));
  if (cfg.n < 3 || cfg.n % 2 == 0) throw UsageError("N must be odd and at least 3");
  if (cfg.p % static_cast<std::uint32_t>(cfg.n) == 0) throw UsageError("p must not divide N");
  if (cfg.ext_cap < 1) throw UsageError("extension cap must be positive");
}

inline QPoly int_poly(const std::vector<std::string>& c) {
  std::vector<Rational> v;
  for (const auto& s : c) v.emplace_back(Integer(s));
  return QPoly(Rational(), std::move(v));
}

// Polynomials and invariant factorizations for N = 5 and 7 as published;
// lowest degree first.
struct Golden {
  QPoly f1, f2, F1, F2;
  std::vector<std::pair<std::string, std::string>> invariants;
};

inline const Golden* golden(int n) {
  static const Golden five{int_poly({"5", "1"}), int_poly({"10", "1"}), int_poly({"-1600", "1"}),
                           int_poly({"25", "2"}), {}};
  static const Golden seven{
      int_poly({"7", "7", "1"}),
      int_poly({"735", "588", "168", "21", "1"}),
      int_poly({"-288000", "-1104", "1"}),
      int_poly({"-141176604743", "-5403404499", "20163177", "-28857", "15"}),
      {{"f1(0)", "7"},
       {"f2(0)", "3 * 5 * 7^2"},
       {"disc f1", "3 * 7"},
       {"disc f2", "-3^3 * 7^6"},
       {"res(f1, f2)", "7^4"},
       {"disc F1", "2^8 * 3^3 * 7^3"},
       {"disc F2", "-3 * 7^18 * 43^2 * 139^2 * 421^2 * 591751^2"},
       {"res(F1, F2)", "5 * 7^12 * 47 * 3491 * 5939 * 244603"}}};
  if (n == 5) return &five;
  if (n == 7) return &seven;
  return nullptr;
}

inline int default_precision(int n) { return n == 5 ? 48 : n == 7 ? 64 : 128; }

// Integer polynomials in j whose roots are the exceptional j-invariants.
inline std::vector<QPoly> exceptional_locus(int n) {
  if (const Golden* g = golden(n)) return {g->F1, g->F2};
  if (n == 13) {
    const auto ex = compute_exceptional_polys(13, default_precision(13));
    return {ex.F1, ex.F2};
  }
  throw UsageError("the exceptional locus is available for N in {5, 7, 13}");
}

inline std::string status(bool ok) { return ok ? "OK" : "FAIL"; }

inline Json checks_json(const std::vector<SurveyCheck>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back({{"name", c.name}, {"status", status(c.ok)}});
  return a;
}

inline Json survey_json(const std::string& command, const SurveyReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) rows.push_back({{"j", r.j.str()}, {"subgroup", r.subgroup}, {"c", r.c}});
  return Json{{"command", command},
              {"N", rep.n},
              {"p", rep.p},
              {"extension_degrees", rep.extension_degrees},
              {"seed", rep.seed},
              {"rows", rows},
              {"aggregate",
               {{"c0", rep.count_c(0)}, {"c1", rep.count_c(1)}, {"c2", rep.count_c(2)}, {"c_other", rep.count_other()}}},
              {"checks", checks_json(rep.checks)},
              {"partial", rep.partial}};
}

inline std::string join_ints(const std::vector<int>& v, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::string survey_text(const std::string& command, const SurveyReport& rep) {
  std::ostringstream os;
  os << command << " N=" << rep.n << " p=" << rep.p << " seed=" << rep.seed << "\n";
  os << "extension degrees: " << join_ints(rep.extension_degrees) << "\n";
  std::size_t wj = 1, ws = 8;
  for (const auto& r : rep.rows) {
    wj = std::max(wj, r.j.str().size());
    ws = std::max(ws, r.subgroup.size());
  }
  os << std::left << std::setw(static_cast<int>(wj) + 2) << "j" << std::setw(static_cast<int>(ws) + 2) << "subgroup"
     << "c  vanishing\n";
  for (const auto& r : rep.rows)
    os << std::setw(static_cast<int>(wj) + 2) << r.j.str() << std::setw(static_cast<int>(ws) + 2) << r.subgroup
       << std::setw(3) << r.c << join_ints(r.vanishing, ",") << "\n";
  os << "c=0: " << rep.count_c(0) << "  c=1: " << rep.count_c(1) << "  c=2: " << rep.count_c(2)
     << "  c>2: " << rep.count_other() << "\n";
  for (const auto& g : rep.gaps) os << "skipped: " << g << "\n";
  for (const auto& c : rep.checks) os << c.name << ": " << status(c.ok) << "\n";
  if (rep.partial) os << "partial: extension cap reached\n";
  return os.str();
}

inline int survey_code(const SurveyReport& rep) {
  if (!rep.ok()) return kCheckFailure;
  return rep.partial ? kPartial : kOk;
}

inline SurveyOptions survey_options(const RunConfig& cfg) {
  SurveyOptions opt;
  opt.n = cfg.n;
  opt.p = cfg.p;
  opt.ext_cap = cfg.ext_cap;
  opt.seed = cfg.seed;
  const std::string& s = cfg.scope;
  if (s == "all") {
    opt.scope = SurveyScope::all;
  } else if (s == "exceptional" || s == "closure") {
    opt.scope = s == "closure" ? SurveyScope::closure : SurveyScope::exceptional;
    opt.locus = exceptional_locus(cfg.n);
  } else if (s.rfind("j=", 0) == 0) {
    opt.scope = SurveyScope::list;
    for (const auto& x : split_top(s.substr(2))) opt.js.push_back(parse_gf(x, cfg.p));
    if (opt.js.empty()) throw UsageError("empty j list");
  } else {
    throw UsageError("scope must be all, j=<list>, exceptional or closure; got '" + s + "'");
  }
  return opt;
}

inline Outcome cmd_survey(const RunConfig& cfg) {
  validate_field(cfg);
  const SurveyReport rep = survey(survey_options(cfg));
  return {survey_code(rep), survey_json("survey", rep), survey_text("survey", rep)};
}

// Embeds a curve and a point into the extension of degree lcm(deg, d).
inline std::pair<ECurve, EPoint> widen(const ECurve& e, const EPoint& p, int d) {
  const GFContext& f = e.zero().field();
  const int k = static_cast<int>(lcm_u64(f.degree, d));
  if (k == f.degree) return {e, p};
  const GFContext& big = ext_field(f.p, k);
  auto m = [&](const GF& a) { return embed(a, big); };
  return {e.mapped(m), p.infinity ? p : EPoint::affine(m(p.x), m(p.y))};
}

inline ECurve rank_curve(const RunConfig& cfg) {
  if (!cfg.curve.empty()) {
    const auto parts = split_top(cfg.curve);
    if (parts.size() != 5) throw UsageError("--curve needs a1,a2,a3,a4,a6");
    std::vector<GF> a;
    for (const auto& x : parts) a.push_back(parse_gf(x, cfg.p));
    const GFContext* ctx = &a[0].field();
    for (const auto& x : a)
      if (x.field().degree > ctx->degree) ctx = &x.field();
    for (auto& x : a) x = embed(x, *ctx);
    return ECurve(a[0], a[1], a[2], a[3], a[4]);
  }
  if (cfg.j.empty()) throw UsageError("rank needs --j or --curve");
  return curve_from_j(parse_gf(cfg.j, cfg.p));
}

// c for the subgroups of one curve: every subgroup (auto) or the one generated
// by the first order-N point found (first).
inline Outcome cmd_rank(const RunConfig& cfg) {
  validate_field(cfg);
  if (cfg.gen != "auto" && cfg.gen != "first") throw UsageError("--gen must be auto or first");
  const ECurve e = rank_curve(cfg);
  SurveyReport rep;
  rep.n = cfg.n;
  rep.p = cfg.p;
  rep.seed = cfg.seed;
  std::vector<std::pair<ECurve, Subgroup>> work;
  try {
    if (cfg.gen == "auto") {
      if (!is_prime_small(cfg.n)) throw UsageError("--gen auto needs a prime N");
      const auto t = full_torsion(e, cfg.n, cfg.seed, cfg.ext_cap);
      for (const auto& c : t.subgroups) work.emplace_back(t.curve, c);
    } else {
      auto [ek, pt] = find_order_N_point(e, cfg.n, cfg.seed, cfg.ext_cap);
      const int mu = multiplicative_order_mod(cfg.p, cfg.n);
      std::tie(ek, pt) = widen(ek, pt, mu);
      if (ek.zero().field().degree > cfg.ext_cap) throw ExtensionCapExceeded(ek.zero().field().degree, cfg.ext_cap);
      work.emplace_back(ek, make_subgroup(ek, pt, cfg.n));
    }
  } catch (const ExtensionCapExceeded& ex) {
    rep.partial = true;
    rep.gaps.push_back(e.j_invariant().str() + ": needs degree " + std::to_string(ex.needed()));
  }
  bool chars = true, sym = true, prod = true, model = true;
  int best = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const auto& [k, c] = work[i];
    const int deg = k.zero().field().degree;
    if (std::find(rep.extension_degrees.begin(), rep.extension_degrees.end(), deg) == rep.extension_degrees.end())
      rep.extension_degrees.push_back(deg);
    const int rc = rank_c(k, c);
    const GF omega = primitive_root_of_unity(k.zero().field(), cfg.n, cfg.seed);
    const auto an = char_vanishing(k, c, omega, cfg.seed + i);
    chars &= static_cast<int>(an.vanishing.size()) == rc;
    model &= an.evaluation_rank == cfg.n - rc;
    sym &= an.symmetric;
    prod &= an.product_constant;
    best = std::max(best, rc);
    rep.rows.push_back({e.j_invariant(), c.label, rc, 1, an.vanishing});
  }
  rep.checks = {{"characters = rank", chars}, {"symmetry", sym}, {"product constancy", prod}, {"model agreement", model}};
  Outcome out{survey_code(rep), survey_json("rank", rep), ""};
  std::ostringstream os;
  os << "curve " << e.str() << " over " << e.zero().field_name() << ", j = " << e.j_invariant().str() << "\n";
  for (const auto& r : rep.rows)
    os << "subgroup " << r.subgroup << ": c = " << r.c << ", vanishing characters m = " << join_ints(r.vanishing, ",")
       << "\n";
  if (!rep.rows.empty()) os << "c = " << best << "\n";
  for (const auto& g : rep.gaps) os << "skipped: " << g << "\n";
  for (const auto& c : rep.checks) os << c.name << ": " << status(c.ok) << "\n";
  out.text = os.str();
  return out;
}

inline Json poly_json(const QPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(c.str());
  return a;
}

inline Outcome cmd_qexp(const RunConfig& cfg) {
  const int n = cfg.n;
  if (n != 5 && n != 7 && n != 13) throw UsageError("qexp needs N in {5, 7, 13}");
  const int prec = cfg.prec > 0 ? cfg.prec : default_precision(n);
  if (prec < exceptional_precision(n))
    throw UsageError("precision must be at least " + std::to_string(exceptional_precision(n)) + " for N = " +
                     std::to_string(n));
  const auto ex = compute_exceptional_polys(n, prec);
  const auto table = invariant_table(ex);
  const int nn = n * n - 1;
  std::vector<std::pair<std::string, std::string>> checks;  // name, OK | FAIL | INCONCLUSIVE
  auto check = [&](const std::string& name, bool ok) { checks.emplace_back(name, status(ok)); };
  check("deg f1 = (N^2-1)/24", ex.f1.degree() == nn / 24);
  check("deg f2 = (N-3)(N^2-1)/48", ex.f2.degree() == (n - 3) * nn / 48);
  check("v_q(G/H) = (N^2-1)/12", ex.gh_valuation == nn / 12);
  check("f1(0) = N", ex.f1.coeff(0) == Rational(n));
  check("f2(0) != 0", !ex.f2.coeff(0).is_zero());
  check("squarefree f1", QPoly::gcd(ex.f1, ex.f1.derivative()).degree() == 0);
  check("squarefree f2", QPoly::gcd(ex.f2, ex.f2.derivative()).degree() == 0);
  check("coprime f1, f2", QPoly::gcd(ex.f1, ex.f2).degree() == 0);
  check("j = P(t)/t", ex.relation.q == QPoly::x(Rational()) && ex.relation.p.degree() == n + 1);
  check("deg F1 = deg f1", ex.F1.degree() == ex.f1.degree());
  check("deg F2 = deg f2", ex.F2.degree() == ex.f2.degree());
  const std::pair<std::string, const QPoly*> named[] = {{"f1", &ex.f1}, {"f2", &ex.f2}, {"F1", &ex.F1}, {"F2", &ex.F2}};
  std::vector<std::pair<std::string, std::uint32_t>> witness;
  for (const auto& [name, f] : named) {
    const auto w = irreducibility_witness(*f);
    if (w) witness.emplace_back(name, *w);
    checks.emplace_back("irreducible " + name, w ? "OK" : "INCONCLUSIVE");
  }
  if (const Golden* g = golden(n)) {
    check("f1 golden", ex.f1 == g->f1);
    check("f2 golden", ex.f2 == g->f2);
    check("F1 golden", ex.F1 == g->F1);
    check("F2 golden", ex.F2 == g->F2);
    for (const auto& [name, want] : g->invariants) {
      std::string got;
      for (const auto& iv : table)
        if (iv.name == name) got = iv.factored.str();
      check(name + " golden", got == want);
    }
  }
  bool failed = false;
  Json cj = Json::array();
  for (const auto& [name, st] : checks) {
    cj.push_back({{"name", name}, {"status", st}});
    failed |= st == "FAIL";
  }
  Json inv = Json::array();
  for (const auto& iv : table)
    inv.push_back({{"name", iv.name}, {"value", iv.value.get_str()}, {"factorization", iv.factored.str()}});
  Json report{{"command", "qexp"},
              {"N", n},
              {"precision", prec},
              {"f1", poly_json(ex.f1)},
              {"f2", poly_json(ex.f2)},
              {"F1", poly_json(ex.F1)},
              {"F2", poly_json(ex.F2)},
              {"j_relation", {{"P", poly_json(ex.relation.p)}, {"Q", poly_json(ex.relation.q)}}},
              {"invariants", inv},
              {"checks", cj}};

  std::ostringstream os;
  os << "N = " << n << ", precision " << prec << "\n";
  os << "  f1(t) = " << ex.f1.str("t") << "\n";
  os << "  f2(t) = " << ex.f2.str("t") << "\n";
  os << "  F1(j) = " << ex.F1.str("j") << "\n";
  os << "  F2(j) = " << ex.F2.str("j") << "\n";
  std::size_t w = 0;
  for (const auto& iv : table) w = std::max(w, iv.name.size());
  for (const auto& iv : table)
    os << "  " << std::left << std::setw(static_cast<int>(w)) << iv.name << " = " << iv.factored.str() << "\n";
  for (const auto& [name, p] : witness) os << "  " << name << " irreducible mod " << p << "\n";
  for (const auto& [name, st] : checks) os << name << ": " << st << "\n";
  return {failed ? kCheckFailure : kOk, report, os.str()};
}

inline Outcome cmd_ngon(const RunConfig& cfg) {
  const int e = cfg.e > 0 ? cfg.e : static_cast<int>(cfg.r.size());
  if (e < 1 || static_cast<int>(cfg.r.size()) != e) throw UsageError("ngon needs e counts r_0..r_{e-1}");
  const NgonProfile prof = solve_valuations(e, cfg.r);
  Json nj = Json::array();
  std::string line;
  for (std::size_t i = 0; i < prof.n.size(); ++i) {
    nj.push_back(prof.n[i].str());
    line += (i ? " " : "") + prof.n[i].str();
  }
  bool zero = true;
  for (int i = 0; i < e; ++i) zero &= ngon_residual(prof, i).is_zero();
  Json report{{"command", "ngon"},
              {"e", e},
              {"r", cfg.r},
              {"n", nj},
              {"integral", prof.integral()},
              {"checks", Json::array({{{"name", "residual zero"}, {"status", status(zero)}}})}};
  return {zero ? kOk : kCheckFailure, report, "n = " + line + "\n"};
}

inline Outcome run(const RunConfig& cfg) {
  if (cfg.command == "rank") return cmd_rank(cfg);
  if (cfg.command == "survey") return cmd_survey(cfg);
  if (cfg.command == "qexp") return cmd_qexp(cfg);
  if (cfg.command == "ngon") return cmd_ngon(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

inline std::string render(const Outcome& o, const std::string& format) {
  if (format == "json") return o.report.dump(2) + "\n";
  if (format == "text") return o.text;
  throw UsageError("format must be json or text");
}

}  // namespace ecsec::cli
