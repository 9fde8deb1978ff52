#include "ore/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ore/any_domain.hpp"
#include "ore/oracle.hpp"
#include "ore/prime_structure.hpp"
#include "text_util.hpp"

namespace ore {

namespace {

// Largest norm the oracle is asked to enumerate up to.
constexpr unsigned long kOracleCap = 531441;

std::uint64_t get_u64(const Json& j, const char* key, std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("config field '") + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

// Exponent cap that excludes nothing of norm <= bound.
unsigned exponent_cap(const mpz_class& bound) {
  return static_cast<unsigned>(std::max<std::size_t>(1, mpz_sizeinbase(bound.get_mpz_t(), 2)));
}

OracleBudget oracle_budget(const mpz_class& bound, const RunConfig& cfg) {
  return OracleBudget{bound, exponent_cap(bound), cfg.samples, cfg.seed};
}

std::string percent(std::size_t num, std::size_t den) {
  if (den == 0) return "n/a";
  const std::size_t hundredths = num * 10000 / den;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%zu.%02zu%%", hundredths / 100, hundredths % 100);
  return buf;
}

struct Tally {
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t fast_path_only = 0;

  Json entry(Json instance, Json fast, const std::optional<Json>& oracle, bool agrees) {
    Json e;
    e["instance"] = std::move(instance);
    e["fast_path_result"] = std::move(fast);
    if (!oracle) {
      ++fast_path_only;
      e["oracle_result"] = "fast-path-only";
      e["agree"] = nullptr;
      return e;
    }
    e["oracle_result"] = *oracle;
    e["agree"] = agrees;
    ++(agrees ? agree : disagree);
    return e;
  }

  Json summary() const {
    return Json{{"checked", agree + disagree},
                {"agree", agree},
                {"disagree", disagree},
                {"fast_path_only", fast_path_only},
                {"agreement", percent(agree, agree + disagree)}};
  }
};

template <SkewDomain D>
IdealOf<D> target_ideal(const D& dom, const RunConfig& cfg) {
  if (cfg.ideal.empty()) throw PreconditionError("command '" + cfg.command + "' needs --ideal");
  std::vector<typename D::Element> gens;
  for (const auto& s : cfg.ideal) gens.push_back(dom.parse(s));
  return ideal_make(dom, std::span<const typename D::Element>(gens));
}

template <SkewDomain D>
Json falsifier_json(const D& dom, const FalsifyResult<typename D::Element>& r, std::uint64_t samples,
                    std::uint64_t seed) {
  Json j{{"samples", samples}, {"seed", seed}, {"pairs_tested", r.pairs_tested}, {"middles_checked", r.middles_checked}};
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"f", ore_to_json(dom, w.f)},
                    {"g", ore_to_json(dom, w.g)},
                    {"closure_f", dom.format(w.closure_f)},
                    {"closure_g", dom.format(w.closure_g)},
                    {"sample", w.sample}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

template <SkewDomain D>
Json run_check_domain(const D& dom, const RunConfig& cfg, int& code) {
  Json j;
  const auto order = dom.sigma_order();
  j["sigma_order"] = order ? Json(*order) : Json("infinite");
  j["sigma_is_identity"] = dom.sigma_is_identity();
  j["delta_is_zero"] = dom.delta_is_zero();
  Rng rng(cfg.seed);
  std::size_t failures = 0;
  for (std::uint64_t n = 0; n < cfg.samples; ++n) {
    const auto u = dom.random_element(rng, 3);
    const auto v = dom.random_element(rng, 3);
    if (!leibniz_holds(dom, u, v) || !(dom.sigma(dom.sigma(u, 1), -1) == u)) ++failures;
  }
  j["leibniz_samples"] = cfg.samples;
  j["leibniz_failures"] = failures;
  if (failures != 0) code = kExitDomain;
  try {
    const auto a = inner_witness(dom);
    j["inner_witness"] = a ? Json(dom.format(*a)) : Json(nullptr);
  } catch (const NotApplicable& e) {
    j["inner_witness"] = "not-applicable";
    j["inner_note"] = e.what();
  }
  return j;
}

template <SkewDomain D>
Json run_classify(const D& dom, const RunConfig& cfg, int& code) {
  using E = typename D::Element;
  const auto p = target_ideal(dom, cfg);
  const auto v = classify_contraction(dom, p, cfg.budget);
  Json j;
  j["ideal"] = ideal_to_json(dom, p);
  j["ideal_text"] = format_ideal(dom, p);
  j["classification"] = verdict_to_json(dom, v);
  if (std::holds_alternative<Undecided>(v.kind)) {
    code = kExitUndecided;
    return j;
  }
  const auto problem = validate_verdict(dom, v);
  j["obligations"] = problem.empty() ? Json("validated") : Json(problem);
  if (!problem.empty()) code = kExitDisagreement;

  if (std::holds_alternative<ExtensionMinimal<E>>(v.kind)) {
    const auto r = extend_and_falsify(dom, p, cfg.samples, cfg.seed);
    j["extension_falsifier"] = falsifier_json(dom, r, cfg.samples, cfg.seed);
    if (r.witness) code = kExitDisagreement;
  }

  if constexpr (OracleDomain<D>) {
    mpz_class need = ideal_norm(dom, p);
    if (const auto* nm = std::get_if<NotMinimal<E>>(&v.kind)) need = std::max(need, ideal_norm(dom, nm->witness));
    if (need > kOracleCap) {
      j["oracle"] = {{"result", "fast-path-only"}};
    } else {
      const mpz_class sq = ideal_norm(dom, p) * ideal_norm(dom, p);
      mpz_class bound = std::max({mpz_class(cfg.norm_bound), need, sq <= kOracleCap ? sq : need});
      const Oracle<D> oracle(dom, oracle_budget(bound, cfg));
      const auto ok = oracle.confirms(v);
      j["oracle"] = {{"norm_bound", bound.get_str()},
                     {"result", ok ? Json(*ok ? "agree" : "disagree") : Json("fast-path-only")}};
      if (ok && !*ok) code = kExitDisagreement;
    }
  } else {
    j["oracle"] = {{"result", "fast-path-only"}};
  }
  return j;
}

template <SkewDomain D>
Json run_largest_stable(const D& dom, const RunConfig& cfg, int& code) {
  const auto p = target_ideal(dom, cfg);
  Json j;
  j["ideal"] = ideal_to_json(dom, p);
  j["ideal_text"] = format_ideal(dom, p);
  const auto m = largest_stable_ideal(dom, p, cfg.budget);
  j["budget"] = cfg.budget;
  if (const auto* u = std::get_if<Undecided>(&m)) {
    j["largest_stable"] = {{"undecided", {{"budget", u->budget}, {"stage", u->stage}}}};
    code = kExitUndecided;
    return j;
  }
  const auto& ideal = std::get<IdealOf<D>>(m);
  j["largest_stable"] = ideal_to_json(dom, ideal);
  j["largest_stable_text"] = format_ideal(dom, ideal);
  if constexpr (OracleDomain<D>) {
    const mpz_class need = ideal_norm(dom, ideal);
    if (need > kOracleCap) {
      j["oracle"] = {{"result", "fast-path-only"}};
    } else {
      const mpz_class bound = std::max(mpz_class(cfg.norm_bound), need);
      const auto brute = Oracle<D>(dom, oracle_budget(bound, cfg)).largest_stable(p);
      const bool agree = brute.complete && brute.ideal == ideal;
      j["oracle"] = {{"norm_bound", bound.get_str()},
                     {"oracle_result", ideal_to_json(dom, brute.ideal)},
                     {"complete", brute.complete},
                     {"result", agree ? "agree" : "disagree"}};
      if (!agree) code = kExitDisagreement;
    }
  } else {
    j["oracle"] = {{"result", "fast-path-only"}};
  }
  return j;
}

template <SkewDomain D>
Json run_enumerate_minimal(const D& dom, const RunConfig& cfg, int& code) {
  const auto res = minimal_primes_inner(dom, mpz_class(cfg.norm_bound), cfg.budget);
  Json j;
  j["inner_witness"] = dom.format(res.witness);
  j["norm_bound"] = cfg.norm_bound;
  Json primes = Json::array();
  for (const auto& p : res.primes) {
    Json e{{"ideal", ideal_to_json(dom, p)}, {"text", format_ideal(dom, p)}};
    e["minimal_prime"] = format_ideal(dom, p) + "[x; sigma, delta]";
    primes.push_back(std::move(e));
  }
  j["primes"] = std::move(primes);
  j["note"] = res.note;
  if constexpr (OracleDomain<D>) {
    Tally tally;
    Json entries = Json::array();
    for (const auto& p : res.primes) {
      const mpz_class n = ideal_norm(dom, p);
      const bool fast = is_sigma_delta_prime(dom, p, cfg.budget);
      if (n * n > kOracleCap) {
        entries.push_back(tally.entry(format_ideal(dom, p), fast, std::nullopt, false));
        continue;
      }
      const Oracle<D> oracle(dom, oracle_budget(std::max(mpz_class(cfg.norm_bound), mpz_class(n * n)), cfg));
      const bool brute = oracle.is_sigma_delta_prime(p) && oracle.minimality_check(p);
      entries.push_back(tally.entry(format_ideal(dom, p), fast, brute, fast == brute));
    }
    j["oracle"] = {{"entries", std::move(entries)}, {"summary", tally.summary()}};
    if (tally.disagree != 0) code = kExitDisagreement;
  }
  return j;
}

template <SkewDomain D>
Json run_verify(const D& dom, const RunConfig& cfg, int& code) {
  if constexpr (!OracleDomain<D>) {
    throw PreconditionError("verify needs the brute-force oracle, which covers only Z[i] and F_q[t]");
  } else {
    using E = typename D::Element;
    const mpz_class bound(cfg.norm_bound);
    const Oracle<D> small(dom, oracle_budget(bound, cfg));
    Json j;
    j["norm_bound"] = cfg.norm_bound;
    j["budget"] = cfg.budget;
    Tally total;

    // Every ideal of norm <= bound, plus ZERO.
    std::vector<IdealOf<D>> ideals{IdealOf<D>::zero()};
    for (const auto& g : small.candidates()) ideals.push_back(ideal_from_element(dom, g));
    sort_ideals(dom, ideals);

    Tally t1;
    Json e1 = Json::array();
    std::vector<IdealOf<D>> sd_primes;
    for (const auto& ideal : ideals) {
      Json fast;
      bool fast_value = false;
      try {
        fast_value = is_sigma_delta_prime(dom, ideal, cfg.budget);
        fast = fast_value;
      } catch (const BudgetExceeded&) {
        fast = "undecided";
      }
      const bool brute = small.is_sigma_delta_prime(ideal);
      if (brute && !ideal.is_zero()) sd_primes.push_back(ideal);
      e1.push_back(t1.entry(format_ideal(dom, ideal), fast, brute, fast.is_boolean() && fast_value == brute));
    }
    j["sigma_delta_prime"] = {{"entries", std::move(e1)}, {"summary", t1.summary()}};

    const auto primes = enumerate_primes(dom, bound);
    std::vector<StableResult<E>> fast_largest;
    mpz_class big_bound = bound;
    for (const auto& p : primes) {
      fast_largest.push_back(largest_stable_below_prime(dom, p, cfg.budget));
      if (const auto* m = std::get_if<IdealOf<D>>(&fast_largest.back())) {
        const mpz_class n = ideal_norm(dom, *m);
        if (n <= kOracleCap) big_bound = std::max(big_bound, n);
      }
    }
    const Oracle<D> big(dom, oracle_budget(big_bound, cfg));
    Tally t2;
    Json e2 = Json::array();
    for (std::size_t k = 0; k < primes.size(); ++k) {
      const auto p = IdealOf<D>::from_factors({{primes[k], 1}});
      const auto* m = std::get_if<IdealOf<D>>(&fast_largest[k]);
      const Json fast = m ? Json(format_ideal(dom, *m)) : Json("undecided");
      if (m && ideal_norm(dom, *m) > big_bound) {
        e2.push_back(t2.entry(format_ideal(dom, p), fast, std::nullopt, false));
        continue;
      }
      const auto brute = big.largest_stable(p);
      const Json oracle = brute.complete ? Json(format_ideal(dom, brute.ideal)) : Json("incomplete");
      e2.push_back(t2.entry(format_ideal(dom, p), fast, oracle, m && brute.complete && brute.ideal == *m));
    }
    j["largest_stable"] = {{"oracle_norm_bound", big_bound.get_str()}, {"entries", std::move(e2)}, {"summary", t2.summary()}};

    Tally t3;
    Json e3 = Json::array();
    std::vector<IdealOf<D>> targets = sd_primes;
    for (const auto& p : primes) targets.push_back(IdealOf<D>::from_factors({{p, 1}}));
    for (const auto& p : targets) {
      const auto v = classify_contraction(dom, p, cfg.budget);
      const auto problem = validate_verdict(dom, v);
      const auto ok = big.confirms(v);
      Json fast = verdict_to_json(dom, v);
      if (!problem.empty()) fast["obligations"] = problem;
      std::optional<Json> oracle;
      if (ok) oracle = Json(*ok ? "confirmed" : "refuted");
      e3.push_back(t3.entry(format_ideal(dom, p), std::move(fast), oracle, problem.empty() && ok.value_or(false)));
    }
    j["classify"] = {{"entries", std::move(e3)}, {"summary", t3.summary()}};

    Tally t4;
    Json e4 = Json::array();
    for (const auto& p : sd_primes) {
      const auto r = extend_and_falsify(dom, p, cfg.samples, cfg.seed);
      e4.push_back(t4.entry(format_ideal(dom, p), falsifier_json(dom, r, cfg.samples, cfg.seed), Json("sigma-delta-prime"),
                            !r.witness.has_value()));
    }
    j["falsifier"] = {{"entries", std::move(e4)}, {"summary", t4.summary()}};

    for (const Tally* t : {&t1, &t2, &t3, &t4}) {
      total.agree += t->agree;
      total.disagree += t->disagree;
      total.fast_path_only += t->fast_path_only;
    }
    j["summary"] = total.summary();
    if (total.disagree != 0) code = kExitDisagreement;
    return j;
  }
}

Json dispatch(const AnyDomain& any, const RunConfig& cfg, int& code) {
  return std::visit(
      [&](const auto& dom) -> Json {
        if (cfg.command == "check-domain") return run_check_domain(dom, cfg, code);
        if (cfg.command == "classify") return run_classify(dom, cfg, code);
        if (cfg.command == "largest-stable") return run_largest_stable(dom, cfg, code);
        if (cfg.command == "enumerate-minimal") return run_enumerate_minimal(dom, cfg, code);
        if (cfg.command == "verify") return run_verify(dom, cfg, code);
        throw ParseError("unknown command '" + cfg.command + "'");
      },
      any);
}

const char* status_name(int code) {
  switch (code) {
    case kExitOk:
      return "ok";
    case kExitConfig:
      return "config-error";
    case kExitDomain:
      return "invalid-domain";
    case kExitPrecondition:
      return "precondition-violation";
    case kExitUndecided:
      return "undecided";
    case kExitDisagreement:
      return "oracle-disagreement";
    default:
      return "error";
  }
}

}  // namespace

std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = detail::trim(part);
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

RunConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  RunConfig cfg;
  if (j.contains("domain")) cfg.domain = j.at("domain");
  if (j.contains("command")) {
    if (!j.at("command").is_string()) throw ParseError("config field 'command' must be a string");
    cfg.command = j.at("command").get<std::string>();
  }
  if (j.contains("ideal")) {
    const auto& v = j.at("ideal");
    if (v.is_string()) {
      cfg.ideal = split_generators(v.get<std::string>());
    } else if (v.is_array()) {
      for (const auto& g : v) {
        if (!g.is_string()) throw ParseError("ideal generators must be strings");
        cfg.ideal.push_back(g.get<std::string>());
      }
    } else {
      throw ParseError("config field 'ideal' must be a string or an array of strings");
    }
  }
  cfg.norm_bound = get_u64(j, "norm_bound", cfg.norm_bound);
  cfg.budget = get_u64(j, "budget", cfg.budget);
  cfg.samples = get_u64(j, "samples", cfg.samples);
  cfg.seed = get_u64(j, "seed", cfg.seed);
  if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config file '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

Json config_to_json(const RunConfig& cfg) {
  return Json{{"domain", cfg.domain},        {"command", cfg.command}, {"ideal", cfg.ideal},
              {"norm_bound", cfg.norm_bound}, {"budget", cfg.budget},   {"samples", cfg.samples},
              {"seed", cfg.seed}};
}

RunOutcome execute(const RunConfig& cfg) {
  RunOutcome out;
  Json& report = out.report;
  report["command"] = cfg.command;
  int code = kExitOk;
  try {
    if (cfg.budget == 0) throw ParseError("budget must be positive");
    if (cfg.samples == 0) throw ParseError("samples must be positive");
    if (cfg.domain.is_null()) throw ParseError("config has no domain");
    const AnyDomain dom = build_domain(cfg.domain);
    Json inputs = config_to_json(cfg);
    inputs["domain"] = describe(dom);
    inputs["ideal"] = std::visit(
        [&](const auto& d) {
          Json gens = Json::array();
          for (const auto& g : cfg.ideal) gens.push_back(d.format(d.parse(g)));
          return gens;
        },
        dom);
    report["inputs"] = std::move(inputs);
    report["result"] = dispatch(dom, cfg, code);
  } catch (const ParseError& e) {
    code = kExitConfig;
    report["error"] = e.what();
  } catch (const DomainError& e) {
    code = kExitDomain;
    report["error"] = e.what();
  } catch (const PreconditionError& e) {
    code = kExitPrecondition;
    report["error"] = e.what();
  } catch (const NotApplicable& e) {
    code = kExitPrecondition;
    report["error"] = e.what();
  } catch (const BudgetExceeded& e) {
    code = kExitUndecided;
    report["error"] = e.what();
  } catch (const std::exception& e) {
    code = kExitIo;
    report["error"] = e.what();
  }
  report["status"] = status_name(code);
  report["exit_code"] = code;
  out.exit_code = code;
  return out;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + tmp.string() + "' for writing");
    f << text;
    f.flush();
    if (!f) throw Error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move report into '" + path + "': " + ec.message());
  }
}

}  // namespace ore
