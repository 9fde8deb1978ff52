#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ore/domain.hpp"
#include "ore/errors.hpp"
#include "ore/ideal.hpp"
#include "ore/ore_poly.hpp"
#include "ore/prime_structure.hpp"

namespace ore {

using Json = nlohmann::ordered_json;

// {"zero": true}, {"unit": true}, or [{"prime": <element>, "exp": k}, ...].
template <SkewDomain D>
Json ideal_to_json(const D& dom, const IdealOf<D>& ideal) {
  if (ideal.is_zero()) return Json{{"zero", true}};
  if (ideal.is_unit()) return Json{{"unit", true}};
  Json fs = Json::array();
  for (const auto& f : ideal.factors()) fs.push_back({{"prime", dom.format(f.prime)}, {"exp", f.exp}});
  return fs;
}

// Re-parses and re-normalizes every prime, so a tampered report is caught.
template <SkewDomain D>
IdealOf<D> ideal_from_json(const D& dom, const Json& j) {
  if (j.is_object()) {
    if (j.value("zero", false)) return IdealOf<D>::zero();
    if (j.value("unit", false)) return IdealOf<D>::unit();
    throw ParseError("ideal object must be {\"zero\": true} or {\"unit\": true}");
  }
  if (!j.is_array()) throw ParseError("ideal must be an object or an array of prime powers");
  std::vector<PrimePower<typename D::Element>> fs;
  for (const auto& f : j) {
    const auto text = f.at("prime").get<std::string>();
    const auto p = dom.normalize(dom.parse(text));
    if (!dom.is_prime(p)) throw ParseError("ideal factor " + text + " is not prime");
    const auto e = f.at("exp").get<unsigned>();
    if (e == 0) throw ParseError("ideal exponents must be positive");
    fs.push_back({p, e});
  }
  return IdealOf<D>::from_factors(std::move(fs));
}

template <SkewDomain D>
Json ore_to_json(const D& dom, const OrePolyOf<D>& f) {
  Json cs = Json::array();
  for (const auto& c : f.coeffs()) cs.push_back(dom.format(c));
  return Json{{"ring", to_string(f.tag())}, {"coeffs", std::move(cs)}};
}

template <SkewDomain D>
OrePolyOf<D> ore_from_json(const D& dom, const Json& j) {
  const auto ring = j.at("ring").get<std::string>();
  RingTag tag;
  if (ring == "x-sigma-delta") {
    tag = RingTag::XSigmaDelta;
  } else if (ring == "y-sigma") {
    tag = RingTag::YSigma;
  } else {
    throw ParseError("unknown ring tag '" + ring + "'");
  }
  std::vector<typename D::Element> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(dom.parse(c.get<std::string>()));
  return OrePolyOf<D>(std::move(cs), tag);
}

template <SkewDomain D>
Json verdict_to_json(const D& dom, const Verdict<typename D::Element>& v) {
  using E = typename D::Element;
  Json j;
  j["verdict"] = verdict_name<E>(v.kind);
  j["p"] = ideal_to_json(dom, v.p);
  j["p_text"] = format_ideal(dom, v.p);
  j["branch"] = to_string(v.branch);
  j["budget"] = v.budget;
  j["minimality_over"] = "nonzero (sigma, delta)-primes";
  if (std::holds_alternative<ExtensionMinimal<E>>(v.kind)) {
    j["minimal_prime"] = format_ideal(dom, v.p) + "[x; sigma, delta]";
  } else if (std::holds_alternative<ContractionMinimal<E>>(v.kind)) {
    j["minimal_prime"] = "every prime P of R with P ∩ D = " + format_ideal(dom, v.p);
  } else if (const auto* nm = std::get_if<NotMinimal<E>>(&v.kind)) {
    j["witness"] = ideal_to_json(dom, nm->witness);
    j["witness_text"] = format_ideal(dom, nm->witness);
    j["witness_is_sigma_delta_prime"] = nm->witness_is_sigma_delta_prime;
  } else if (const auto* od = std::get_if<OutsideDichotomy>(&v.kind)) {
    j["reason"] = od->reason;
  } else if (const auto* u = std::get_if<Undecided>(&v.kind)) {
    j["undecided"] = {{"budget", u->budget}, {"stage", u->stage}};
  }
  return j;
}

}  // namespace ore
