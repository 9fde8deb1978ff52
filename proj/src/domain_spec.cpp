#include "ore/any_domain.hpp"

#include <string>

namespace ore {

namespace {

std::string scalar_text(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw DomainError(std::string(what) + " must be a string or an integer");
}

const Json& field_of(const Json& spec, const char* key) {
  if (!spec.contains(key)) throw DomainError(std::string("domain spec is missing '") + key + "'");
  return spec.at(key);
}

template <class Field>
AffinePolyDomain<Field> build_affine(const Field& field, const Json& spec) {
  const AffinePolyDomain<Field> probe(field, field.one(), field.zero(), UPoly<Field>(field));
  const Json& sigma = field_of(spec, "sigma");
  if (!sigma.is_object()) throw DomainError("sigma must be an object {\"a\": ..., \"b\": ...}");
  const auto a = field.parse(scalar_text(field_of(sigma, "a"), "sigma.a"));
  const auto b = field.parse(scalar_text(field_of(sigma, "b"), "sigma.b"));
  const auto h = spec.contains("delta") ? probe.parse(scalar_text(spec.at("delta"), "delta")) : probe.zero();
  return AffinePolyDomain<Field>(field, a, b, h);
}

}  // namespace

AnyDomain build_domain(const Json& spec) {
  try {
    if (!spec.is_object()) throw DomainError("domain spec must be an object");
    const auto kind = scalar_text(field_of(spec, "kind"), "kind");
    if (kind == "GaussianIntegers") {
      const auto sigma = scalar_text(field_of(spec, "sigma"), "sigma");
      GaussianDomain::Sigma s;
      if (sigma == "identity") {
        s = GaussianDomain::Sigma::Identity;
      } else if (sigma == "conjugation") {
        s = GaussianDomain::Sigma::Conjugation;
      } else {
        throw DomainError("Gaussian sigma must be 'identity' or 'conjugation', got '" + sigma + "'");
      }
      const GaussInt d = spec.contains("delta") ? gauss::parse(scalar_text(spec.at("delta"), "delta")) : GaussInt();
      return GaussianDomain(s, d);
    }
    if (kind == "PolyOverFiniteField") {
      const Json& m = field_of(spec, "modulus");
      if (!m.is_number_integer() || m.get<std::int64_t>() <= 0) throw DomainError("modulus must be a positive integer");
      return build_affine(PrimeField(m.get<std::uint64_t>()), spec);
    }
    if (kind == "PolyOverRationals") return build_affine(RationalField(), spec);
    throw DomainError("unknown domain kind '" + kind + "'");
  } catch (const DomainError&) {
    throw;
  } catch (const Error& e) {
    throw DomainError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(e.what());
  }
}

Json describe(const AnyDomain& dom) {
  return std::visit(
      [](const auto& d) -> Json {
        using D = std::decay_t<decltype(d)>;
        Json j;
        j["kind"] = to_string(D::kind);
        if constexpr (std::same_as<D, GaussianDomain>) {
          j["sigma"] = d.sigma_is_identity() ? "identity" : "conjugation";
          j["delta"] = d.format(d.delta_of_i());
        } else {
          if constexpr (std::same_as<D, FpPolyDomain>) j["modulus"] = d.field().modulus();
          j["sigma"] = {{"a", d.field().format(d.sigma_a())}, {"b", d.field().format(d.sigma_b())}};
          j["delta"] = d.format(d.h());
        }
        return j;
      },
      dom);
}

}  // namespace ore
