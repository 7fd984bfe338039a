#include "qe/json_io.hpp"

#include <limits>

#include "qe/error.hpp"
#include "qe/parse.hpp"
#include "tau_node.hpp"

namespace qe {

json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + j.dump());
    return z;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json to_json(const IntPoly& h) {
  json out = json::array();
  for (const auto& c : h.coeffs()) out.push_back(to_json(c));
  return out;
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array, got " + j.dump());
  std::vector<mpz_class> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPoly(std::move(coeffs));
}

json to_json(const RingElement& e) {
  return json{{"num", to_json(e.numerator())}, {"den", to_json(e.denominator())}};
}

RingElement element_from_json(const json& j) {
  if (j.is_string()) return parse_element(j.get<std::string>());
  if (j.is_number()) return RingElement(integer_from_json(j));
  if (!j.is_object() || !j.contains("num")) throw ParseError("element must be {\"num\":[...],\"den\":n}");
  const mpz_class den = j.contains("den") ? integer_from_json(j.at("den")) : mpz_class(1);
  if (den <= 0) throw ParseError("element denominator must be positive");
  return RingElement::normalize(poly_from_json(j.at("num")), den);
}

json to_json(const TauSpec& tau) {
  using namespace detail;
  const TauNode& node = tau.node();
  switch (tau.kind()) {
    case TauKind::constant:
      return json{{"kind", "constant"}, {"value", to_json(static_cast<const ConstantNode&>(node).value)}};
    case TauKind::zero:
      return json{{"kind", "zero"}};
    case TauKind::stream:
      return json{{"kind", "stream"}, {"seed", static_cast<const StreamNode&>(node).seed}};
    case TauKind::hensel: {
      const auto& n = static_cast<const HenselNode&>(node);
      return json{{"kind", "hensel"}, {"poly", to_json(n.poly)}, {"fallback", to_json(n.fallback)}};
    }
    case TauKind::log_generic:
      return json{{"kind", "log_generic"}, {"seed", static_cast<const LogGenericNode&>(node).seed}};
    case TauKind::piecewise: {
      const auto& n = static_cast<const PiecewiseNode&>(node);
      json overrides = json::object();
      for (const auto& [p, spec] : n.overrides) overrides[std::to_string(p)] = to_json(spec);
      return json{{"kind", "piecewise"}, {"overrides", overrides}, {"default", to_json(n.fallback)}};
    }
    case TauKind::zero_on:
      break;
  }
  throw PreconditionError("tau spec of kind " + to_string(tau.kind()) + " has no JSON form");
}

namespace {

std::uint64_t seed_from_json(const json& j) {
  if (!j.contains("seed")) throw ParseError("tau spec needs a \"seed\": " + j.dump());
  const mpz_class z = integer_from_json(j.at("seed"));
  if (z < 0 || !z.fits_ulong_p()) throw ParseError("seed must be a 64-bit unsigned integer");
  return z.get_ui();
}

}  // namespace

TauSpec tau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ParseError("tau spec must be an object with a string \"kind\": " + j.dump());
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    if (!j.contains("value")) throw ParseError("constant tau needs a \"value\"");
    return TauSpec::constant(integer_from_json(j.at("value")));
  }
  if (kind == "zero") return TauSpec::zero();
  if (kind == "stream") return TauSpec::stream(seed_from_json(j));
  if (kind == "log_generic") return TauSpec::log_generic(seed_from_json(j));
  if (kind == "hensel") {
    if (!j.contains("poly") || !j.contains("fallback")) throw ParseError("hensel tau needs \"poly\" and \"fallback\"");
    const IntPoly f = poly_from_json(j.at("poly"));
    if (f.degree() < 1) throw ParseError("hensel polynomial must have degree >= 1");
    return TauSpec::hensel(f, tau_from_json(j.at("fallback")));
  }
  if (kind == "piecewise") {
    if (!j.contains("default")) throw ParseError("piecewise tau needs a \"default\"");
    std::map<std::uint64_t, TauSpec> overrides;
    if (j.contains("overrides")) {
      if (!j.at("overrides").is_object()) throw ParseError("\"overrides\" must be an object keyed by prime");
      for (const auto& [key, value] : j.at("overrides").items()) {
        std::uint64_t p = 0;
        try {
          std::size_t used = 0;
          p = std::stoull(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          throw ParseError("override key \"" + key + "\" is not a number");
        }
        if (!is_prime(p)) throw ParseError("override key " + key + " is not prime");
        overrides.emplace(p, tau_from_json(value));
      }
    }
    return TauSpec::piecewise(std::move(overrides), tau_from_json(j.at("default")));
  }
  throw ParseError("unknown tau kind \"" + kind + "\"");
}

json to_json(const NormTuple& t) {
  json out = json::array();
  for (const auto& c : t.components()) out.push_back(to_json(c));
  return out;
}

json to_json(const DivisionChain& c) {
  json q = json::array();
  json r = json::array();
  for (const auto& e : c.quotients) q.push_back(to_json(e));
  for (const auto& e : c.remainders) r.push_back(to_json(e));
  return json{{"a", to_json(c.a)}, {"b", to_json(c.b)}, {"quotients", q}, {"remainders", r}};
}

json to_json(const QeTrace& t) {
  json out = to_json(t.chain);
  json norms = json::array();
  for (const auto& n : t.norms) norms.push_back(to_json(n));
  out["phi"] = norms;
  return out;
}

namespace {

json to_json(const BoundCheck& b) {
  return json{{"l", b.index}, {"abs_remainder", to_json(b.remainder)}, {"bound", to_json(b.bound)},
              {"satisfied", b.satisfied}};
}

}  // namespace

json to_json(const ChainComparison& c) {
  json rows = json::array();
  for (const auto& b : c.remainder_bounds) rows.push_back(to_json(b));
  json out{{"qe", to_json(c.qe)}, {"remainder_bounds", rows}};
  out["positive_quotient"] = c.positive_quotient ? to_json(*c.positive_quotient) : json(nullptr);
  out["verdict"] = c.verdict;
  return out;
}

json to_json(const AdversaryReport& r) {
  json hats = json::array();
  for (const auto& h : r.hats) hats.push_back(h.get_str());
  return json{{"k", r.k},
              {"b", to_json(r.b)},
              {"c", to_json(r.c)},
              {"d", to_json(r.d)},
              {"beta", to_json(r.beta)},
              {"a", to_json(r.a)},
              {"degrees", r.degrees},
              {"hats", hats},
              {"projection_valid", r.projection_valid},
              {"verdict", r.verdict}};
}

json to_json(const ShScan& s) {
  json hits = json::array();
  for (const auto& h : s.hits)
    hits.push_back(json{{"p", h.prime}, {"depth", h.depth}, {"saturated", h.saturated}, {"certified_root", h.certified_root}});
  return json{{"h", to_json(s.h)}, {"pmax", s.p_max}, {"kmax", s.k_max}, {"hits", hits}};
}

json to_json(const NonUfdWitness& w) {
  json chain = json::array();
  for (const auto& e : w.chain) chain.push_back(to_json(e));
  return json{{"h", to_json(w.h)}, {"primes", w.primes}, {"chain", chain}};
}

}  // namespace qe
