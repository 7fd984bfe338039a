#pragma once

#include <json.hpp>

#include "qe/adversary.hpp"
#include "qe/chains.hpp"
#include "qe/classify.hpp"
#include "qe/rtau.hpp"
#include "qe/tau.hpp"

namespace qe {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as
/// decimal strings; both forms are accepted on input.
json to_json(const mpz_class& z);
mpz_class integer_from_json(const json& j);

/// {"num":[c0,c1,...],"den":n}
json to_json(const RingElement& e);
RingElement element_from_json(const json& j);

/// Little-endian coefficient list.
json to_json(const IntPoly& h);
IntPoly poly_from_json(const json& j);

/// {"kind":"constant","value":7} | {"kind":"zero"} | {"kind":"stream","seed":N}
/// | {"kind":"hensel","poly":[...],"fallback":{...}} | {"kind":"log_generic","seed":N}
/// | {"kind":"piecewise","overrides":{"2":{...}},"default":{...}}
/// zero_on specs built from a predicate cannot be serialized.
json to_json(const TauSpec& tau);
TauSpec tau_from_json(const json& j);

json to_json(const NormTuple& t);
/// {"a":..,"b":..,"quotients":[..],"remainders":[..]}, plus "phi" when
/// norms are given.
json to_json(const DivisionChain& c);
json to_json(const QeTrace& t);
json to_json(const ChainComparison& c);
json to_json(const AdversaryReport& r);
json to_json(const ShScan& s);
json to_json(const NonUfdWitness& w);

}  // namespace qe
