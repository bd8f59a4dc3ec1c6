#pragma once

#include <variant>

#include <json.hpp>

#include "setq/adversary.hpp"
#include "setq/oracle.hpp"
#include "setq/quantum.hpp"
#include "setq/rational.hpp"
#include "setq/reduction.hpp"

namespace setq {

using Json = nlohmann::json;

// Instance file schema. Every key is always present; inapplicable slots are
// null: {"kind", "n", "m", "r", "promise", "a", "b", "f", "seed"}.
Json to_json(const SetEqualityInstance& inst);
Json to_json(const CollisionInstance& inst);

using AnyInstance = std::variant<SetEqualityInstance, CollisionInstance>;
AnyInstance instance_from_json(const Json& j);

Json to_json(const Relation& rel);
Relation relation_from_json(const Json& j);

// {"num": "...", "den": "..."} decimal strings, arbitrary precision.
Json to_json(const ExactProbability& p);

Json to_json(const MonteCarloEstimate& est);
Json to_json(const AdversaryParameters& params);
Json to_json(const RunResult& result);
Json to_json(const PromiseVerdict& verdict);

}  // namespace setq
