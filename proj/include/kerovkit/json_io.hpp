#pragma once

// JSON views of the library types. Rationals are strings, keys are sorted,
// and every document carries "schema": "kerovkit/1".

#include "kerovkit/group_oracle.hpp"
#include "kerovkit/kerov.hpp"
#include "kerovkit/simplifier.hpp"

#include <json.hpp>

namespace kerovkit {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "kerovkit/1";

Json to_json(const Rational& r);
Json to_json(const SigmaSymbol& s);
Json to_json(const SigmaCombo& c);
Json to_json(const FormalSum& f);
Json to_json(const RPolynomial& p);
Json to_json(const PairPartition& p);
Json to_json(const AtomicMeasure& mu);
Json to_json(const Census& c);
Json to_json(const WindingCycles& cycles);

/// {"schema": ..., "command": command, "result": result}
Json envelope(const std::string& command, Json result);

}  // namespace kerovkit
