#pragma once

// JSON interchange. Rationals travel as {"num": "<int>", "den": "<int>"}
// with decimal strings so that no coefficient ever overflows a JSON number.

#include "dilog/certify.hpp"
#include "dilog/corpus.hpp"
#include "dilog/ladder.hpp"
#include "dilog/relation.hpp"

#include <json.hpp>

namespace dilog {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
/// Throws Error(Parse) naming `where` (a JSON pointer) on malformed input.
Rational rational_from_json(const Json& j, const std::string& where);

Json to_json(const AlgebraicNumber& a);
Json to_json(const Ladder& ladder);
/// Inverse of to_json(Ladder). Validates the isolating interval exactly and
/// rejects zero coefficients; errors carry the offending JSON pointer.
Ladder ladder_from_json(const Json& j);

Json to_json(const CorpusEntry& entry);
Json to_json(const CertReport& report);
Json to_json(const RelationResult& relation);

}  // namespace dilog
