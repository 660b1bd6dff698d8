#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "salab/gin.hpp"
#include "salab/groebner.hpp"
#include "salab/resolution.hpp"
#include "salab/strength.hpp"
#include "salab/structure.hpp"

namespace salab {

using Json = nlohmann::json;

inline constexpr const char* kEngineVersion = "salab 0.1.0";

Json to_json(const Coeff& c);
Json to_json(const Monomial& m);
/// Term array in grevlex-descending order: [{"coeff": "p/q", "exp": [...]}, ...].
Json to_json(const Polynomial& f);
Json to_json(const Ideal& ideal);
Json to_json(const Nu& nu);
Json to_json(const HilbertFunctionTable& hf);
Json to_json(const BettiTable& betti);
Json to_json(const GradedMatrix& m);
Json to_json(const SubalgebraPresentation& sp);
Json to_json(const GinResult& gin, const Ring& ring);

/// Envelope shared by every command. Keys are emitted sorted.
Json make_report(const std::string& command, Json inputs, Json results, std::optional<std::uint64_t> seed = {});

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace salab
