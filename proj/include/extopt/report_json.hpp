#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "extopt/model.hpp"
#include "extopt/oracle.hpp"
#include "extopt/types.hpp"

namespace extopt {

inline constexpr std::string_view kSchemaVersion = "extopt/1";
std::string_view tool_version();

// Instance as typed by the user, before validation.
struct InstanceSpec {
  int n = 0;
  Rational x;
  Rational w;
  std::optional<QueueParams> queue;
};

nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const ServiceVector& v);
nlohmann::json to_json(const InstanceSpec& spec);
nlohmann::json to_json(const DeltaCertificate& cert);
nlohmann::json to_json(const TauPair& tau);
nlohmann::json to_json(const DuoSolution& duo);
nlohmann::json to_json(const SolveReport& report);
nlohmann::json to_json(const VerifyReport& report);

// {"schema", "versions", "command", "instance", "status", "result"}.
nlohmann::json make_envelope(std::string_view command, const InstanceSpec& spec,
                             std::string_view status, nlohmann::json result);
nlohmann::json make_envelope(std::string_view command, nlohmann::json instance,
                             std::string_view status, nlohmann::json result);

// Reads the instance block of an envelope back.
InstanceSpec instance_spec_from_json(const nlohmann::json& j);

}  // namespace extopt
