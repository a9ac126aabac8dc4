#pragma once

// JSON descriptors exchanged with the command-line tool.
//
//   complex     {"re": x, "im": y}
//   L-system    {"T": [[complex, ...], ...], "K": [complex, ...], "J": 1}
//   elementary  {"lambda0": complex}            ("skew": true selects the skew-adjoint)
//   coupling    {"factors": [system, system]}
//   Foster      {"a0": x, "stages": [{"a": x, "b": y}, ...]}
//
// Any object with a "system" member holding a descriptor (such as the report
// printed by `lsys elementary`) is accepted wherever a system is expected.

#include <optional>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "lsys/circuit.hpp"
#include "lsys/lsystem.hpp"
#include "lsys/num.hpp"

namespace lsys {

using Json = nlohmann::json;

/// Throws InputError on malformed text.
Json parse_json(std::string_view text);

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const LSystem& sys);
LSystem lsystem_from_json(const Json& j);

Json to_json(const RationalFunction& r);

Json to_json(const FosterSpec& spec);
FosterSpec foster_from_json(const Json& j);

struct SystemDescriptor {
  LSystem system;
  std::optional<Complex> lambda0;  // set for elementary and skew-adjoint descriptors
  bool skew = false;
};

SystemDescriptor system_from_descriptor(const Json& j);

std::pair<SystemDescriptor, SystemDescriptor> coupling_from_descriptor(const Json& j);

}  // namespace lsys
