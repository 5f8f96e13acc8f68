#pragma once

// JSON forms of configurations, traces and scattering results.

#include "kkr/bijection.hpp"
#include "kkr/rigged_config.hpp"
#include "kkr/scattering_data.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace kkr {

using json = nlohmann::json;

/// {"n": 3, "quantum": [1,1,2,1], "layers": [{"rows": [[2,0],[1,0]]}, ...]}
json to_json(const RiggedConfiguration& rc);
/// Throws ParseError on schema violations. Validity is not checked here.
RiggedConfiguration rc_from_json(const json& j);
/// Parses text; syntax errors carry the byte offset.
RiggedConfiguration parse_rc(std::string_view text);
/// Reads a file, or stdin when `path` is "-".
RiggedConfiguration read_rc(const std::string& path);

json to_json(const KkrTrace& trace);
json to_json(const KkrScattering& s);

} // namespace kkr
