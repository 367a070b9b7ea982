#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "srkg/model.hpp"

namespace srkg {

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

/// Strict full-string parse; throws std::invalid_argument on junk.
double parse_double(std::string_view text);

const char* to_string(CouplingMode mode);

/// Parse line-oriented `key = value` text. Keys are the PhysicalConfig
/// field names plus `mode = linear|cornell`; `#` starts a comment; CRLF is
/// tolerated. Missing keys keep their defaults. Errors carry `name:line:`.
PhysicalConfig parse_config(std::istream& in,
                            const std::string& name = "<config>");

PhysicalConfig parse_config_text(const std::string& text,
                                 const std::string& name = "<config>");

PhysicalConfig load_config(const std::string& path);

/// Apply one `key=value` override.
void apply_override(PhysicalConfig& cfg, std::string_view assignment);

/// Canonical `key = value` rendering; parses back to the identical config.
std::string render_config(const PhysicalConfig& cfg);

}  // namespace srkg
