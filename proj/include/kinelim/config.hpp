#pragma once

#include <string>

#include <json.hpp>

namespace kinelim {

using json = nlohmann::json;

// Parses the TOML subset used by the shipped configs: [tables] and
// [dotted.tables], key = value with "basic" or 'literal' strings, integers, floats, booleans and
// single-line arrays of those, and # comments. Throws ConfigError.
json parse_toml(const std::string& text, const std::string& origin = "<string>");
json load_toml_file(const std::string& path);

// Typed lookup of a dotted key ("velocity.n_v"). Missing keys return the
// default; a present key of the wrong type is a ConfigError.
double cfg_double(const json& cfg, const std::string& key, double def);
int cfg_int(const json& cfg, const std::string& key, int def);
bool cfg_bool(const json& cfg, const std::string& key, bool def);
std::string cfg_string(const json& cfg, const std::string& key, const std::string& def);
bool cfg_has(const json& cfg, const std::string& key);
const json* cfg_find(const json& cfg, const std::string& key);

}  // namespace kinelim
