#pragma once

#include <json.hpp>

#include <string>

#include "packlab/cover.hpp"

namespace packlab {

nlohmann::json cover_to_json(const Cover& c);
Cover cover_from_json(const nlohmann::json& j);

std::string cover_to_json_string(const Cover& c);
Cover cover_from_json_string(const std::string& s);

Cover read_cover_file(const std::string& path);
void write_cover_file(const std::string& path, const Cover& c);

}  // namespace packlab
