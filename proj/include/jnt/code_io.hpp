#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jnt/codes.hpp"
#include "jnt/johnson.hpp"

namespace jnt {

using Json = nlohmann::ordered_json;

// {"v":..,"k":..,"name":..,"params":{..},"codewords":[[..],..]} with each
// codeword ascending and codewords in lexicographic order of index lists.
Json code_to_json(const Code& code);
// Compact dump followed by a newline.
std::string code_to_string(const Code& code);

// Validates sizes, ranges, sortedness and duplicates. Errors are DomainError
// messages naming the offending field, e.g. "codewords[3][1]".
Code code_from_json(const Json& j);
Code code_from_string(const std::string& text);
Code read_code_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json report_to_json(const PropertyReport& report);
// Multi-line summary for terminals.
std::string report_summary(const PropertyReport& report);

}  // namespace jnt
