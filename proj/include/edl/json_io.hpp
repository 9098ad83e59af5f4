#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace edl {

using Json = nlohmann::json;

/// Pretty JSON with sorted object keys, doubles at 17 significant digits and non-finite
/// doubles written as the strings "inf", "-inf", "nan". Ends with a newline.
std::string dump_json(const Json& j);

/// Inverse of the string encoding used by dump_json for non-finite doubles.
double json_number(const Json& j);

std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames, so readers never see a partial file.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace edl
