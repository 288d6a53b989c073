#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace localdeg {

/// Parses a comma-separated file. Quoted fields may contain commas,
/// doubled quotes, and newlines. Returns all rows, header included.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Shortest decimal form that round-trips the double ("%.17g" fallback).
/// Used for every numeric CSV cell so that reruns are byte-identical.
std::string format_double(double v);

} // namespace localdeg
