#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "penney/bigint.hpp"

namespace penney::cli {

/// Integers beyond 2^53 become decimal strings so JSON consumers with
/// double-precision numbers cannot corrupt them.
nlohmann::json json_integer(const BigInt& value);

std::string csv_field(std::string_view field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

std::string join(const std::vector<std::string>& parts, std::string_view separator);

}  // namespace penney::cli
