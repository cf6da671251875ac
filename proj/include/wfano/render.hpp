#pragma once

#include <string>

#include "wfano/enumerate.hpp"

namespace wfano {

enum class OutputFormat { json, csv, markdown };

OutputFormat parse_format(const std::string& name);

/// All three formats carry the same data for the same records.
std::string render_records(const std::vector<FamilyRecord>& records, int dim,
                           OutputFormat format);

/// Inverse of the JSON rendering.
std::vector<FamilyRecord> parse_records(const std::string& json_text);

/// Compressed exponent notation for a weight list, e.g. P(1^3,2^2,3^2).
std::string weight_notation(const std::vector<i64>& weights);

}  // namespace wfano
