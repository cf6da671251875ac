#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wfano/core.hpp"

namespace wfano {

/// One transcribed classification-table row. The hodge map carries exactly
/// the columns the table prints, keyed "h_p_q" with p + q = dim.
struct ReferenceRow {
    int no = 0;
    i64 index = 0;
    std::vector<i64> weights;
    std::vector<i64> degrees;
    i64 deg = 0;
    i64 h0 = 0;
    std::map<std::string, i64> hodge;
};

struct ReferenceTable {
    std::vector<ReferenceRow> rows;
};

/// Parses the JSON array schema
///   [{"no":..,"index":..,"weights":[..],"degrees":[..],"deg":..,"h0":..,
///     "hodge":{"h_p_q":..}} ...]
/// and checks that rows are pairwise distinct as (weights, degrees) pairs.
ReferenceTable parse_reference(const std::string& json_text);

/// Decodes an "h_p_q" key. Throws on malformed keys.
std::pair<int, int> parse_hodge_key(const std::string& key);

/// The tables compiled into the binary (dims 4 and 5, fano); nullptr when
/// there is no builtin table for the request.
const ReferenceTable* builtin_reference(int dim, Mode mode);

/// Resolution order: explicit file path, then $WFANO_REFERENCE_DIR/
/// fano_dim<D>.json, then the builtin table. Returns nullopt when nothing
/// applies (e.g. dim 3).
std::optional<ReferenceTable> load_reference(int dim, Mode mode,
                                             const std::string& path_override = "");

}  // namespace wfano
