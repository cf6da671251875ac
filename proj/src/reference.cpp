#include "wfano/reference.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wfano {

namespace detail {
extern const char* kTableDim4;
extern const char* kTableDim5;
}  // namespace detail

ReferenceTable parse_reference(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    if (!doc.is_array()) throw std::invalid_argument("reference table: expected a JSON array");
    ReferenceTable table;
    std::set<std::pair<std::vector<i64>, std::vector<i64>>> seen;
    for (const auto& item : doc) {
        ReferenceRow row;
        row.no = item.at("no").get<int>();
        row.index = item.at("index").get<i64>();
        row.weights = item.at("weights").get<std::vector<i64>>();
        row.degrees = item.at("degrees").get<std::vector<i64>>();
        row.deg = item.at("deg").get<i64>();
        row.h0 = item.at("h0").get<i64>();
        for (const auto& [key, value] : item.at("hodge").items()) {
            parse_hodge_key(key);
            row.hodge[key] = value.get<i64>();
        }
        if (!seen.emplace(row.weights, row.degrees).second)
            throw std::invalid_argument("reference table: duplicate (weights, degrees) row");
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::pair<int, int> parse_hodge_key(const std::string& key) {
    int p = 0, q = 0;
    char h = 0, s1 = 0, s2 = 0;
    std::istringstream in(key);
    if (!(in >> h >> s1 >> p >> s2 >> q) || h != 'h' || s1 != '_' || s2 != '_' || p < 0 || q < 0)
        throw std::invalid_argument("reference table: bad hodge key '" + key + "'");
    return {p, q};
}

const ReferenceTable* builtin_reference(int dim, Mode mode) {
    if (mode != Mode::fano) return nullptr;
    static std::once_flag once;
    static ReferenceTable dim4, dim5;
    std::call_once(once, [] {
        dim4 = parse_reference(detail::kTableDim4);
        dim5 = parse_reference(detail::kTableDim5);
    });
    if (dim == 4) return &dim4;
    if (dim == 5) return &dim5;
    return nullptr;
}

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::optional<ReferenceTable> load_reference(int dim, Mode mode,
                                             const std::string& path_override) {
    if (!path_override.empty()) {
        auto text = read_file(path_override);
        if (!text)
            throw std::invalid_argument("cannot read reference table: " + path_override);
        return parse_reference(*text);
    }
    if (const char* dir = std::getenv("WFANO_REFERENCE_DIR")) {
        std::string name = (mode == Mode::fano ? "fano" : "calabi_yau");
        std::string path = std::string(dir) + "/" + name + "_dim" + std::to_string(dim) + ".json";
        if (auto text = read_file(path)) return parse_reference(*text);
    }
    if (const ReferenceTable* builtin = builtin_reference(dim, mode)) return *builtin;
    return std::nullopt;
}

}  // namespace wfano
