#include "wfano/render.hpp"

#include <sstream>

#include <json.hpp>

namespace wfano {

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "md" || name == "markdown") return OutputFormat::markdown;
    throw std::invalid_argument("unknown output format: " + name);
}

namespace {

std::string hodge_key(int p, int q) {
    return "h_" + std::to_string(p) + "_" + std::to_string(q);
}

i64 integral_degree(const FamilyRecord& rec) {
    if (!rec.degree.is_integer())
        throw std::runtime_error("render: anticanonical degree is not an integer");
    return rec.degree.num();
}

std::string join(const std::vector<i64>& values, const char* sep) {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        out << values[i];
    }
    return out.str();
}

std::string render_json(const std::vector<FamilyRecord>& records, int dim) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json row;
        if (rec.reference_no)
            row["no"] = *rec.reference_no;
        else
            row["no"] = nullptr;
        row["index"] = rec.index;
        row["weights"] = rec.candidate.space.weights;
        row["degrees"] = rec.candidate.multidegree.degrees;
        row["deg"] = integral_degree(rec);
        row["h0"] = rec.h0;
        nlohmann::ordered_json hodge;
        for (int p = dim; p >= 0; --p)
            hodge[hodge_key(p, dim - p)] = rec.hodge_middle[static_cast<size_t>(dim - p)];
        row["hodge"] = std::move(hodge);
        row["status"] = rec.confirmed ? "confirmed" : "unconfirmed";
        doc.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<FamilyRecord>& records, int dim) {
    std::ostringstream out;
    out << "no,index,weights,degrees,deg,h0";
    for (int p = dim; p >= 0; --p) out << "," << hodge_key(p, dim - p);
    out << ",status\n";
    for (const auto& rec : records) {
        if (rec.reference_no) out << *rec.reference_no;
        out << "," << rec.index;
        out << "," << join(rec.candidate.space.weights, " ");
        out << "," << join(rec.candidate.multidegree.degrees, " ");
        out << "," << integral_degree(rec) << "," << rec.h0;
        for (int p = dim; p >= 0; --p)
            out << "," << rec.hodge_middle[static_cast<size_t>(dim - p)];
        out << "," << (rec.confirmed ? "confirmed" : "unconfirmed") << "\n";
    }
    return out.str();
}

std::string render_markdown(const std::vector<FamilyRecord>& records, int dim) {
    std::ostringstream out;
    out << "| No. | I | P | Degrees | (-K)^" << dim << " | h^0(-K) |";
    for (int p = dim; p >= 0; --p) out << " h^{" << p << "," << dim - p << "} |";
    out << " status |\n";
    int columns = 7 + dim + 1;
    out << "|";
    for (int i = 0; i < columns; ++i) out << "---|";
    out << "\n";
    bool first = true;
    i64 group_index = 0;
    for (const auto& rec : records) {
        if (!first && rec.index != group_index) {
            // horizontal rule between index groups, matching the table layout
            out << "|";
            for (int i = 0; i < columns; ++i) out << " |";
            out << "\n";
        }
        first = false;
        group_index = rec.index;
        out << "| " << (rec.reference_no ? std::to_string(*rec.reference_no) : "-") << " | "
            << rec.index << " | " << weight_notation(rec.candidate.space.weights) << " | "
            << join(rec.candidate.multidegree.degrees, ",") << " | " << integral_degree(rec)
            << " | " << rec.h0 << " |";
        for (int p = dim; p >= 0; --p)
            out << " " << rec.hodge_middle[static_cast<size_t>(dim - p)] << " |";
        out << " " << (rec.confirmed ? "confirmed" : "unconfirmed") << " |\n";
    }
    return out.str();
}

}  // namespace

std::string render_records(const std::vector<FamilyRecord>& records, int dim,
                           OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return render_json(records, dim);
        case OutputFormat::csv: return render_csv(records, dim);
        case OutputFormat::markdown: return render_markdown(records, dim);
    }
    throw std::logic_error("unreachable");
}

std::vector<FamilyRecord> parse_records(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    std::vector<FamilyRecord> records;
    for (const auto& item : doc) {
        FamilyRecord rec;
        rec.candidate = normalize(item.at("weights").get<std::vector<i64>>(),
                                  item.at("degrees").get<std::vector<i64>>());
        rec.index = item.at("index").get<i64>();
        rec.degree = Rational(item.at("deg").get<i64>());
        rec.h0 = item.at("h0").get<i64>();
        int dim = rec.candidate.dim();
        rec.hodge_middle.assign(static_cast<size_t>(dim) + 1, 0);
        for (const auto& [key, value] : item.at("hodge").items()) {
            auto [p, q] = parse_hodge_key(key);
            if (p + q != dim) throw std::invalid_argument("parse_records: bad hodge key " + key);
            rec.hodge_middle[static_cast<size_t>(q)] = value.get<i64>();
        }
        rec.confirmed = item.at("status").get<std::string>() == "confirmed";
        if (!item.at("no").is_null()) rec.reference_no = item.at("no").get<int>();
        records.push_back(std::move(rec));
    }
    return records;
}

std::string weight_notation(const std::vector<i64>& weights) {
    std::ostringstream out;
    out << "P(";
    for (size_t i = 0; i < weights.size();) {
        size_t j = i;
        while (j < weights.size() && weights[j] == weights[i]) ++j;
        if (i) out << ",";
        out << weights[i];
        if (j - i > 1) out << "^" << (j - i);
        i = j;
    }
    out << ")";
    return out.str();
}

}  // namespace wfano
