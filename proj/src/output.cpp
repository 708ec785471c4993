#include "partident/output.hpp"

#include <sstream>

#include <json.hpp>

namespace partident {

namespace {

// RFC 4180 quoting: only when the field needs it
std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos)
        return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string_view to_string(OutputRecord::Status status) {
    switch (status) {
    case OutputRecord::Status::pass:
        return "pass";
    case OutputRecord::Status::fail:
        return "fail";
    case OutputRecord::Status::not_applicable:
        return "n/a";
    }
    return "n/a";
}

std::string to_csv(const OutputRecord& record) {
    std::ostringstream out;
    out << "# schema_version=" << record.schema_version
        << "; command=" << record.command;
    for (const auto& [key, value] : record.parameters)
        out << "; " << key << "=" << value;
    out << "; status=" << to_string(record.status) << "\n";

    for (std::size_t i = 0; i < record.columns.size(); ++i)
        out << (i ? "," : "") << csv_field(record.columns[i]);
    out << "\n";
    for (const auto& row : record.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_field(row[i]);
        out << "\n";
    }
    return out.str();
}

std::string to_json(const OutputRecord& record) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = record.schema_version;
    doc["command"] = record.command;
    doc["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.parameters)
        doc["parameters"][key] = value;
    doc["columns"] = record.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : record.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size() && i < record.columns.size(); ++i)
            obj[record.columns[i]] = row[i];
        doc["rows"].push_back(std::move(obj));
    }
    doc["status"] = to_string(record.status);
    return doc.dump(2) + "\n";
}

std::vector<std::string> report_columns() {
    return {"identity", "range_lo", "range_hi", "status",
            "failure_n", "lhs",      "rhs",      "seed",
            "note"};
}

std::vector<std::string> report_row(const IdentityReport& report) {
    std::vector<std::string> row;
    row.emplace_back(to_string(report.identity));
    row.push_back(std::to_string(report.range_lo));
    row.push_back(std::to_string(report.range_hi));
    row.emplace_back(report.passed() ? "pass" : "fail");
    if (report.first_failure) {
        row.push_back(std::to_string(report.first_failure->n));
        row.push_back(report.first_failure->lhs.get_str());
        row.push_back(report.first_failure->rhs.get_str());
    } else {
        row.insert(row.end(), {"", "", ""});
    }
    row.push_back(report.seed ? std::to_string(*report.seed) : "");
    row.push_back(report.note);
    return row;
}

}  // namespace partident
