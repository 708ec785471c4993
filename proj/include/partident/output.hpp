#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partident/report.hpp"

namespace partident {

// One serializable result table.  Every numeric value is carried as a
// decimal string so arbitrary-precision counts survive any consumer.
struct OutputRecord {
    enum class Status { pass, fail, not_applicable };

    std::string schema_version = "1";
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;  // ordered
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // aligned with columns
    Status status = Status::not_applicable;
};

std::string_view to_string(OutputRecord::Status status);

// Header row naming the columns, one data row per record entry, LF line
// endings.  A single leading '#' comment line carries schema version,
// command and status.
std::string to_csv(const OutputRecord& record);

// Single JSON object; rows are objects keyed by column name.
std::string to_json(const OutputRecord& record);

// Report -> row values in the fixed column order given by report_columns().
std::vector<std::string> report_row(const IdentityReport& report);
std::vector<std::string> report_columns();

}  // namespace partident
