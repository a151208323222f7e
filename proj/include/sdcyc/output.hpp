#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdcyc/counting.hpp"

namespace sdcyc::cli {

/// One machine-readable count, as emitted by the count and table commands.
/// `value` is the exact decimal expansion of base^exponent; it may be empty
/// when the caller suppressed the expansion.
struct OutputRecord {
    unsigned long nu = 1;
    std::string odd_part;
    unsigned long l = 1;
    std::string kind;
    unsigned long exponent = 0;
    unsigned long base = 3;
    std::string value;
    std::string method;

    bool operator==(const OutputRecord&) const = default;
};

OutputRecord make_record(const counting::LengthSpec& spec, unsigned long l,
                         const counting::CountResult& count);

nlohmann::json record_json(const OutputRecord& record, bool include_value = true);
OutputRecord record_from_json(const nlohmann::json& j);

std::string csv_header();
std::string csv_row(const OutputRecord& record);

/// Entry point used by the command-line binary and the in-process tests.
/// `args` excludes the program name. Exit codes: 0 success, 1 verification
/// or resource failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdcyc::cli
