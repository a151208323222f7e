#include "sdcyc/output.hpp"

#include <stdexcept>

#include "sdcyc/errors.hpp"

namespace sdcyc::cli {

OutputRecord make_record(const counting::LengthSpec& spec, unsigned long l,
                         const counting::CountResult& count) {
    OutputRecord rec;
    rec.nu = spec.nu;
    rec.odd_part = spec.odd_part.value().get_str();
    rec.l = l;
    rec.kind = counting::to_string(count.kind);
    if (!count.exponent.fits_ulong_p()) {
        throw resource_limit_error("exponent " + count.exponent.get_str() +
                                   " does not fit an output record; use the t/tau commands");
    }
    rec.exponent = count.exponent.get_ui();
    if (!count.base.fits_ulong_p()) {
        throw resource_limit_error("base " + count.base.get_str() +
                                   " does not fit an output record");
    }
    rec.base = count.base.get_ui();
    rec.value = count.value.get_str();
    rec.method = counting::to_string(count.method);
    return rec;
}

nlohmann::json record_json(const OutputRecord& record, bool include_value) {
    nlohmann::json j{{"nu", record.nu},       {"odd_part", record.odd_part},
                     {"l", record.l},         {"kind", record.kind},
                     {"exponent", record.exponent}, {"base", record.base},
                     {"method", record.method}};
    if (include_value) j["value"] = record.value;
    return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord rec;
    rec.nu = j.at("nu").get<unsigned long>();
    rec.odd_part = j.at("odd_part").get<std::string>();
    rec.l = j.at("l").get<unsigned long>();
    rec.kind = j.at("kind").get<std::string>();
    rec.exponent = j.at("exponent").get<unsigned long>();
    rec.base = j.at("base").get<unsigned long>();
    if (j.contains("value")) rec.value = j.at("value").get<std::string>();
    rec.method = j.at("method").get<std::string>();
    return rec;
}

std::string csv_header() { return "nu,odd_part,l,kind,exponent,base,value,method"; }

std::string csv_row(const OutputRecord& record) {
    return std::to_string(record.nu) + "," + record.odd_part + "," + std::to_string(record.l) +
           "," + record.kind + "," + std::to_string(record.exponent) + "," +
           std::to_string(record.base) + "," + record.value + "," + record.method;
}

}  // namespace sdcyc::cli
