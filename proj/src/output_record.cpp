// SPDX-License-Identifier: Apache-2.0
#include "marcumq/output_record.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "marcumq/errors.hpp"

namespace marcumq {

namespace {

// %.17g round-trips every double exactly.
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

double parse_double(std::string_view s) {
    const std::string tmp(s);
    char* end = nullptr;
    const double v = std::strtod(tmp.c_str(), &end);
    if (end == tmp.c_str()) throw DomainError("OutputRecord: bad numeric field '" + tmp + "'");
    return v;
}

std::int64_t parse_int(std::string_view s) {
    const std::string tmp(s);
    char* end = nullptr;
    const long long v = std::strtoll(tmp.c_str(), &end, 10);
    if (end == tmp.c_str()) throw DomainError("OutputRecord: bad integer field '" + tmp + "'");
    return v;
}

}  // namespace

OutputRecord make_record(const MarcumArgs& args, const EvalReport& report,
                         std::int64_t elapsed_ns) {
    return {args.nu,      args.a,           args.b,           report.method,
            report.value, report.terms_used, report.error_bound, elapsed_ns};
}

std::string csv_header() { return "nu,a,b,method,value,terms_used,error_bound,elapsed_ns"; }

std::string to_csv(const OutputRecord& rec) {
    std::string out;
    out += fmt_double(rec.nu);
    out += ',';
    out += fmt_double(rec.a);
    out += ',';
    out += fmt_double(rec.b);
    out += ',';
    out += method_name(rec.method);
    out += ',';
    out += fmt_double(rec.value);
    out += ',';
    out += std::to_string(rec.terms_used);
    out += ',';
    out += fmt_double(rec.error_bound);
    out += ',';
    out += std::to_string(rec.elapsed_ns);
    return out;
}

OutputRecord from_csv(std::string_view line) {
    const auto fields = split_csv(line);
    if (fields.size() != 8) {
        throw DomainError("OutputRecord: expected 8 CSV fields, got " +
                          std::to_string(fields.size()));
    }
    const auto method = method_from_name(fields[3]);
    if (!method) throw DomainError("OutputRecord: unknown method '" + std::string(fields[3]) + "'");
    OutputRecord rec;
    rec.nu = parse_double(fields[0]);
    rec.a = parse_double(fields[1]);
    rec.b = parse_double(fields[2]);
    rec.method = *method;
    rec.value = parse_double(fields[4]);
    rec.terms_used = parse_int(fields[5]);
    rec.error_bound = parse_double(fields[6]);
    rec.elapsed_ns = parse_int(fields[7]);
    return rec;
}

nlohmann::json to_json(const OutputRecord& rec) {
    return nlohmann::json{{"nu", rec.nu},
                          {"a", rec.a},
                          {"b", rec.b},
                          {"method", method_name(rec.method)},
                          {"value", rec.value},
                          {"terms_used", rec.terms_used},
                          {"error_bound", rec.error_bound},
                          {"elapsed_ns", rec.elapsed_ns}};
}

OutputRecord from_json(const nlohmann::json& j) {
    const auto method = method_from_name(j.at("method").get<std::string>());
    if (!method) throw DomainError("OutputRecord: unknown method in JSON");
    OutputRecord rec;
    rec.nu = j.at("nu").get<double>();
    rec.a = j.at("a").get<double>();
    rec.b = j.at("b").get<double>();
    rec.method = *method;
    rec.value = j.at("value").get<double>();
    rec.terms_used = j.at("terms_used").get<std::int64_t>();
    rec.error_bound = j.at("error_bound").get<double>();
    rec.elapsed_ns = j.at("elapsed_ns").get<std::int64_t>();
    return rec;
}

bool operator==(const OutputRecord& lhs, const OutputRecord& rhs) {
    return lhs.nu == rhs.nu && lhs.a == rhs.a && lhs.b == rhs.b && lhs.method == rhs.method &&
           lhs.value == rhs.value && lhs.terms_used == rhs.terms_used &&
           lhs.error_bound == rhs.error_bound && lhs.elapsed_ns == rhs.elapsed_ns;
}

}  // namespace marcumq
