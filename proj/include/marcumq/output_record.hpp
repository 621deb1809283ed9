// SPDX-License-Identifier: Apache-2.0
#ifndef MARCUMQ_OUTPUT_RECORD_HPP
#define MARCUMQ_OUTPUT_RECORD_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "marcumq/types.hpp"

namespace marcumq {

// One evaluation result as emitted by the CLI: the EvalReport fields
// plus the arguments and wall time. Serializes to CSV and JSON with
// identical field names; doubles round-trip exactly.
struct OutputRecord {
    double nu = 0.0;
    double a = 0.0;
    double b = 0.0;
    Method method = Method::laguerre;
    double value = 0.0;
    std::int64_t terms_used = 0;
    double error_bound = 0.0;
    std::int64_t elapsed_ns = 0;
};

OutputRecord make_record(const MarcumArgs& args, const EvalReport& report,
                         std::int64_t elapsed_ns);

std::string csv_header();
std::string to_csv(const OutputRecord& rec);
OutputRecord from_csv(std::string_view line);

nlohmann::json to_json(const OutputRecord& rec);
OutputRecord from_json(const nlohmann::json& j);

bool operator==(const OutputRecord& lhs, const OutputRecord& rhs);

}  // namespace marcumq

#endif
