#pragma once

#include "hyperfv/exact.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperfv::cli {

/// One row (or one f-vector) of CLI output. Integer values are rendered as
/// exact decimal strings everywhere; JSON quotes them so consumers with
/// 64-bit integer limits survive.
struct OutputRecord {
    int n = 0;
    std::optional<int> k;   // absent in column-sum rows
    bool sum_over_k = false; // "sum" mode: the k column reads "sum"
    std::optional<int> j;   // absent when values spans j = 0..n
    bool half_open = true;
    std::string method = "formula"; // formula | series | oracle
    std::vector<Integer> values;
    std::optional<std::string> source; // "direct" for the j = 0 column sum

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// CSV with header exactly `n,k,j,half_open,f`, UTF-8, LF line endings.
/// Records without an explicit j expand to one row per entry.
std::string to_csv(const std::vector<OutputRecord>& records);

nlohmann::json to_json(const std::vector<OutputRecord>& records);
std::vector<OutputRecord> records_from_json(const nlohmann::json& j);

std::string to_markdown(const std::vector<OutputRecord>& records);

/// Plain rendering of one f-vector: "(6, 12, 8, 1)".
std::string to_plain(const OutputRecord& record);

} // namespace hyperfv::cli
