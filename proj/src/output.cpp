#include "hyperfv/output.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace hyperfv::cli {

namespace {

std::string k_cell(const OutputRecord& r) {
    if (r.sum_over_k) return "sum";
    if (r.k) return std::to_string(*r.k);
    return "";
}

// Expands a record into (j, value) rows.
template <typename RowFn>
void for_each_row(const OutputRecord& r, RowFn&& fn) {
    if (r.j) {
        for (std::size_t i = 0; i < r.values.size(); ++i) {
            fn(*r.j + static_cast<int>(i), r.values[i]);
        }
    } else {
        for (std::size_t i = 0; i < r.values.size(); ++i) {
            fn(static_cast<int>(i), r.values[i]);
        }
    }
}

} // namespace

std::string to_csv(const std::vector<OutputRecord>& records) {
    std::ostringstream os;
    os << "n,k,j,half_open,f\n";
    for (const auto& r : records) {
        for_each_row(r, [&](int j, const Integer& v) {
            os << r.n << ',' << k_cell(r) << ',' << j << ',' << (r.half_open ? "true" : "false")
               << ',' << v.str() << '\n';
        });
    }
    return os.str();
}

nlohmann::json to_json(const std::vector<OutputRecord>& records) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json obj;
        obj["n"] = r.n;
        if (r.sum_over_k) obj["k"] = "sum";
        else if (r.k) obj["k"] = *r.k;
        if (r.j) obj["j"] = *r.j;
        obj["half_open"] = r.half_open;
        obj["method"] = r.method;
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : r.values) vals.push_back(v.str());
        obj["values"] = std::move(vals);
        if (r.source) obj["source"] = *r.source;
        out.push_back(std::move(obj));
    }
    return out;
}

std::vector<OutputRecord> records_from_json(const nlohmann::json& j) {
    std::vector<OutputRecord> out;
    for (const auto& obj : j) {
        OutputRecord r;
        r.n = obj.at("n").get<int>();
        if (obj.contains("k")) {
            if (obj["k"].is_string()) {
                if (obj["k"].get<std::string>() != "sum") {
                    throw std::invalid_argument("records_from_json: bad k value");
                }
                r.sum_over_k = true;
            } else {
                r.k = obj["k"].get<int>();
            }
        }
        if (obj.contains("j")) r.j = obj["j"].get<int>();
        r.half_open = obj.at("half_open").get<bool>();
        r.method = obj.at("method").get<std::string>();
        for (const auto& v : obj.at("values")) {
            r.values.emplace_back(v.get<std::string>());
        }
        if (obj.contains("source")) r.source = obj["source"].get<std::string>();
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_markdown(const std::vector<OutputRecord>& records) {
    std::ostringstream os;
    os << "| n | k | j | half-open | f |\n";
    os << "|---|---|---|-----------|---|\n";
    for (const auto& r : records) {
        for_each_row(r, [&](int j, const Integer& v) {
            os << "| " << r.n << " | " << k_cell(r) << " | " << j << " | "
               << (r.half_open ? "yes" : "no") << " | " << v.str() << " |\n";
        });
    }
    return os.str();
}

std::string to_plain(const OutputRecord& record) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < record.values.size(); ++i) {
        if (i) os << ", ";
        os << record.values[i].str();
    }
    os << ')';
    return os.str();
}

} // namespace hyperfv::cli
