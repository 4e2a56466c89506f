#ifndef HC_REPORT_HPP
#define HC_REPORT_HPP

#include <json.hpp>

#include "hc/census.hpp"

namespace hc {

// JSON form of a census report, schema "census-v1". Key order is fixed and
// elapsed_seconds is deliberately not serialized: two runs over the same
// inputs must produce byte-identical documents.
inline nlohmann::ordered_json report_to_json(const CensusReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = r.schema;
    j["kind"] = r.kind;
    j["field"] = r.field;
    j["poly"] = r.poly;
    j["box"] = r.box;
    j["order_version"] = r.order_version;
    j["config"] = r.config;
    j["shard_count"] = r.shard_count;
    j["shard_index"] = r.shard_index;
    j["range_lo"] = r.range_lo;
    j["range_hi"] = r.range_hi;
    j["box_count"] = r.box_count;
    j["count"] = r.count;
    j["degenerate"] = r.degenerate;
    j["inseparable"] = r.inseparable;
    j["witness_cap"] = r.witness_cap;
    j["truncated"] = r.truncated;
    auto ws = nlohmann::ordered_json::array();
    for (auto& w : r.witnesses) ws.push_back({{"t", w.t}, {"info", w.info}});
    j["witnesses"] = std::move(ws);
    if (r.kind == "galois") {
        nlohmann::ordered_json h = nlohmann::ordered_json::object();
        for (auto& [k, v] : r.histogram) h[k] = v;
        j["histogram"] = std::move(h);
        j["generic_group"] = r.generic_group;
        j["generic_order"] = r.generic_order;
        j["delta"] = r.delta;
        j["gamma"] = r.gamma;
    }
    j["kernel_theorem"] = r.kernel_theorem;
    j["kernel_log2"] = r.kernel_log2;
    j["ratio_log2"] = std::isfinite(r.ratio_log2) ? nlohmann::ordered_json(r.ratio_log2)
                                                  : nlohmann::ordered_json(nullptr);
    return j;
}

inline std::string report_to_text(const CensusReport& r) {
    return report_to_json(r).dump(2) + "\n";
}

inline CensusReport report_from_json(const nlohmann::ordered_json& j) {
    CensusReport r;
    if (j.value("schema", "") != r.schema)
        throw ValidationError("unknown report schema: " + j.value("schema", std::string("<none>")));
    r.kind = j.at("kind");
    r.field = j.at("field");
    r.poly = j.at("poly");
    r.box = j.at("box");
    r.order_version = j.at("order_version");
    r.config = j.at("config");
    r.shard_count = j.at("shard_count");
    r.shard_index = j.at("shard_index");
    r.range_lo = j.at("range_lo");
    r.range_hi = j.at("range_hi");
    r.box_count = j.at("box_count");
    r.count = j.at("count");
    r.degenerate = j.at("degenerate");
    r.inseparable = j.at("inseparable");
    r.witness_cap = j.at("witness_cap");
    r.truncated = j.at("truncated");
    for (auto& w : j.at("witnesses")) r.witnesses.push_back({w.at("t"), w.at("info")});
    if (j.contains("histogram"))
        for (auto& [k, v] : j.at("histogram").items())
            r.histogram.emplace_back(k, v.get<uint64_t>());
    r.generic_group = j.value("generic_group", "");
    r.generic_order = j.value("generic_order", 0);
    r.delta = j.value("delta", "");
    r.gamma = j.value("gamma", "");
    r.kernel_theorem = j.value("kernel_theorem", "");
    r.kernel_log2 = j.value("kernel_log2", 0.0);
    r.ratio_log2 = j.contains("ratio_log2") && !j.at("ratio_log2").is_null()
                       ? j.at("ratio_log2").get<double>()
                       : -std::numeric_limits<double>::infinity();
    return r;
}

// Witness projection as CSV: header then one row per witness. Fields are
// quoted; embedded quotes are doubled per RFC 4180.
inline std::string witnesses_to_csv(const CensusReport& r) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            out += c;
            if (c == '"') out += '"';
        }
        return out + "\"";
    };
    std::string csv = "t,info\n";
    for (auto& w : r.witnesses) csv += quote(w.t) + "," + quote(w.info) + "\n";
    return csv;
}

}  // namespace hc

#endif
