#pragma once

// Verification reports and their JSON documents.

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "io.hpp"

namespace bmat {

struct violation {
    json matroid;
    json witness;
    friend bool operator==(const violation&, const violation&) = default;
};

struct verification_report {
    std::string theorem_id;
    enumeration_scope scope;
    std::uint64_t population = 0;
    std::vector<violation> violations;
    std::int64_t elapsed_ms = 0;

    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
    friend bool operator==(const verification_report&, const verification_report&) = default;
};

inline json scope_to_json(const enumeration_scope& s) {
    json j;
    j["max_rank"] = s.max_rank;
    j["max_elements"] = s.max_elements;
    j["filters"] = s.filters.names();
    j["partial"] = s.partial();
    return j;
}

inline enumeration_scope scope_from_json(const json& j) {
    enumeration_scope s;
    s.max_rank = j.at("max_rank").get<int>();
    s.max_elements = j.at("max_elements").get<int>();
    for (const auto& f : j.at("filters")) s.filters.enable(f.get<std::string>());
    return s;
}

inline json to_json(const verification_report& r) {
    json j;
    j["theorem_id"] = r.theorem_id;
    j["scope"] = scope_to_json(r.scope);
    j["population"] = r.population;
    json v = json::array();
    for (const auto& x : r.violations) v.push_back(json{{"matroid", x.matroid}, {"witness", x.witness}});
    j["violations"] = std::move(v);
    j["elapsed_ms"] = r.elapsed_ms;
    j["verdict"] = r.passed() ? "pass" : "fail";
    return j;
}

inline verification_report report_from_json(const json& j) {
    verification_report r;
    r.theorem_id = j.at("theorem_id").get<std::string>();
    r.scope = scope_from_json(j.at("scope"));
    r.population = j.at("population").get<std::uint64_t>();
    for (const auto& x : j.at("violations")) r.violations.push_back({x.at("matroid"), x.at("witness")});
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    if (j.at("verdict").get<std::string>() != (r.passed() ? "pass" : "fail"))
        throw std::domain_error("report verdict disagrees with its violations");
    return r;
}

inline void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline void write_report(const verification_report& r, const std::string& path) { write_json_file(to_json(r), path); }

inline void write_reports(const std::vector<verification_report>& rs, const std::string& path) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    write_json_file(arr, path);
}

inline verification_report read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return report_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw std::domain_error(path + ": " + e.what());
    }
}

}  // namespace bmat
