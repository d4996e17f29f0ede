#pragma once

// Matroid interchange documents (JSON):
//
//   {"rank": 3, "columns": ["001", "010", "011"], "labels": ["a", "b", "c"]}
//
// Each column string has exactly `rank` characters; the leftmost character is
// coordinate `rank` and the rightmost is coordinate 1. Columns are written in
// ascending integer order; `labels` is optional and parallel to `columns`.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "matroid.hpp"

namespace bmat {

using json = nlohmann::ordered_json;

inline std::string column_string(point_t p, int rank) {
    std::string s(static_cast<std::size_t>(rank), '0');
    for (int i = 0; i < rank; ++i)
        if (p >> i & 1u) s[static_cast<std::size_t>(rank - 1 - i)] = '1';
    return s;
}

inline point_t parse_column(const std::string& s, int rank) {
    if (static_cast<int>(s.size()) != rank)
        throw std::domain_error("column \"" + s + "\" does not have length " + std::to_string(rank));
    point_t p = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::domain_error("column \"" + s + "\" is not a 0-1 string");
        p = (p << 1) | static_cast<point_t>(c - '0');
    }
    return p;
}

inline json to_json(const binary_matroid& m) {
    json j;
    j["rank"] = m.ambient_rank();
    json cols = json::array();
    for (point_t p : m.points()) cols.push_back(column_string(p, m.ambient_rank()));
    j["columns"] = std::move(cols);
    if (m.has_labels()) j["labels"] = m.labels();
    return j;
}

/// Parses an interchange document; zero or duplicate columns are rejected.
inline binary_matroid matroid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("columns"))
        throw std::domain_error("matroid document needs \"rank\" and \"columns\"");
    int rank = 0;
    std::vector<point_t> pts;
    std::vector<std::string> labels;
    try {
        rank = j.at("rank").get<int>();
        if (rank < 0 || rank > max_ambient_rank) throw std::domain_error("rank out of range");
        if (!j.at("columns").is_array()) throw std::domain_error("\"columns\" must be a list");
        for (const auto& c : j.at("columns")) pts.push_back(parse_column(c.get<std::string>(), rank));
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw std::domain_error(std::string("malformed matroid document: ") + e.what());
    }
    return binary_matroid(rank, std::move(pts), std::move(labels));
}

inline std::string to_document(const binary_matroid& m) { return to_json(m).dump() + "\n"; }

inline binary_matroid read_matroid(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::domain_error(std::string("malformed matroid document: ") + e.what());
    }
    return matroid_from_json(j);
}

inline binary_matroid read_matroid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return read_matroid(in);
    } catch (const std::domain_error& e) {
        throw std::domain_error(path + ": " + e.what());
    }
}

}  // namespace bmat
