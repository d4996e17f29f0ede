#pragma once

// Enumeration of simple binary matroids up to isomorphism.
//
// Ranks 0 through 4 come from canonicalizing every subset of PG(3,2). Larger
// ranks are grown one point at a time: a child of S adds either a point of
// span(S) outside S or one new independent point, and children are merged by
// canonical form. Candidate points in one orbit of the automorphisms found
// while canonicalizing S give isomorphic children, so one per orbit is tried.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "isomorph.hpp"
#include "matroid.hpp"
#include "parallel.hpp"

namespace bmat {

struct enumeration_filters {
    bool connected = false;
    bool three_connected = false;
    bool triangle_free = false;

    friend bool operator==(const enumeration_filters&, const enumeration_filters&) = default;

    [[nodiscard]] std::vector<std::string> names() const {
        std::vector<std::string> out;
        if (connected) out.emplace_back("connected");
        if (three_connected) out.emplace_back("3-connected");
        if (triangle_free) out.emplace_back("triangle-free");
        return out;
    }

    /// Accepts "connected", "3-connected" and "triangle-free".
    void enable(const std::string& name) {
        if (name == "connected")
            connected = true;
        else if (name == "3-connected" || name == "three-connected")
            three_connected = true;
        else if (name == "triangle-free")
            triangle_free = true;
        else
            throw std::domain_error("unknown filter \"" + name + "\"");
    }

    [[nodiscard]] bool accepts(const binary_matroid& m) const {
        if (triangle_free && !is_triangle_free(m)) return false;
        if (connected || three_connected) {
            if (m.empty()) return false;
            const auto c = connectivity(m);
            if (connected && !c.connected) return false;
            if (three_connected && !c.three_connected) return false;
        }
        return true;
    }
};

/// Largest size reachable at rank 5 is 31; beyond rank 5 only small ground
/// sets are supported.
inline constexpr int max_rank_supported = 5;
inline constexpr int max_elements_any_rank = 10;

struct enumeration_scope {
    int max_rank = 4;
    int max_elements = 15;
    enumeration_filters filters;

    friend bool operator==(const enumeration_scope&, const enumeration_scope&) = default;

    /// Rank-5 classes are complete only with all 31 sizes.
    [[nodiscard]] bool partial() const {
        return max_rank >= 5 && max_elements < (1 << std::min(max_rank, 6)) - 1;
    }

    /// Throws std::domain_error when the scope is out of bounds.
    void validate() const {
        if (max_rank < 0 || max_elements < 0) throw std::domain_error("scope: negative bound");
        if (max_elements > static_cast<int>(bmat::max_elements)) throw std::domain_error("scope: too many elements");
        if (max_rank > max_rank_supported && max_elements > max_elements_any_rank)
            throw std::domain_error("scope: ranks above 5 need max_elements <= " +
                                    std::to_string(max_elements_any_rank));
        if (max_rank > max_ambient_rank) throw std::domain_error("scope: rank too large");
    }

    [[nodiscard]] int effective_max_rank() const { return std::min(max_rank, max_elements); }
};

namespace detail {

inline std::vector<canonical_form> small_rank_forms(int max_rank, int max_elements, int jobs) {
    const int r = std::min(max_rank, 4);
    const std::size_t subsets = std::size_t{1} << ((1u << r) - 1);
    constexpr std::size_t chunk = 1024;
    const std::size_t chunks = (subsets + chunk - 1) / chunk;
    std::set<canonical_form> all;
    std::mutex mutex;
    parallel_for(chunks, jobs, [&](std::size_t c) {
        std::set<canonical_form> local;
        for (std::size_t s = c * chunk; s < std::min(subsets, (c + 1) * chunk); ++s) {
            if (std::popcount(s) > max_elements) continue;
            std::vector<point_t> pts;
            for (std::size_t t = s; t != 0; t &= t - 1) pts.push_back(static_cast<point_t>(std::countr_zero(t) + 1));
            local.insert(canonicalize(binary_matroid(r, std::move(pts))));
        }
        std::lock_guard lock(mutex);
        all.merge(local);
    });
    return {all.begin(), all.end()};
}

// One representative candidate per orbit of the known automorphisms on the
// points of span(S) outside S. S is in canonical coordinates, so the unit
// vectors are among its points and each automorphism is a linear map.
inline std::vector<point_t> candidate_points(const canonical_form& f) {
    const int k = f.rank;
    const binary_matroid s = f.to_matroid();
    const auto lab = canonical_labeling_of(s);
    const point_t top = point_t{1} << k;
    std::vector<point_t> rep(top);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](point_t x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    };
    for (const auto& perm : lab.automorphisms) {
        std::vector<point_t> cols(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) cols[i] = s.points()[perm[*s.index_of(point_t{1} << i)]];
        for (point_t v = 1; v < top; ++v) {
            point_t img = 0;
            for (int i = 0; i < k; ++i)
                if (v >> i & 1u) img ^= cols[i];
            const point_t a = find(v), b = find(img);
            if (a != b) rep[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<point_t> out;
    for (point_t v = 1; v < top; ++v)
        if (!s.contains(v) && find(v) == v) out.push_back(v);
    return out;
}

inline std::vector<canonical_form> grow_forms(int max_rank, int max_elements, int jobs) {
    std::vector<canonical_form> all;
    std::vector<canonical_form> level{canonical_form{}};
    all.push_back(level.front());
    for (int n = 1; n <= max_elements; ++n) {
        std::set<canonical_form> next;
        std::mutex mutex;
        parallel_for(level.size(), jobs, [&](std::size_t i) {
            const auto& f = level[i];
            std::vector<canonical_form> kids;
            for (point_t v : candidate_points(f)) {
                auto pts = f.code;
                pts.push_back(v);
                kids.push_back(canonicalize(binary_matroid(f.rank, std::move(pts))));
            }
            if (f.rank < max_rank) {
                auto pts = f.code;
                pts.push_back(point_t{1} << f.rank);
                kids.push_back(canonicalize(binary_matroid(f.rank + 1, std::move(pts))));
            }
            std::lock_guard lock(mutex);
            next.insert(kids.begin(), kids.end());
        });
        level.assign(next.begin(), next.end());
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

inline std::string cache_file_name(const enumeration_scope& s) {
    return "forms-r" + std::to_string(s.max_rank) + "-n" + std::to_string(s.max_elements) + ".txt";
}

inline std::optional<std::vector<canonical_form>> load_cached_forms(const enumeration_scope& s) {
    const char* dir = std::getenv("MATROID_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    std::ifstream in(std::filesystem::path(dir) / cache_file_name(s));
    if (!in) return std::nullopt;
    std::vector<canonical_form> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        canonical_form f;
        if (!(ls >> f.rank)) continue;
        for (point_t p; ls >> p;) f.code.push_back(p);
        out.push_back(std::move(f));
    }
    return out;
}

inline void store_cached_forms(const enumeration_scope& s, const std::vector<canonical_form>& forms) {
    const char* dir = std::getenv("MATROID_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(std::filesystem::path(dir) / cache_file_name(s));
    for (const auto& f : forms) {
        out << f.rank;
        for (point_t p : f.code) out << ' ' << p;
        out << '\n';
    }
}

}  // namespace detail

/// Canonical forms of every simple binary matroid with rank <= max_rank and
/// at most max_elements elements, one per isomorphism class, ascending.
/// Filters are not applied here.
inline std::vector<canonical_form> enumerate_forms(const enumeration_scope& scope, int jobs = 1) {
    scope.validate();
    enumeration_scope key{scope.max_rank, scope.max_elements, {}};
    if (auto cached = detail::load_cached_forms(key)) return *cached;
    std::vector<canonical_form> out = detail::small_rank_forms(scope.max_rank, scope.max_elements, jobs);
    if (scope.effective_max_rank() > 4) {
        for (auto& f : detail::grow_forms(scope.max_rank, scope.max_elements, jobs))
            if (f.rank > 4) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    detail::store_cached_forms(key, out);
    return out;
}

/// Canonical forms of all simple binary matroids with at most `max_elements`
/// elements and rank <= max_rank, grown point by point.
inline std::vector<canonical_form> grow_all_forms(int max_rank, int max_elements, int jobs = 1) {
    auto out = detail::grow_forms(max_rank, max_elements, jobs);
    std::sort(out.begin(), out.end());
    return out;
}

/// One canonical representative per class in the scope that passes the
/// scope's filters, ascending by canonical form.
inline std::vector<binary_matroid> enumerate_matroids(const enumeration_scope& scope, int jobs = 1) {
    const auto forms = enumerate_forms(scope, jobs);
    std::vector<char> keep(forms.size(), 0);
    parallel_for(forms.size(), jobs, [&](std::size_t i) { keep[i] = scope.filters.accepts(forms[i].to_matroid()); });
    std::vector<binary_matroid> out;
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (keep[i]) out.push_back(forms[i].to_matroid());
    return out;
}

}  // namespace bmat
