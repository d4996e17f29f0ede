#pragma once

// Constructions on binary matroids and the catalog of named examples.

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isomorph.hpp"
#include "matroid.hpp"

namespace bmat {

// ---------------------------------------------------------------------------
// Coning

struct coned_matroid {
    binary_matroid matroid;
    std::optional<point_t> tip;
};

/// Tipped coning A(N) or tipless coning A(N)\p of N. The tip is p = 2^r for
/// r = N.ambient_rank(); each x of N is joined by its lift x + p.
///
/// An original element keeps its label (or its index). Its lift gets the
/// same label with a trailing "'". The tip is labeled "p<r+1>".
inline coned_matroid cone(const binary_matroid& n, bool tipped) {
    const int r = n.ambient_rank();
    if (r + 1 > max_ambient_rank) throw std::domain_error("cone: ambient rank too large");
    if (2 * n.size() + (tipped ? 1 : 0) > max_elements) throw std::domain_error("cone: result exceeds 64 elements");
    const point_t p = point_t{1} << r;
    std::vector<point_t> pts;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const std::string base = n.has_labels() ? n.labels()[i] : std::to_string(i);
        pts.push_back(n.points()[i]);
        labels.push_back(base);
        pts.push_back(n.points()[i] ^ p);
        labels.push_back(base + "'");
    }
    if (tipped) {
        pts.push_back(p);
        labels.push_back("p" + std::to_string(r + 1));
    }
    coned_matroid out{binary_matroid(r + 1, std::move(pts), std::move(labels)), std::nullopt};
    if (tipped) out.tip = p;
    return out;
}

// ---------------------------------------------------------------------------
// Generalized parallel connection across a projective geometry

using glue_map = std::vector<std::pair<point_t, point_t>>;

namespace detail {

// Greedy basis of `first`, extended greedily by `rest`.
inline std::vector<point_t> extend_basis(std::span<const point_t> first, std::span<const point_t> rest) {
    std::vector<point_t> out;
    xor_basis eb;
    for (point_t p : first)
        if (eb.insert(p)) out.push_back(p);
    for (point_t p : rest)
        if (eb.insert(p)) out.push_back(p);
    return out;
}

inline void check_projective_flat(const binary_matroid& m, element_set f, const char* side) {
    const flat cl = closure(m, f);
    if (cl.elements != f) throw std::domain_error(std::string("gpc: glued set of ") + side + " is not a flat");
    if (popcount(f) != (1 << cl.rank) - 1)
        throw std::domain_error(std::string("gpc: glued flat of ") + side + " is not a projective geometry");
}

}  // namespace detail

/// P_N(M1, M2) where N is the projective geometry M1|F1 identified with
/// M2|F2 through `glue`. The result lives in F_2^(r1 + r2 - k). The first k
/// coordinates carry the glued flat, with basis taken from the
/// lexicographically least independent points of F1. The remaining
/// coordinates extend it to M1 first and then extend glue(F1) to M2. An empty
/// glue gives the direct sum.
inline binary_matroid gpc_across_pg(const binary_matroid& m1, const binary_matroid& m2, const glue_map& glue) {
    std::vector<point_t> f1_pts, f2_pts;
    for (auto [a, b] : glue) {
        f1_pts.push_back(a);
        f2_pts.push_back(b);
    }
    const element_set f1 = m1.mask_of(f1_pts);
    const element_set f2 = m2.mask_of(f2_pts);
    if (static_cast<std::size_t>(popcount(f1)) != glue.size() || static_cast<std::size_t>(popcount(f2)) != glue.size())
        throw std::domain_error("gpc: glue is not a bijection");
    detail::check_projective_flat(m1, f1, "the first matroid");
    detail::check_projective_flat(m2, f2, "the second matroid");
    auto image = [&](point_t a) {
        for (auto [x, y] : glue)
            if (x == a) return y;
        throw std::domain_error("gpc: glue is not defined on the whole flat");
    };
    for (auto [a, _] : glue)
        for (auto [b, __] : glue)
            if (a < b && image(a ^ b) != (image(a) ^ image(b)))
                throw std::domain_error("gpc: glue is not an isomorphism of projective geometries");

    std::sort(f1_pts.begin(), f1_pts.end());
    const auto basis1 = detail::extend_basis(f1_pts, m1.points());
    const int k = rank_of(f1_pts);
    std::vector<point_t> glued_basis(basis1.begin(), basis1.begin() + k);
    std::vector<point_t> head2;
    for (point_t b : glued_basis) head2.push_back(image(b));
    const auto basis2 = detail::extend_basis(head2, m2.points());
    const int r1 = static_cast<int>(basis1.size());
    const int r2 = static_cast<int>(basis2.size());
    const int r = r1 + r2 - k;
    if (r > max_ambient_rank) throw std::domain_error("gpc: result rank too large");
    const gf2_basis c1(basis1), c2(basis2);
    std::vector<point_t> pts;
    for (point_t p : m1.points()) pts.push_back(c1.coordinates(p));
    for (point_t p : m2.points()) {
        const point_t c = c2.coordinates(p);
        const point_t low = c & ((point_t{1} << k) - 1);
        const point_t high = c >> k;
        pts.push_back(low | (high << r1));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return binary_matroid(r, std::move(pts));
}

// ---------------------------------------------------------------------------
// Projective targets

/// A 0-1 string naming a projective target: "0" for the empty target,
/// otherwise a nonempty string with leading '1'.
class target_string {
public:
    explicit target_string(std::string bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw std::domain_error("target string is empty");
        for (char c : bits_)
            if (c != '0' && c != '1') throw std::domain_error("target string \"" + bits_ + "\" is not a 0-1 string");
        if (bits_ != "0" && bits_.front() != '1')
            throw std::domain_error("target string \"" + bits_ + "\" must start with 1");
    }

    static target_string of_size(std::uint64_t n) {
        if (n == 0) return target_string("0");
        std::string s;
        for (; n != 0; n >>= 1) s.insert(s.begin(), static_cast<char>('0' + (n & 1u)));
        return target_string(s);
    }

    [[nodiscard]] const std::string& bits() const noexcept { return bits_; }
    [[nodiscard]] std::uint64_t value() const {
        std::uint64_t v = 0;
        for (char c : bits_) v = 2 * v + static_cast<std::uint64_t>(c - '0');
        return v;
    }

private:
    std::string bits_;
};

/// Reads the string left to right: '1' is a tipped coning, '0' a tipless one,
/// starting from the empty matroid.
inline binary_matroid target_from_bits(const target_string& s) {
    binary_matroid m;
    for (char c : s.bits()) m = cone(m, c == '1').matroid;
    return m;
}

inline binary_matroid target_from_bits(const std::string& s) { return target_from_bits(target_string(s)); }

/// A full flag F_0 < F_1 < ... < F_r of projective flats of span(M) with
/// each layer F_i - F_(i-1) monochromatic.
struct target_flag {
    std::vector<std::vector<point_t>> flats;  // nonzero points of F_0, ..., F_r (F_0 empty)
    std::vector<bool> green;                  // green[i - 1] colors F_i - F_(i-1)
};

namespace detail {

class target_search {
public:
    explicit target_search(const binary_matroid& m) : m_(m) {}

    std::optional<target_flag> run() {
        const auto top = gf2_basis::greedy(m_.points()).vectors();
        std::vector<std::vector<point_t>> chain;
        std::vector<bool> colors;
        if (!descend(top, chain, colors)) return std::nullopt;
        target_flag out;
        out.flats.assign(chain.rbegin(), chain.rend());
        out.flats.insert(out.flats.begin(), std::vector<point_t>{});
        out.green.assign(colors.rbegin(), colors.rend());
        return out;
    }

private:
    static std::vector<point_t> nonzero_span(const std::vector<point_t>& basis) {
        auto s = span_of(basis);
        s.erase(s.begin());
        return s;
    }

    // Tries every hyperplane of span(basis) whose complement is one color.
    bool descend(const std::vector<point_t>& basis, std::vector<std::vector<point_t>>& chain, std::vector<bool>& colors) {
        const int j = static_cast<int>(basis.size());
        if (j == 0) return true;
        auto here = nonzero_span(basis);
        if (failed_.count(here)) return false;
        const gf2_basis coords(basis);
        for (point_t functional = 1; functional < (point_t{1} << j); ++functional) {
            std::vector<point_t> hyper;
            int greens = 0, reds = 0;
            for (point_t v : here) {
                if (std::popcount(coords.coordinates(v) & functional) % 2 == 0)
                    hyper.push_back(v);
                else
                    (m_.contains(v) ? greens : reds)++;
            }
            if (greens != 0 && reds != 0) continue;
            chain.push_back(here);
            colors.push_back(greens != 0);
            if (descend(gf2_basis::greedy(hyper).vectors(), chain, colors)) return true;
            chain.pop_back();
            colors.pop_back();
        }
        failed_.insert(std::move(here));
        return false;
    }

    const binary_matroid& m_;
    std::set<std::vector<point_t>> failed_;
};

}  // namespace detail

/// A monochromatic flag witnessing that M (green) is a projective target in
/// the projective geometry on span(M), or nullopt.
inline std::optional<target_flag> is_projective_target(const binary_matroid& m) {
    return detail::target_search(m).run();
}

// ---------------------------------------------------------------------------
// Spikes and line saturation

/// The binary r-spike [I_r | J_r - I_r | 1] with tip "t". With
/// `delete_cotip_partner`, the leg column e_1 is deleted and the third point
/// of the triangle {t, e_1, t*} is labeled "t*".
inline binary_matroid spike(int r, bool delete_cotip_partner) {
    if (r < 3) throw std::domain_error("spike: rank must be at least 3");
    if (r > max_ambient_rank) throw std::domain_error("spike: rank too large");
    const point_t ones = (point_t{1} << r) - 1;
    std::vector<point_t> pts;
    std::vector<std::string> labels;
    for (int i = 0; i < r; ++i) {
        const point_t e = point_t{1} << i;
        if (!(delete_cotip_partner && i == 0)) {
            pts.push_back(e);
            labels.push_back("a" + std::to_string(i + 1));
        }
        pts.push_back(ones ^ e);
        labels.push_back(delete_cotip_partner && i == 0 ? "t*" : "b" + std::to_string(i + 1));
    }
    pts.push_back(ones);
    labels.push_back("t");
    return binary_matroid(r, std::move(pts), std::move(labels));
}

/// Adds x + y for every other element y: every line through x becomes full.
inline binary_matroid line_saturate(const binary_matroid& m, point_t x) {
    if (!m.contains(x)) throw std::domain_error("line_saturate: unknown element");
    std::vector<point_t> pts = m.points();
    for (point_t y : m.points())
        if (y != x) pts.push_back(x ^ y);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return binary_matroid(m.ambient_rank(), std::move(pts));
}

// ---------------------------------------------------------------------------
// Catalog

/// Cycle matroid of a simple graph on vertices 0..n-1. Vertex n-1 is the
/// zero vector, vertex v < n-1 is e_(v+1).
inline binary_matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
    if (vertices < 1 || vertices - 1 > max_ambient_rank) throw std::domain_error("graphic: bad vertex count");
    auto vec = [&](int v) -> point_t { return v == vertices - 1 ? 0 : point_t{1} << v; };
    std::vector<point_t> pts;
    for (auto [u, v] : edges) pts.push_back(vec(u) ^ vec(v));
    return binary_matroid(vertices - 1, std::move(pts));
}

inline binary_matroid complete_graphic(int n) {
    if (n < 1) throw std::domain_error("M(K_n) needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return graphic(n, edges);
}

/// M(C_n), the n-element circuit: e_1, ..., e_(n-1) and their sum.
inline binary_matroid circuit_matroid(int n) {
    if (n < 3) throw std::domain_error("M(C_n) needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return graphic(n, edges);
}

/// PG(k, 2): all nonzero vectors of F_2^(k+1).
inline binary_matroid projective_geometry(int k) {
    if (k < -1) throw std::domain_error("PG(k,2) needs k >= -1");
    return binary_matroid(k + 1, pg_points(k + 1));
}

/// AG(k, 2): the vectors of F_2^(k+1) with top coordinate 1.
inline binary_matroid affine_geometry(int k) {
    if (k < 0 || k + 1 > max_ambient_rank) throw std::domain_error("AG(k,2) needs k >= 0");
    std::vector<point_t> pts;
    const point_t top = point_t{1} << k;
    for (point_t x = 0; x < top; ++x) pts.push_back(top | x);
    return binary_matroid(k + 1, std::move(pts));
}

/// PG(r-1, 2) minus the all-ones point.
inline binary_matroid projective_geometry_minus_point(int r) {
    auto pts = pg_points(r);
    pts.pop_back();
    return binary_matroid(r, std::move(pts));
}

struct catalog_entry {
    std::string name;
    std::string description;
};

/// Fixed catalog entries; families are also accepted as "M(K<n>)",
/// "M(C<n>)", "PG(<k>,2)" and "AG(<k>,2)".
inline const std::vector<catalog_entry>& catalog() {
    static const std::vector<catalog_entry> entries = {
        {"F7", "Fano plane PG(2,2); rank 3, 7 elements"},
        {"F7*", "dual of the Fano plane; rank 4, 7 elements"},
        {"AG32", "AG(3,2); rank 4, 8 elements, triangle-free"},
        {"S8", "rank-4 binary spike with tip and cotip; rank 4, 8 elements"},
        {"R10", "rank 5, 10 elements; every contraction simplifies to M*(K33)"},
        {"M*(K33)", "bond matroid of K_{3,3}; rank 4, 9 elements, 6 triangles"},
        {"M(K33)", "cycle matroid of K_{3,3}; rank 5, 9 elements"},
        {"MC4", "M(C_4) = U_{3,4}; rank 3, 4 elements"},
        {"MK4e", "M(K_4 \\ e); rank 3, 5 elements"},
        {"MK4", "M(K_4); rank 3, 6 elements"},
        {"W4", "cycle matroid of the 4-spoke wheel; rank 4, 8 elements"},
        {"U23", "M(C_3), a three-point line; rank 2"},
    };
    return entries;
}

namespace detail {

inline std::optional<int> parse_family_arg(const std::string& name, const std::string& prefix, const std::string& suffix) {
    if (name.size() <= prefix.size() + suffix.size()) return std::nullopt;
    if (name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) return std::nullopt;
    const std::string mid = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
    if (mid.empty() || mid.size() > 3) return std::nullopt;
    if (!std::all_of(mid.begin(), mid.end(), [](unsigned char c) { return std::isdigit(c); })) return std::nullopt;
    return std::stoi(mid);
}

}  // namespace detail

/// Looks up a catalog matroid by name; throws std::domain_error if unknown.
inline binary_matroid named(const std::string& name) {
    if (name == "F7" || name == "PG(2,2)") return projective_geometry(2);
    // Dual of F7 from its standard form: AG(3,2) with the point 0111 removed.
    if (name == "F7*") return binary_matroid(4, {0b0001, 0b0010, 0b0100, 0b1000, 0b1011, 0b1101, 0b1110});
    if (name == "AG32" || name == "AG(3,2)") return affine_geometry(3);
    if (name == "S8") return spike(4, true);
    // [I_5 | A] with A the circulant-like matrix rows 11001, 11100, 01110,
    // 00111, 10011.
    if (name == "R10")
        return binary_matroid(5, {0b00001, 0b00010, 0b00100, 0b01000, 0b10000, 0b10011, 0b00111, 0b01110, 0b11100,
                                  0b11001});
    if (name == "M(K33)" || name == "MK33") {
        // Parts {0,1,2} and {3,4,5}.
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v) edges.emplace_back(u, v);
        return graphic(6, edges);
    }
    if (name == "M*(K33)" || name == "MK33*") {
        // Dual of M(K33) in the graphic representation above.
        return binary_matroid(4, {0b0001, 0b0010, 0b0011, 0b0100, 0b0101, 0b1000, 0b1010, 0b1100, 0b1111});
    }
    if (name == "MC4" || name == "M(C4)") return circuit_matroid(4);
    if (name == "MK4e" || name == "M(K4\\e)" || name == "M(K4-e)") {
        return graphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    }
    if (name == "MK4" || name == "M(K4)") return complete_graphic(4);
    if (name == "W4" || name == "M(W4)") {
        // Hub 4, rim 0-1-2-3-0.
        return graphic(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
    }
    if (name == "U23" || name == "M(C3)") return circuit_matroid(3);
    if (auto n = detail::parse_family_arg(name, "M(K", ")")) return complete_graphic(*n);
    if (auto n = detail::parse_family_arg(name, "M(C", ")")) return circuit_matroid(*n);
    if (auto k = detail::parse_family_arg(name, "PG(", ",2)")) return projective_geometry(*k);
    if (auto k = detail::parse_family_arg(name, "AG(", ",2)")) return affine_geometry(*k);
    throw std::domain_error("unknown catalog name \"" + name + "\"");
}

}  // namespace bmat
