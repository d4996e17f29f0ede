#pragma once

// Minors and induced minors.
//
// An induced minor of M is si((M|F)/X) for flats X of M contained in a flat
// F; this is an interval [X, F] of the lattice of flats.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "constructs.hpp"
#include "isomorph.hpp"
#include "matroid.hpp"

namespace bmat {

struct induced_minor_witness {
    flat outer;       // F
    flat inner;       // X, a subset of F
    element_map map;  // elements of M|F onto the pattern's points
};

struct named_pattern {
    std::string name;
    binary_matroid matroid;
    canonical_form form;
};

class pattern_set {
public:
    pattern_set() = default;

    /// Throws std::domain_error if a pattern is disconnected.
    explicit pattern_set(std::vector<std::pair<std::string, binary_matroid>> patterns) {
        for (auto& [name, m] : patterns) add(std::move(name), std::move(m));
    }

    void add(std::string name, binary_matroid m) {
        if (!is_connected(m)) throw std::domain_error("pattern \"" + name + "\" is not connected");
        auto form = canonicalize(m);
        items_.push_back({std::move(name), std::move(m), std::move(form)});
    }

    [[nodiscard]] const std::vector<named_pattern>& items() const noexcept { return items_; }
    [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }

    /// Union, keeping the first occurrence of each name.
    [[nodiscard]] pattern_set merged(const pattern_set& other) const {
        pattern_set out = *this;
        for (const auto& p : other.items_) {
            bool dup = false;
            for (const auto& q : out.items_) dup = dup || q.name == p.name;
            if (!dup) out.items_.push_back(p);
        }
        return out;
    }

private:
    std::vector<named_pattern> items_;
};

/// The four connected simple rank-3 binary matroids, keyed "MC4", "MK4e",
/// "MK4" and "F7".
inline const named_pattern& standard_pattern(const std::string& key) {
    static const std::vector<named_pattern> all = [] {
        std::vector<named_pattern> v;
        for (const char* k : {"MC4", "MK4e", "MK4", "F7"}) {
            auto m = named(k);
            auto f = canonicalize(m);
            v.push_back({k, std::move(m), std::move(f)});
        }
        return v;
    }();
    for (const auto& p : all)
        if (p.name == key) return p;
    throw std::domain_error("no standard pattern \"" + key + "\"");
}

/// Pattern set built from standard keys ("MC4", "MK4e", "MK4", "F7").
inline pattern_set standard_patterns(std::initializer_list<const char*> keys) {
    pattern_set out;
    for (const char* k : keys) {
        const auto& p = standard_pattern(k);
        out.add(p.name, p.matroid);
    }
    return out;
}

namespace detail {

inline element_map map_onto(const contraction& q, const binary_matroid& n) {
    const auto iso = find_isomorphism(q.matroid, n);
    if (!iso) throw std::logic_error("induced minor: forms agree but no isomorphism found");
    element_map out;
    for (auto fate : q.map.entries) {
        if (fate.image) fate.image = (*iso)[*q.matroid.index_of(*fate.image)];
        out.entries.push_back(fate);
    }
    return out;
}

}  // namespace detail

/// Searches intervals [X, F] with rank F - rank X = rank N. Outer flats are
/// tried from the top rank down (ascending by mask within a rank), inner
/// flats ascending by rank and mask; the first hit is returned.
inline std::optional<induced_minor_witness> has_induced_minor(const binary_matroid& m, const binary_matroid& n,
                                                              const canonical_form& n_form) {
    const int rn = n.rank();
    if (rn > m.rank() || n.size() > m.size()) return std::nullopt;
    const auto fl = flats(m);
    for (int rf = m.rank(); rf >= rn; --rf) {
        const int rx = rf - rn;
        for (const flat& f : fl[rf]) {
            if (static_cast<std::size_t>(popcount(f.elements)) < n.size()) continue;
            for (const flat& x : fl[rx]) {
                if ((x.elements & ~f.elements) != 0) continue;
                if (static_cast<std::size_t>(popcount(f.elements & ~x.elements)) < n.size()) continue;
                const binary_matroid mf = restrict_to(m, f.elements);
                auto q = contract_simplify(mf, mf.mask_of(m.points_of(x.elements)));
                if (q.matroid.size() != n.size()) continue;
                if (canonicalize(q.matroid) != n_form) continue;
                return induced_minor_witness{f, x, detail::map_onto(q, n)};
            }
        }
    }
    return std::nullopt;
}

inline std::optional<induced_minor_witness> has_induced_minor(const binary_matroid& m, const binary_matroid& n) {
    return has_induced_minor(m, n, canonicalize(n));
}

inline std::optional<induced_minor_witness> has_induced_minor(const binary_matroid& m, const named_pattern& p) {
    return has_induced_minor(m, p.matroid, p.form);
}

/// Canonical forms of every induced minor of M, the empty matroid included.
inline std::set<canonical_form> induced_minor_forms(const binary_matroid& m) {
    std::set<canonical_form> out;
    const auto fl = flats(m);
    for (const auto& fs : fl)
        for (const flat& f : fs) {
            const binary_matroid mf = restrict_to(m, f.elements);
            for (const auto& xs : fl)
                for (const flat& x : xs)
                    if ((x.elements & ~f.elements) == 0)
                        out.insert(canonicalize(contract_simplify(mf, mf.mask_of(m.points_of(x.elements))).matroid));
        }
    return out;
}

namespace detail {

// Looks for an injective linear placement of N's points among Q's points,
// where rank Q = rank N.
class embedding_search {
public:
    embedding_search(const binary_matroid& q, const binary_matroid& n) : q_(q) {
        const auto basis = gf2_basis::greedy(n.points());
        k_ = basis.size();
        for (point_t p : n.points()) coords_.push_back(basis.coordinates(p));
        images_.assign(static_cast<std::size_t>(k_), 0);
    }

    bool run() { return place(0); }

private:
    bool place(int j) {
        if (j == k_) return true;
        for (point_t cand : q_.points()) {
            if (eb_at(j).contains(cand)) continue;
            images_[j] = cand;
            if (consistent(j + 1) && place(j + 1)) return true;
        }
        return false;
    }

    xor_basis eb_at(int j) const {
        xor_basis b;
        for (int i = 0; i < j; ++i) b.insert(images_[i]);
        return b;
    }

    // Every N point spanned by the first `level` basis vectors lands in Q.
    bool consistent(int level) const {
        const point_t below = point_t{1} << level;
        const point_t newest = point_t{1} << (level - 1);
        for (point_t c : coords_) {
            if (c >= below || !(c & newest)) continue;
            point_t img = 0;
            for (int i = 0; i < level; ++i)
                if (c >> i & 1u) img ^= images_[i];
            if (!q_.contains(img)) return false;
        }
        return true;
    }

    const binary_matroid& q_;
    int k_ = 0;
    std::vector<point_t> coords_;
    std::vector<point_t> images_;
};

}  // namespace detail

/// True iff N is isomorphic to a minor of M (up to simplification).
/// Contracts each flat of rank r(M) - r(N), skipping contractions already
/// seen up to isomorphism, then looks for N as a spanning restriction.
inline bool has_minor(const binary_matroid& m, const binary_matroid& n) {
    if (n.rank() > m.rank() || n.size() > m.size()) return false;
    if (n.empty()) return true;
    const auto fl = flats(m);
    std::set<canonical_form> seen;
    for (const flat& x : fl[static_cast<std::size_t>(m.rank() - n.rank())]) {
        auto q = contract_simplify(m, x.elements).matroid;
        if (q.size() < n.size()) continue;
        if (!seen.insert(canonicalize(q)).second) continue;
        if (detail::embedding_search(q, n).run()) return true;
    }
    return false;
}

inline bool is_regular(const binary_matroid& m) {
    return !has_minor(m, named("F7")) && !has_minor(m, named("F7*"));
}

inline bool is_series_parallel(const binary_matroid& m) {
    return is_connected(m) && !has_minor(m, named("MK4"));
}

enum class shape {
    projective_geometry,
    affine_geometry,
    circuit,
    pg_minus_point,
    complete_graph_cycle,
    spike_tip,
    spike_tip_cotip,
    other
};

inline const char* to_string(shape s) {
    switch (s) {
        case shape::projective_geometry: return "projective_geometry";
        case shape::affine_geometry: return "affine_geometry";
        case shape::circuit: return "circuit";
        case shape::pg_minus_point: return "pg_minus_point";
        case shape::complete_graph_cycle: return "complete_graph_cycle";
        case shape::spike_tip: return "spike_tip";
        case shape::spike_tip_cotip: return "spike_tip_cotip";
        case shape::other: return "other";
    }
    return "other";
}

namespace detail {

// The member of `family` with rank r and n elements, if there is one.
inline std::optional<binary_matroid> family_member(shape family, int r, std::size_t n) {
    const auto nr = static_cast<std::size_t>(r);
    switch (family) {
        case shape::projective_geometry:
            if (r <= 6 && n == (std::size_t{1} << r) - 1) return projective_geometry(r - 1);
            break;
        case shape::affine_geometry:
            if (r >= 1 && r <= 7 && n == std::size_t{1} << (r - 1)) return affine_geometry(r - 1);
            break;
        case shape::circuit:
            if (r >= 2 && n == nr + 1) return circuit_matroid(r + 1);
            break;
        case shape::pg_minus_point:
            if (r >= 2 && r <= 6 && n == (std::size_t{1} << r) - 2) return projective_geometry_minus_point(r);
            break;
        case shape::complete_graph_cycle:
            if (r >= 1 && n == nr * (nr + 1) / 2) return complete_graphic(r + 1);
            break;
        case shape::spike_tip:
            if (r >= 3 && n == 2 * nr + 1) return spike(r, false);
            break;
        case shape::spike_tip_cotip:
            if (r >= 3 && n == 2 * nr) return spike(r, true);
            break;
        case shape::other:
            break;
    }
    return std::nullopt;
}

}  // namespace detail

/// Whether M is isomorphic to the member of `family` with its rank and size.
/// Every family is tested on its own, so a matroid may belong to several
/// (the three-point line is both a projective geometry and M(K_3)).
inline bool in_family(const binary_matroid& m, shape family, const canonical_form& form) {
    const auto c = detail::family_member(family, m.rank(), m.size());
    return c && canonicalize(*c) == form;
}

inline bool in_family(const binary_matroid& m, shape family) { return in_family(m, family, canonicalize(m)); }

/// First family (in enum order) whose member of the same rank and size is
/// isomorphic to M.
inline shape classify_shape(const binary_matroid& m) {
    const auto f = canonicalize(m);
    for (shape s : {shape::projective_geometry, shape::affine_geometry, shape::circuit, shape::pg_minus_point,
                    shape::complete_graph_cycle, shape::spike_tip, shape::spike_tip_cotip})
        if (in_family(m, s, f)) return s;
    return shape::other;
}

struct exim_result {
    bool member = true;
    std::optional<std::string> pattern;              // first pattern found, when not a member
    std::optional<induced_minor_witness> witness;
};

inline exim_result exim_member(const binary_matroid& m, const pattern_set& patterns) {
    for (const auto& p : patterns.items())
        if (auto w = has_induced_minor(m, p)) return {false, p.name, std::move(w)};
    return {};
}

}  // namespace bmat
