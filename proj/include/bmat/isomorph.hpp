#pragma once

// Canonical forms of simple binary matroids under GL(r, 2).
//
// The form of M is the lexicographically least sorted point list among all
// images g(M), g invertible on span(M) = F_2^rank(M). In a least image the
// standard basis vectors 1, 2, 4, ... are all present, so the search only
// ranges over ordered bases (b_1, ..., b_k) chosen from M's own points and
// writes every point in those coordinates. Points in span(b_1..b_j) get
// coordinates below 2^j, which lets each level compare a prefix of the final
// list against the best so far.
//
// Ties are broken with automorphisms: two leaves giving the same list differ
// by an automorphism of M, which both prunes sibling orbits and lets the
// search abandon subtrees that are images of ones already explored.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "matroid.hpp"

namespace bmat {

struct canonical_form {
    int rank = 0;
    std::vector<point_t> code;  // sorted, all < 2^rank

    friend bool operator==(const canonical_form&, const canonical_form&) = default;
    friend auto operator<=>(const canonical_form& a, const canonical_form& b) {
        if (a.rank != b.rank) return a.rank <=> b.rank;
        if (a.code.size() != b.code.size()) return a.code.size() <=> b.code.size();
        return a.code <=> b.code;
    }

    [[nodiscard]] binary_matroid to_matroid() const { return binary_matroid(rank, code); }
};

struct canonical_form_hash {
    std::size_t operator()(const canonical_form& f) const noexcept {
        std::size_t h = static_cast<std::size_t>(f.rank) * 0x9e3779b97f4a7c15ull;
        for (point_t p : f.code) h = (h ^ p) * 0x100000001b3ull + (h >> 29);
        return h;
    }
};

/// Result of the canonical search: the form, the coordinate each point of M
/// receives in it, and automorphisms of M (as permutations of point indices)
/// found along the way.
struct canonical_labeling {
    canonical_form form;
    std::vector<point_t> image;                        // image[i] = canonical coordinate of points()[i]
    std::vector<std::vector<std::size_t>> automorphisms;
};

namespace detail {

class canonical_search {
public:
    explicit canonical_search(const binary_matroid& m) : m_(m), n_(m.size()), k_(m.rank()) {}

    canonical_labeling run() {
        canonical_labeling out;
        out.form.rank = k_;
        if (n_ == 0) return out;
        state root;
        root.coord.assign(n_, 0);
        basis_.assign(static_cast<std::size_t>(k_), 0);
        search(0, root);
        out.form.code = best_list_;
        out.image = best_coord_;
        out.automorphisms = std::move(autos_);
        return out;
    }

private:
    struct row {
        point_t vec = 0;
        point_t coord = 0;
    };
    struct state {
        std::array<row, 32> rows{};
        element_set spanned = 0;
        std::vector<point_t> coord;
    };

    // Returns -1 to continue normally, or a depth d at which the caller
    // chain should resume with the next candidate.
    int search(int depth, const state& st) {
        if (depth == k_) return leaf(st);
        std::vector<std::size_t> orbit_rep(n_);
        std::iota(orbit_rep.begin(), orbit_rep.end(), 0);
        std::size_t autos_seen = 0;
        std::vector<std::size_t> explored;
        for (std::size_t c = 0; c < n_; ++c) {
            if (st.spanned >> c & 1u) continue;
            // Refresh orbits when new automorphisms fixing the prefix appear.
            if (autos_.size() != autos_seen) {
                autos_seen = autos_.size();
                rebuild_orbits(depth, orbit_rep);
            }
            const std::size_t rep = find(orbit_rep, c);
            bool redundant = false;
            for (std::size_t e : explored)
                if (find(orbit_rep, e) == rep) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            explored.push_back(c);

            state next = st;
            extend(next, c, depth);
            if (!prefix_viable(next, depth + 1)) continue;
            basis_[depth] = c;
            const int jump = search(depth + 1, next);
            if (jump >= 0 && jump < depth) return jump;
        }
        return -1;
    }

    void extend(state& st, std::size_t c, int depth) const {
        point_t v = m_.points()[c];
        point_t coord = point_t{1} << depth;
        while (v != 0) {
            auto& r = st.rows[leading_bit(v)];
            if (r.vec == 0) {
                r = {v, coord};
                break;
            }
            v ^= r.vec;
            coord ^= r.coord;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (st.spanned >> i & 1u) continue;
            point_t w = m_.points()[i];
            point_t cw = 0;
            bool inside = true;
            while (w != 0) {
                const auto& r = st.rows[leading_bit(w)];
                if (r.vec == 0) {
                    inside = false;
                    break;
                }
                w ^= r.vec;
                cw ^= r.coord;
            }
            if (inside) {
                st.spanned |= element_set{1} << i;
                st.coord[i] = cw;
            }
        }
    }

    // Compares the sorted coordinates below 2^level with the best list's
    // entries below 2^level; a shorter prefix is worse.
    bool prefix_viable(const state& st, int level) {
        if (best_list_.empty()) return true;
        std::vector<point_t> prefix;
        for (element_set s = st.spanned; s != 0; s &= s - 1) prefix.push_back(st.coord[std::countr_zero(s)]);
        std::sort(prefix.begin(), prefix.end());
        const point_t bound = point_t{1} << level;
        std::size_t i = 0;
        for (; i < prefix.size(); ++i) {
            if (i >= best_list_.size() || best_list_[i] >= bound) return true;
            if (prefix[i] != best_list_[i]) return prefix[i] < best_list_[i];
        }
        // Prefix exhausted: equal if best also stops here, worse otherwise.
        return i >= best_list_.size() || best_list_[i] >= bound;
    }

    int leaf(const state& st) {
        std::vector<point_t> list = st.coord;
        std::sort(list.begin(), list.end());
        if (best_list_.empty() || list < best_list_) {
            best_list_ = std::move(list);
            best_coord_ = st.coord;
            best_basis_ = basis_;
            return -1;
        }
        if (list != best_list_) return -1;
        // Same list: the map sending best coordinates to current coordinates
        // is an automorphism.
        std::vector<std::size_t> by_coord(std::size_t{1} << k_, n_);
        for (std::size_t i = 0; i < n_; ++i) by_coord[st.coord[i]] = i;
        std::vector<std::size_t> perm(n_);
        for (std::size_t i = 0; i < n_; ++i) perm[i] = by_coord[best_coord_[i]];
        autos_.push_back(std::move(perm));
        for (int d = 0; d < k_; ++d)
            if (best_basis_[d] != basis_[d]) return d;
        return -1;
    }

    std::vector<const std::vector<std::size_t>*> fixing_automorphisms(int depth) const {
        std::vector<const std::vector<std::size_t>*> out;
        for (const auto& a : autos_) {
            bool fixes = true;
            for (int d = 0; d < depth && fixes; ++d) fixes = a[basis_[d]] == basis_[d];
            if (fixes) out.push_back(&a);
        }
        return out;
    }

    void rebuild_orbits(int depth, std::vector<std::size_t>& rep) const {
        std::iota(rep.begin(), rep.end(), 0);
        for (const auto* a : fixing_automorphisms(depth))
            for (std::size_t i = 0; i < n_; ++i) unite(rep, i, (*a)[i]);
    }

    static std::size_t find(std::vector<std::size_t>& rep, std::size_t x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    }
    static void unite(std::vector<std::size_t>& rep, std::size_t a, std::size_t b) {
        a = find(rep, a);
        b = find(rep, b);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }

    const binary_matroid& m_;
    std::size_t n_;
    int k_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> best_basis_;
    std::vector<point_t> best_list_;
    std::vector<point_t> best_coord_;
    std::vector<std::vector<std::size_t>> autos_;
};

}  // namespace detail

inline canonical_labeling canonical_labeling_of(const binary_matroid& m) {
    return detail::canonical_search(m).run();
}

inline canonical_form canonicalize(const binary_matroid& m) { return canonical_labeling_of(m).form; }

/// The canonical representative as a matroid (ambient rank = rank(M)).
inline binary_matroid canonical_matroid(const binary_matroid& m) { return canonicalize(m).to_matroid(); }

/// Thread-safe memo from raw point lists to canonical forms.
class form_cache {
public:
    canonical_form get(const binary_matroid& m) {
        key k{m.ambient_rank(), m.points()};
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(k); it != map_.end()) return it->second;
        }
        auto form = canonicalize(m);
        std::unique_lock lock(mutex_);
        return map_.try_emplace(std::move(k), std::move(form)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

private:
    using key = std::pair<int, std::vector<point_t>>;
    mutable std::shared_mutex mutex_;
    std::map<key, canonical_form> map_;
};

/// Cheap isomorphism invariants used to reject before canonicalizing.
struct invariant_profile {
    std::size_t size = 0;
    int rank = 0;
    std::size_t triangle_count = 0;
    std::vector<std::size_t> flats_per_rank;
    friend bool operator==(const invariant_profile&, const invariant_profile&) = default;
};

inline invariant_profile profile_of(const binary_matroid& m) {
    invariant_profile p{m.size(), m.rank(), triangles(m).size(), {}};
    for (const auto& level : flats(m)) p.flats_per_rank.push_back(level.size());
    return p;
}

inline bool are_isomorphic(const binary_matroid& a, const binary_matroid& b) {
    if (a.size() != b.size() || a.rank() != b.rank()) return false;
    if (triangles(a).size() != triangles(b).size()) return false;
    if (profile_of(a) != profile_of(b)) return false;
    return canonicalize(a) == canonicalize(b);
}

/// An isomorphism a -> b as a point map (index-aligned with a.points()), or
/// nullopt when the matroids are not isomorphic.
inline std::optional<std::vector<point_t>> find_isomorphism(const binary_matroid& a, const binary_matroid& b) {
    if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
    const auto la = canonical_labeling_of(a);
    const auto lb = canonical_labeling_of(b);
    if (la.form != lb.form) return std::nullopt;
    std::map<point_t, point_t> b_by_coord;
    for (std::size_t i = 0; i < b.size(); ++i) b_by_coord[lb.image[i]] = b.points()[i];
    std::vector<point_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b_by_coord.at(la.image[i]);
    return out;
}

/// Applies an invertible linear map of F_2^r given by the images of the
/// standard basis (columns[i] = image of 2^i).
inline binary_matroid apply_linear_map(const binary_matroid& m, const std::vector<point_t>& columns) {
    std::vector<point_t> pts;
    for (point_t p : m.points()) {
        point_t img = 0;
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (p >> i & 1u) img ^= columns[i];
        pts.push_back(img);
    }
    return binary_matroid(m.ambient_rank(), std::move(pts), m.labels());
}

}  // namespace bmat
