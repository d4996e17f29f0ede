#pragma once

// Simple binary matroids as sets of distinct nonzero vectors of F_2^r.
//
// Subsets of the ground set are passed around as 64-bit masks over point
// indices (bit i <-> points()[i]), so matroids here have at most 64 elements.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gf2.hpp"

namespace bmat {

using element_set = std::uint64_t;

inline constexpr std::size_t max_elements = 64;

inline int popcount(element_set s) noexcept { return std::popcount(s); }

inline element_set full_set(std::size_t n) noexcept {
    return n >= 64 ? ~element_set{0} : (element_set{1} << n) - 1;
}

class binary_matroid {
public:
    binary_matroid() = default;

    /// Points are sorted on construction; labels, if given, travel with their
    /// points. Throws std::domain_error on a loop or a parallel pair, and on
    /// points outside the ambient space.
    binary_matroid(int ambient_rank, std::vector<point_t> points, std::vector<std::string> labels = {})
        : ambient_rank_(ambient_rank) {
        if (ambient_rank < 0 || ambient_rank > max_ambient_rank)
            throw std::domain_error("binary_matroid: ambient rank out of range");
        if (!labels.empty() && labels.size() != points.size())
            throw std::domain_error("binary_matroid: label count differs from point count");
        if (points.size() > max_elements) throw std::domain_error("binary_matroid: more than 64 elements");
        const point_t limit = ambient_rank == 0 ? 1 : (point_t{1} << ambient_rank);
        for (point_t p : points) {
            if (p == 0) throw std::domain_error("binary_matroid: zero column (loop)");
            if (p >= limit) throw std::domain_error("binary_matroid: column outside ambient space");
        }
        if (labels.empty()) {
            std::sort(points.begin(), points.end());
            points_ = std::move(points);
        } else {
            std::vector<std::size_t> order(points.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a] < points[b]; });
            for (auto i : order) {
                points_.push_back(points[i]);
                labels_.push_back(std::move(labels[i]));
            }
        }
        if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
            throw std::domain_error("binary_matroid: duplicate column (parallel pair)");
        rank_ = bmat::rank_of(points_);
    }

    [[nodiscard]] int ambient_rank() const noexcept { return ambient_rank_; }
    [[nodiscard]] int rank() const noexcept { return rank_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
    [[nodiscard]] const std::vector<point_t>& points() const noexcept { return points_; }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] bool has_labels() const noexcept { return !labels_.empty(); }
    [[nodiscard]] element_set ground() const noexcept { return full_set(points_.size()); }

    [[nodiscard]] std::optional<std::size_t> index_of(point_t p) const noexcept {
        auto it = std::lower_bound(points_.begin(), points_.end(), p);
        if (it == points_.end() || *it != p) return std::nullopt;
        return static_cast<std::size_t>(it - points_.begin());
    }
    [[nodiscard]] bool contains(point_t p) const noexcept { return index_of(p).has_value(); }

    [[nodiscard]] std::optional<std::size_t> index_of_label(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        return std::nullopt;
    }

    [[nodiscard]] std::vector<point_t> points_of(element_set s) const {
        std::vector<point_t> out;
        out.reserve(popcount(s));
        for (; s != 0; s &= s - 1) out.push_back(points_[std::countr_zero(s)]);
        return out;
    }

    [[nodiscard]] int rank_of(element_set s) const noexcept {
        xor_basis b;
        for (; s != 0; s &= s - 1) b.insert(points_[std::countr_zero(s)]);
        return b.rank();
    }

    /// Mask of the given points; throws std::domain_error if one is missing.
    [[nodiscard]] element_set mask_of(std::span<const point_t> pts) const {
        element_set s = 0;
        for (point_t p : pts) {
            auto i = index_of(p);
            if (!i) throw std::domain_error("point " + std::to_string(p) + " is not an element of the matroid");
            s |= element_set{1} << *i;
        }
        return s;
    }

    [[nodiscard]] element_set mask_of(std::initializer_list<point_t> pts) const {
        return mask_of(std::span<const point_t>(pts.begin(), pts.size()));
    }

    void check_subset(element_set s) const {
        if (s & ~ground()) throw std::domain_error("element set is not a subset of the ground set");
    }

    friend bool operator==(const binary_matroid& a, const binary_matroid& b) noexcept {
        return a.ambient_rank_ == b.ambient_rank_ && a.points_ == b.points_;
    }

private:
    int ambient_rank_ = 0;
    int rank_ = 0;
    std::vector<point_t> points_;
    std::vector<std::string> labels_;
};

struct flat {
    element_set elements = 0;
    int rank = 0;
    friend bool operator==(const flat&, const flat&) = default;
};

/// Closure of `x`: every element in the span of `x`.
inline flat closure(const binary_matroid& m, element_set x) {
    m.check_subset(x);
    xor_basis b;
    for (element_set s = x; s != 0; s &= s - 1) b.insert(m.points()[std::countr_zero(s)]);
    element_set out = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (b.contains(m.points()[i])) out |= element_set{1} << i;
    return {out, b.rank()};
}

inline flat closure(const binary_matroid& m, std::span<const point_t> x) { return closure(m, m.mask_of(x)); }

/// All flats, grouped by rank, each group ascending by element mask. Built by
/// iterated covers starting from the closure of the empty set.
inline std::vector<std::vector<flat>> flats(const binary_matroid& m) {
    std::vector<std::vector<flat>> by_rank(static_cast<std::size_t>(m.rank()) + 1);
    by_rank[0].push_back(closure(m, 0));
    for (int k = 0; k < m.rank(); ++k) {
        std::unordered_set<element_set> seen;
        for (const flat& f : by_rank[k]) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                const element_set bit = element_set{1} << i;
                if (f.elements & bit) continue;
                flat g = closure(m, f.elements | bit);
                if (seen.insert(g.elements).second) by_rank[k + 1].push_back(g);
            }
        }
        std::sort(by_rank[k + 1].begin(), by_rank[k + 1].end(),
                  [](const flat& a, const flat& b) { return a.elements < b.elements; });
    }
    return by_rank;
}

inline std::vector<flat> hyperplanes(const binary_matroid& m) {
    if (m.rank() == 0) return {};
    return flats(m)[m.rank() - 1];
}

/// M|S, keeping the ambient space.
inline binary_matroid restrict_to(const binary_matroid& m, element_set s) {
    m.check_subset(s);
    std::vector<point_t> pts;
    std::vector<std::string> labels;
    for (element_set t = s; t != 0; t &= t - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(t));
        pts.push_back(m.points()[i]);
        if (m.has_labels()) labels.push_back(m.labels()[i]);
    }
    return binary_matroid(m.ambient_rank(), std::move(pts), std::move(labels));
}

inline binary_matroid delete_elements(const binary_matroid& m, element_set s) {
    m.check_subset(s);
    return restrict_to(m, m.ground() & ~s);
}

/// Fate of one source element under contraction followed by simplification.
struct element_fate {
    point_t source = 0;
    std::optional<point_t> image;  // nullopt: became a loop
    bool representative = false;   // false for loops and for non-minimal members of a parallel class
};

struct element_map {
    std::vector<element_fate> entries;  // one per source element, in source order

    [[nodiscard]] const element_fate* find(point_t source) const {
        for (const auto& e : entries)
            if (e.source == source) return &e;
        return nullptr;
    }
};

struct contraction {
    binary_matroid matroid;
    element_map map;
};

/// si(M/X). Each parallel class of the quotient is represented by its
/// smallest source point; that point's label (if any) is kept.
inline contraction contract_simplify(const binary_matroid& m, element_set x) {
    m.check_subset(x);
    const auto kernel = m.points_of(x);
    const quotient_map q(kernel, m.ambient_rank());
    element_map map;
    std::vector<point_t> pts;
    std::vector<std::string> labels;
    std::vector<point_t> taken;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const point_t img = q(m.points()[i]);
        element_fate fate{m.points()[i], std::nullopt, false};
        if (img != 0) {
            fate.image = img;
            // Sources are ascending, so the first hit is the smallest source.
            if (std::find(taken.begin(), taken.end(), img) == taken.end()) {
                taken.push_back(img);
                fate.representative = true;
                pts.push_back(img);
                if (m.has_labels()) labels.push_back(m.labels()[i]);
            }
        }
        map.entries.push_back(fate);
    }
    return {binary_matroid(q.target_rank(), std::move(pts), std::move(labels)), std::move(map)};
}

inline contraction contract_simplify(const binary_matroid& m, std::span<const point_t> x) {
    return contract_simplify(m, m.mask_of(x));
}

/// M re-expressed in coordinates of the greedy basis of its own points, so
/// that ambient_rank() == rank(). Labels follow their points.
inline binary_matroid reembed(const binary_matroid& m) {
    const auto basis = gf2_basis::greedy(m.points());
    std::vector<point_t> pts;
    pts.reserve(m.size());
    for (point_t p : m.points()) pts.push_back(basis.coordinates(p));
    return binary_matroid(m.rank(), std::move(pts), m.labels());
}

/// An ordered column list that may contain zero or repeated columns; used
/// for duals of matroids that are not cosimple.
struct column_matroid {
    int rank = 0;                  // ambient rank of the columns
    std::vector<point_t> columns;  // column i represents element i
};

/// Dual representation in element order: with M's points written as
/// [I_k | A] over a greedy basis, column i of the result is column i of
/// [A^T | I_(n-k)] permuted back to M's element order.
inline column_matroid dual_columns(const binary_matroid& m) {
    const auto basis = gf2_basis::greedy(m.points());
    const int k = basis.size();
    const int n = static_cast<int>(m.size());
    std::vector<int> basis_pos(n, -1);
    std::vector<int> nonbasis_pos(n, -1);
    int next_nb = 0;
    {
        int bi = 0;
        for (int i = 0; i < n; ++i) {
            if (bi < k && m.points()[i] == basis.vectors()[bi])
                basis_pos[i] = bi++;
            else
                nonbasis_pos[i] = next_nb++;
        }
    }
    column_matroid out{n - k, std::vector<point_t>(n, 0)};
    for (int i = 0; i < n; ++i) {
        if (nonbasis_pos[i] >= 0) {
            out.columns[i] = point_t{1} << nonbasis_pos[i];
            const point_t coord = basis.coordinates(m.points()[i]);
            for (int j = 0; j < n; ++j)
                if (basis_pos[j] >= 0 && (coord >> basis_pos[j] & 1u)) out.columns[j] |= point_t{1} << nonbasis_pos[i];
        }
    }
    return out;
}

/// The dual as a simple binary matroid. Throws std::domain_error when M has
/// a coloop or a series pair (the dual then has a loop or a parallel pair).
/// Labels follow elements; unlabeled inputs get labels "0".."n-1" so the
/// element correspondence stays visible.
inline binary_matroid dual(const binary_matroid& m) {
    auto cols = dual_columns(m);
    std::vector<std::string> labels = m.labels();
    if (labels.empty())
        for (std::size_t i = 0; i < m.size(); ++i) labels.push_back(std::to_string(i));
    for (point_t c : cols.columns)
        if (c == 0) throw std::domain_error("dual: matroid has a coloop, dual is not simple");
    auto sorted = cols.columns;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::domain_error("dual: matroid has a series pair, dual is not simple");
    return binary_matroid(cols.rank, std::move(cols.columns), std::move(labels));
}

inline bool is_cosimple(const binary_matroid& m) {
    auto cols = dual_columns(m).columns;
    if (std::find(cols.begin(), cols.end(), point_t{0}) != cols.end()) return false;
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

namespace detail {

inline int rank_of_columns(std::span<const point_t> cols, element_set s) {
    xor_basis b;
    for (; s != 0; s &= s - 1) b.insert(cols[std::countr_zero(s)]);
    return b.rank();
}

}  // namespace detail

/// All circuits of a column list (minimal zero-sum subsets), optionally only
/// those with at most `max_size` elements. Enumerates the cycle space.
inline std::vector<element_set> circuits_of_columns(std::span<const point_t> cols,
                                                    std::optional<int> max_size = std::nullopt) {
    const std::size_t n = cols.size();
    if (n > max_elements) throw std::domain_error("circuits: more than 64 columns");
    // Fundamental circuits against a greedy basis span the cycle space.
    std::vector<element_set> fundamentals;
    gf2_basis basis;
    std::vector<std::size_t> basis_index;
    {
        xor_basis eb;
        std::vector<point_t> kept;
        for (std::size_t i = 0; i < n; ++i)
            if (eb.insert(cols[i])) {
                kept.push_back(cols[i]);
                basis_index.push_back(i);
            }
        basis = gf2_basis(std::move(kept));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (std::find(basis_index.begin(), basis_index.end(), i) != basis_index.end()) continue;
        element_set c = element_set{1} << i;
        const point_t coord = basis.coordinates(cols[i]);
        for (std::size_t j = 0; j < basis_index.size(); ++j)
            if (coord >> j & 1u) c |= element_set{1} << basis_index[j];
        fundamentals.push_back(c);
    }
    const std::size_t dim = fundamentals.size();
    if (dim > 40) throw std::domain_error("circuits: cycle space too large to enumerate");
    std::vector<element_set> out;
    element_set cur = 0;
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t g = 1; g < total; ++g) {
        // Gray code: flip the fundamental circuit at the lowest set bit of g.
        cur ^= fundamentals[std::countr_zero(g)];
        const int sz = popcount(cur);
        if (max_size && sz > *max_size) continue;
        if (detail::rank_of_columns(cols, cur) == sz - 1) out.push_back(cur);
    }
    std::sort(out.begin(), out.end(), [](element_set a, element_set b) {
        const int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

inline std::vector<element_set> circuits(const binary_matroid& m, std::optional<int> max_size = std::nullopt) {
    return circuits_of_columns(m.points(), max_size);
}

/// A partition (a, b) of the ground set with connectivity order
/// r(a) + r(b) - r(M).
struct separation {
    element_set a = 0;
    element_set b = 0;
    int lambda = 0;
};

namespace detail {

/// Calls `visit(a, rank_a, rank_b)` for every partition (a, E - a) with
/// element 0 in a whose order r(a) + r(b) - r(M) is at most `max_lambda`.
/// Ranks only grow as elements are placed, so partial orders above the bound
/// prune whole subtrees. `visit` returns false to stop.
template <class Visit>
bool for_each_low_order_partition(const binary_matroid& m, int max_lambda, Visit&& visit) {
    const std::size_t n = m.size();
    if (n == 0) return true;
    const int limit = m.rank() + max_lambda;
    bool keep_going = true;
    auto rec = [&](auto&& self, std::size_t i, const xor_basis& a, const xor_basis& b, element_set amask) -> void {
        if (!keep_going) return;
        if (a.rank() + b.rank() > limit) return;
        if (i == n) {
            if (!visit(amask, a.rank(), b.rank())) keep_going = false;
            return;
        }
        const point_t p = m.points()[i];
        {
            xor_basis a2 = a;
            a2.insert(p);
            self(self, i + 1, a2, b, amask | (element_set{1} << i));
        }
        if (i > 0) {
            xor_basis b2 = b;
            b2.insert(p);
            self(self, i + 1, a, b2, amask);
        }
    };
    rec(rec, 0, xor_basis{}, xor_basis{}, 0);
    return keep_going;
}

}  // namespace detail

struct connectivity_info {
    bool connected = true;
    bool three_connected = true;
    std::optional<separation> witness;  // a 1-separation, or else a 2-separation
};

/// Connectivity by partition enumeration. The empty matroid is connected.
inline connectivity_info connectivity(const binary_matroid& m) {
    connectivity_info info;
    const element_set all = m.ground();
    detail::for_each_low_order_partition(m, 0, [&](element_set a, int ra, int rb) {
        const element_set b = all & ~a;
        if (b == 0) return true;
        info.connected = false;
        info.three_connected = false;
        info.witness = separation{a, b, ra + rb - m.rank()};
        return false;
    });
    if (!info.connected) return info;
    detail::for_each_low_order_partition(m, 1, [&](element_set a, int ra, int rb) {
        const element_set b = all & ~a;
        if (popcount(a) < 2 || popcount(b) < 2) return true;
        info.three_connected = false;
        info.witness = separation{a, b, ra + rb - m.rank()};
        return false;
    });
    return info;
}

inline bool is_connected(const binary_matroid& m) { return connectivity(m).connected; }
inline bool is_three_connected(const binary_matroid& m) { return connectivity(m).three_connected; }

/// Vertical k-separations: partitions with order <= k - 1 and both sides of
/// rank >= k. Each unordered partition is reported once, with element 0 in a.
inline std::vector<separation> vertical_separations(const binary_matroid& m, int k) {
    std::vector<separation> out;
    if (k < 1 || k > m.rank()) return out;
    const element_set all = m.ground();
    detail::for_each_low_order_partition(m, k - 1, [&](element_set a, int ra, int rb) {
        if (ra >= k && rb >= k) out.push_back({a, all & ~a, ra + rb - m.rank()});
        return true;
    });
    return out;
}

/// Roundness straight from the definition: no vertical k-separation for any
/// k >= 1.
inline bool is_round_by_definition(const binary_matroid& m) {
    bool round = true;
    // A vertical k-separation has order <= k - 1 < min(r(a), r(b)).
    detail::for_each_low_order_partition(m, std::max(0, m.rank() - 1), [&](element_set a, int ra, int rb) {
        if (a == m.ground()) return true;
        const int lambda = ra + rb - m.rank();
        const int k = std::min(ra, rb);
        if (k >= 1 && lambda <= k - 1) {
            round = false;
            return false;
        }
        return true;
    });
    return round;
}

/// Roundness via cocircuits: M is round iff every cocircuit is spanning.
/// Agreement with is_round_by_definition is checked by the verify registry.
inline bool is_round(const binary_matroid& m) {
    for (const flat& h : hyperplanes(m))
        if (m.rank_of(m.ground() & ~h.elements) != m.rank()) return false;
    return true;
}

using triangle = std::array<point_t, 3>;

/// All triangles {a, b, a+b}, each listed once in ascending order.
inline std::vector<triangle> triangles(const binary_matroid& m) {
    std::vector<triangle> out;
    const auto& p = m.points();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const point_t c = p[i] ^ p[j];
            if (c > p[j] && m.contains(c)) out.push_back({p[i], p[j], c});
        }
    return out;
}

/// Triangles through `e`; throws std::domain_error if `e` is not an element.
inline std::vector<triangle> triangles(const binary_matroid& m, point_t e) {
    if (!m.contains(e)) throw std::domain_error("triangles: unknown element");
    std::vector<triangle> out;
    for (point_t a : m.points()) {
        const point_t b = a ^ e;
        if (a == e || a > b || !m.contains(b)) continue;
        triangle t{e, a, b};
        std::sort(t.begin(), t.end());
        out.push_back(t);
    }
    return out;
}

inline bool is_triangle_free(const binary_matroid& m) {
    const auto& p = m.points();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (m.contains(p[i] ^ p[j])) return false;
    return true;
}

/// Every circuit with at least four elements has a chord in its closure.
/// Scans flats: a chordless circuit is a flat F with |F| = r(F) + 1 whose
/// points sum to zero.
inline bool is_chordal(const binary_matroid& m) {
    for (const auto& level : flats(m))
        for (const flat& f : level) {
            if (f.rank < 3 || popcount(f.elements) != f.rank + 1) continue;
            point_t sum = 0;
            for (element_set t = f.elements; t != 0; t &= t - 1) sum ^= m.points()[std::countr_zero(t)];
            if (sum == 0) return false;
        }
    return true;
}

/// Cocircuits are complements of hyperplanes.
inline std::vector<element_set> cocircuits(const binary_matroid& m) {
    std::vector<element_set> out;
    for (const flat& h : hyperplanes(m)) out.push_back(m.ground() & ~h.elements);
    return out;
}

}  // namespace bmat
