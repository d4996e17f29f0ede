#pragma once

// Linear algebra over GF(2) with vectors packed into machine words.
//
// A vector of F_2^r is stored as an unsigned integer whose bit i is the
// coefficient of basis vector i + 1. Every routine here works on whole words,
// so elimination over r <= 32 coordinates costs O(r) word operations per
// vector.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace bmat {

using point_t = std::uint32_t;

inline constexpr int max_ambient_rank = 31;

/// Highest set bit of a nonzero vector, counted from 0.
inline int leading_bit(point_t v) noexcept { return 31 - std::countl_zero(v); }

/// Incremental XOR basis indexed by leading bit. Each stored vector has a
/// distinct leading bit, which makes membership a single downward sweep.
class xor_basis {
public:
    xor_basis() { rows_.fill(0); }

    /// Reduces `v` against the basis; zero iff `v` lies in the span.
    [[nodiscard]] point_t reduce(point_t v) const noexcept {
        while (v != 0) {
            const int b = leading_bit(v);
            if (rows_[b] == 0) return v;
            v ^= rows_[b];
        }
        return 0;
    }

    /// Adds `v`; returns false when `v` was already in the span.
    bool insert(point_t v) noexcept {
        v = reduce(v);
        if (v == 0) return false;
        rows_[leading_bit(v)] = v;
        ++rank_;
        return true;
    }

    [[nodiscard]] bool contains(point_t v) const noexcept { return reduce(v) == 0; }
    [[nodiscard]] int rank() const noexcept { return rank_; }

private:
    std::array<point_t, 32> rows_{};
    int rank_ = 0;
};

/// Dimension of the GF(2) span of `points`.
inline int rank_of(std::span<const point_t> points) {
    xor_basis basis;
    for (point_t p : points) {
        basis.insert(p);
        if (basis.rank() == 32) break;
    }
    return basis.rank();
}

inline int rank_of(std::initializer_list<point_t> points) {
    return rank_of(std::span<const point_t>(points.begin(), points.size()));
}

/// True iff `v` is a GF(2) combination of `generators`. The zero vector is in
/// every span.
inline bool in_span(point_t v, std::span<const point_t> generators) {
    xor_basis basis;
    for (point_t g : generators) basis.insert(g);
    return basis.contains(v);
}

inline bool in_span(point_t v, std::initializer_list<point_t> generators) {
    return in_span(v, std::span<const point_t>(generators.begin(), generators.size()));
}

/// All 2^r - 1 nonzero vectors of F_2^r in ascending order: the points of
/// PG(r-1, 2).
inline std::vector<point_t> pg_points(int r) {
    if (r < 0 || r > max_ambient_rank) throw std::domain_error("pg_points: rank out of range");
    std::vector<point_t> out;
    if (r == 0) return out;
    const point_t top = (point_t{1} << r) - 1;
    out.reserve(top);
    for (point_t v = 1; v <= top; ++v) out.push_back(v);
    return out;
}

/// Every vector of the span of `generators`, including zero, ascending.
inline std::vector<point_t> span_of(std::span<const point_t> generators) {
    std::vector<point_t> basis;
    xor_basis eb;
    for (point_t g : generators)
        if (eb.insert(g)) basis.push_back(g);
    std::vector<point_t> out(std::size_t{1} << basis.size(), 0);
    for (std::size_t mask = 1; mask < out.size(); ++mask) {
        const int low = std::countr_zero(mask);
        out[mask] = out[mask & (mask - 1)] ^ basis[low];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Ordered linearly independent vectors with coordinate lookup.
class gf2_basis {
public:
    gf2_basis() = default;

    /// Throws std::domain_error if `vectors` is dependent.
    explicit gf2_basis(std::vector<point_t> vectors) : vectors_(std::move(vectors)) {
        for (std::size_t i = 0; i < vectors_.size(); ++i)
            if (!add_row(vectors_[i], point_t{1} << i))
                throw std::domain_error("gf2_basis: vectors are linearly dependent");
    }

    /// Greedy basis: scans `points` in order and keeps each one that is
    /// independent of those kept so far.
    static gf2_basis greedy(std::span<const point_t> points) {
        std::vector<point_t> kept;
        xor_basis eb;
        for (point_t p : points)
            if (eb.insert(p)) kept.push_back(p);
        return gf2_basis(std::move(kept));
    }

    [[nodiscard]] const std::vector<point_t>& vectors() const noexcept { return vectors_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(vectors_.size()); }

    /// Coordinates of `v` in this basis (bit i = coefficient of vectors()[i]).
    /// Throws std::domain_error if `v` is outside the span.
    [[nodiscard]] point_t coordinates(point_t v) const {
        point_t coord = 0;
        while (v != 0) {
            const auto& r = rows_[leading_bit(v)];
            if (r.vec == 0) throw std::domain_error("gf2_basis: vector outside span");
            v ^= r.vec;
            coord ^= r.coord;
        }
        return coord;
    }

    [[nodiscard]] bool spans(point_t v) const noexcept {
        while (v != 0) {
            const auto& r = rows_[leading_bit(v)];
            if (r.vec == 0) return false;
            v ^= r.vec;
        }
        return true;
    }

    /// Inverse of coordinates().
    [[nodiscard]] point_t combine(point_t coord) const noexcept {
        point_t v = 0;
        for (std::size_t i = 0; coord != 0; ++i, coord >>= 1)
            if (coord & 1u) v ^= vectors_[i];
        return v;
    }

private:
    struct row {
        point_t vec = 0;
        point_t coord = 0;
    };

    bool add_row(point_t v, point_t coord) {
        while (v != 0) {
            auto& r = rows_[leading_bit(v)];
            if (r.vec == 0) {
                r = {v, coord};
                return true;
            }
            v ^= r.vec;
            coord ^= r.coord;
        }
        return false;
    }

    std::vector<point_t> vectors_;
    std::array<row, 32> rows_{};
};

/// Linear surjection F_2^r -> F_2^(r - rank X) whose kernel is span(X).
///
/// Vectors are reduced against a fully reduced echelon basis of span(X); the
/// surviving non-pivot coordinates are packed into consecutive low bits.
class quotient_map {
public:
    quotient_map(std::span<const point_t> kernel, int ambient_rank) : ambient_rank_(ambient_rank) {
        if (ambient_rank < 0 || ambient_rank > max_ambient_rank)
            throw std::domain_error("quotient_map: ambient rank out of range");
        // Collect echelon rows and fully reduce them so each pivot bit
        // appears in exactly one row.
        std::vector<point_t> rows;
        for (point_t x : kernel) {
            point_t r = x;
            for (point_t existing : rows)
                if (r & (point_t{1} << leading_bit(existing))) r ^= existing;
            if (r == 0) continue;
            const point_t pivot = point_t{1} << leading_bit(r);
            for (point_t& existing : rows)
                if (existing & pivot) existing ^= r;
            rows.push_back(r);
        }
        rows_ = std::move(rows);
        point_t pivots = 0;
        for (point_t r : rows_) pivots |= point_t{1} << leading_bit(r);
        for (int b = 0; b < ambient_rank; ++b)
            if (!(pivots & (point_t{1} << b))) free_bits_.push_back(b);
    }

    [[nodiscard]] point_t operator()(point_t v) const noexcept {
        for (point_t r : rows_)
            if (v & (point_t{1} << leading_bit(r))) v ^= r;
        point_t out = 0;
        for (std::size_t i = 0; i < free_bits_.size(); ++i)
            if (v & (point_t{1} << free_bits_[i])) out |= point_t{1} << i;
        return out;
    }

    [[nodiscard]] int source_rank() const noexcept { return ambient_rank_; }
    [[nodiscard]] int target_rank() const noexcept { return static_cast<int>(free_bits_.size()); }

private:
    int ambient_rank_;
    std::vector<point_t> rows_;
    std::vector<int> free_bits_;
};

}  // namespace bmat
