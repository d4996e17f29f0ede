#pragma once

// Theorem checks about M(K4) as an induced minor.

#include <set>

#include "verify_core.hpp"

namespace bmat::checks {

namespace k4 {

inline bool has_k4(const binary_matroid& m) { return has_induced_minor(m, standard_pattern("MK4")).has_value(); }

// Flats of M whose restriction is a projective geometry, grouped by rank.
inline std::vector<std::vector<element_set>> projective_flats(const binary_matroid& m) {
    std::vector<std::vector<element_set>> out;
    const auto fl = flats(m);
    for (std::size_t k = 0; k < fl.size(); ++k) {
        out.emplace_back();
        for (const flat& f : fl[k])
            if (popcount(f.elements) == (1 << k) - 1) out.back().push_back(f.elements);
    }
    return out;
}

// All linear bijections from the flat f1 of a onto the flat f2 of b, given as
// glue maps; both flats are projective of the same rank.
inline std::vector<glue_map> glue_maps(const binary_matroid& a, element_set f1, const binary_matroid& b, element_set f2) {
    const auto p1 = a.points_of(f1);
    const auto p2 = b.points_of(f2);
    const auto basis = gf2_basis::greedy(p1);
    const int k = basis.size();
    std::vector<glue_map> out;
    std::vector<point_t> images;
    auto rec = [&](auto&& self, xor_basis span) -> void {
        if (static_cast<int>(images.size()) == k) {
            glue_map g;
            for (point_t x : p1) {
                const point_t c = basis.coordinates(x);
                point_t y = 0;
                for (int i = 0; i < k; ++i)
                    if (c >> i & 1u) y ^= images[static_cast<std::size_t>(i)];
                g.emplace_back(x, y);
            }
            out.push_back(std::move(g));
            return;
        }
        for (point_t y : p2) {
            if (span.contains(y)) continue;
            xor_basis next = span;
            next.insert(y);
            images.push_back(y);
            self(self, next);
            images.pop_back();
        }
    };
    rec(rec, xor_basis{});
    return out;
}

// Every generalized parallel connection of a and b across a projective flat
// whose result stays within the caps, up to isomorphism.
inline std::set<canonical_form> gpc_results(const binary_matroid& a, const binary_matroid& b, int max_rank,
                                            int max_elements) {
    std::set<canonical_form> out;
    const auto pa = projective_flats(a);
    const auto pb = projective_flats(b);
    for (std::size_t k = 0; k < std::min(pa.size(), pb.size()); ++k) {
        const int rank = a.rank() + b.rank() - static_cast<int>(k);
        const int size = static_cast<int>(a.size() + b.size()) - ((1 << k) - 1);
        if (rank > max_rank || size > max_elements) continue;
        for (element_set f1 : pa[k])
            for (element_set f2 : pb[k])
                for (const auto& g : glue_maps(a, f1, b, f2)) out.insert(canonicalize(gpc_across_pg(a, b, g)));
    }
    return out;
}

}  // namespace k4

/// Closure of PG(-1..3, 2) under generalized parallel connections across
/// projective geometries (empty flat included) up to 15 elements, compared
/// with the enumerated members of EXIM(C4, K4).
inline check_outcome gpc_closure_matches_c4_k4(const enumeration_scope& s, verify_context& ctx) {
    constexpr int cap = 15;
    const int max_rank = s.max_rank;
    const int max_size = std::min(cap, s.max_elements);
    std::set<canonical_form> gen;
    for (int k = -1; k <= 3 && k + 1 <= max_rank; ++k) {
        auto pg = projective_geometry(k);
        if (static_cast<int>(pg.size()) <= max_size) gen.insert(canonicalize(pg));
    }
    // Fixpoint: combine every pair until nothing new appears.
    std::vector<canonical_form> members(gen.begin(), gen.end());
    for (std::size_t done = 0; done < members.size(); ++done) {
        const auto a = members[done].to_matroid();
        std::vector<std::set<canonical_form>> found(done + 1);
        parallel_for(done + 1, ctx.jobs(), [&](std::size_t j) {
            found[j] = k4::gpc_results(a, members[j].to_matroid(), max_rank, max_size);
        });
        for (auto& f : found)
            for (const auto& g : f)
                if (gen.insert(g).second) members.push_back(g);
    }

    check_outcome out;
    const auto pats = standard_patterns({"MC4", "MK4"});
    std::vector<std::optional<json>> bad(members.size());
    parallel_for(members.size(), ctx.jobs(), [&](std::size_t i) {
        const auto m = members[i].to_matroid();
        const auto ex = exim_member(m, pats);
        if (!ex.member) bad[i] = json{{"side", "generated_not_in_class"}, {"exim", bmat::detail::exim_json(m, ex)}};
    });
    for (std::size_t i = 0; i < members.size(); ++i)
        if (bad[i]) out.violations.push_back({to_json(members[i].to_matroid()), std::move(*bad[i])});

    auto pop = ctx.population(s);
    std::erase_if(pop, [&](const binary_matroid& m) { return static_cast<int>(m.size()) > max_size; });
    auto side = bmat::detail::collect(pop, ctx.jobs(), [&](const binary_matroid& m) -> std::optional<json> {
        if (!exim_member(m, pats).member || gen.count(canonicalize(m))) return std::nullopt;
        return json{{"side", "class_member_not_generated"}};
    });
    out.population = members.size() + side.population;
    for (auto& v : side.violations) out.violations.push_back(std::move(v));
    return out;
}

/// 3-connected M with e such that neither M nor M\e has an M(K4) induced
/// minor: every other element lies in a triangle with e.
inline check_outcome triangle_through_e(const enumeration_scope& s, verify_context& ctx) {
    return bmat::detail::collect(ctx.population(s), ctx.jobs(), [](const binary_matroid& m) -> std::optional<json> {
        if (m.empty() || !is_three_connected(m) || k4::has_k4(m)) return std::nullopt;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const point_t e = m.points()[i];
            if (k4::has_k4(delete_elements(m, element_set{1} << i))) continue;
            for (point_t f : m.points())
                if (f != e && !m.contains(e ^ f))
                    return json{{"e", column_string(e, m.ambient_rank())}, {"f", column_string(f, m.ambient_rank())}};
        }
        return std::nullopt;
    });
}

/// If M/e (unsimplified) has a basis of elements in 2-circuits and an element
/// in no 2-circuit, M has a spike with tip and cotip as an induced minor.
/// M(K4) is then an induced minor too.
inline check_outcome spike_from_parallel_basis(const enumeration_scope& s, verify_context& ctx) {
    return bmat::detail::collect(ctx.population(s), ctx.jobs(), [](const binary_matroid& m) -> std::optional<json> {
        if (m.rank() < 3) return std::nullopt;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const point_t e = m.points()[i];
            xor_basis span;
            span.insert(e);
            bool lonely = false;
            for (point_t y : m.points()) {
                if (y == e) continue;
                if (m.contains(y ^ e))
                    span.insert(y);
                else
                    lonely = true;
            }
            if (!lonely || span.rank() != m.rank()) continue;
            bool spike_found = false;
            for (int r = 3; r <= m.rank() && !spike_found; ++r)
                spike_found = has_induced_minor(m, spike(r, true)).has_value();
            const bool k4_found = k4::has_k4(m);
            if (!spike_found || !k4_found)
                return json{{"e", column_string(e, m.ambient_rank())}, {"spike", spike_found}, {"MK4", k4_found}};
        }
        return std::nullopt;
    });
}

/// An element on a triangle with every other element, together with an
/// M(K4) flat F, spans a rank-4 flat isomorphic to PG(3,2) minus two points.
inline check_outcome coning_point_with_k4_flat(const enumeration_scope& s, verify_context& ctx) {
    const auto pg_minus_two = [] {
        auto pts = pg_points(4);
        pts.resize(pts.size() - 2);
        return canonicalize(binary_matroid(4, pts));
    }();
    const auto& k4form = standard_pattern("MK4").form;
    return bmat::detail::collect(ctx.population(s), ctx.jobs(), [&](const binary_matroid& m) -> std::optional<json> {
        if (m.rank() < 4) return std::nullopt;
        std::vector<element_set> k4_flats;
        const auto all_flats = flats(m);
        for (const flat& f : all_flats[3])
            if (popcount(f.elements) == 6 && canonicalize(restrict_to(m, f.elements)) == k4form)
                k4_flats.push_back(f.elements);
        if (k4_flats.empty()) return std::nullopt;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const point_t x = m.points()[i];
            const bool coning = std::all_of(m.points().begin(), m.points().end(),
                                            [&](point_t y) { return y == x || m.contains(x ^ y); });
            if (!coning) continue;
            for (element_set f : k4_flats) {
                const flat c = closure(m, f | element_set{1} << i);
                if (canonicalize(restrict_to(m, c.elements)) != pg_minus_two)
                    return json{{"x", column_string(x, m.ambient_rank())},
                                {"flat", bmat::detail::columns_json(m, f)}};
            }
        }
        return std::nullopt;
    });
}

/// Saturating the lines through one element keeps EXIM(K4) members in the
/// class.
inline check_outcome line_saturation_keeps_no_k4(const enumeration_scope& s, verify_context& ctx) {
    return bmat::detail::collect(ctx.population(s), ctx.jobs(), [](const binary_matroid& m) -> std::optional<json> {
        if (k4::has_k4(m)) return std::nullopt;
        for (point_t x : m.points()) {
            const auto n = line_saturate(m, x);
            if (k4::has_k4(n)) return json{{"x", column_string(x, m.ambient_rank())}, {"result", to_json(n)}};
        }
        return std::nullopt;
    });
}

/// EXIM(K4) members of rank <= 3 stay in the class under generalized
/// parallel connection across projective geometries and under tipped coning.
/// Triangle-free members also stay in it under tipless coning.
inline check_outcome no_k4_closed_under_constructions(const enumeration_scope& s, verify_context& ctx) {
    auto pop = ctx.population(s);
    std::erase_if(pop, [](const binary_matroid& m) { return m.rank() > 3 || k4::has_k4(m); });
    check_outcome out;
    out.population = pop.size();
    std::vector<std::vector<violation>> found(pop.size());
    parallel_for(pop.size(), ctx.jobs(), [&](std::size_t i) {
        const auto& a = pop[i];
        auto report = [&](const binary_matroid& result, const char* how) {
            found[i].push_back({to_json(result), json{{"construction", how}, {"source", to_json(a)}}});
        };
        if (auto t = cone(a, true).matroid; k4::has_k4(t)) report(t, "tipped_cone");
        if (is_triangle_free(a))
            if (auto t = cone(a, false).matroid; k4::has_k4(t)) report(t, "tipless_cone");
        for (std::size_t j = 0; j <= i; ++j)
            for (const auto& f : k4::gpc_results(a, pop[j], 2 * 3, 64))
                if (auto g = f.to_matroid(); k4::has_k4(g)) report(g, "gpc");
    });
    for (auto& f : found)
        for (auto& v : f) out.violations.push_back(std::move(v));
    return out;
}

/// In a 3-connected M, a vertical 3-separation (X, Y) whose sides share an
/// element of M gives (M|cl X) + G and (M|cl Y) + G as induced minors, where
/// G is the projective line common to both spans.
inline check_outcome vertical_three_separation_fill_in(const enumeration_scope& s, verify_context& ctx) {
    return bmat::detail::collect(ctx.population(s), ctx.jobs(), [](const binary_matroid& m) -> std::optional<json> {
        if (m.empty() || !is_three_connected(m)) return std::nullopt;
        for (const separation& sep : vertical_separations(m, 3)) {
            const flat cx = closure(m, sep.a);
            const flat cy = closure(m, sep.b);
            if ((cx.elements & cy.elements) == 0) continue;
            const auto sx = span_of(m.points_of(sep.a));
            const auto sy = span_of(m.points_of(sep.b));
            std::vector<point_t> common;
            std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(common));
            common.erase(common.begin());
            for (element_set side : {cx.elements, cy.elements}) {
                auto pts = m.points_of(side);
                pts.insert(pts.end(), common.begin(), common.end());
                std::sort(pts.begin(), pts.end());
                pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
                const binary_matroid filled(m.ambient_rank(), pts);
                if (!has_induced_minor(m, filled))
                    return json{{"side", bmat::detail::columns_json(m, side)},
                                {"common_line", bmat::detail::points_json(common, m.ambient_rank())}};
            }
        }
        return std::nullopt;
    });
}

}  // namespace bmat::checks
