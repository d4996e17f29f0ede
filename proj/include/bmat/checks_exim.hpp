#pragma once

// Checks of the excluded-induced-minor characterizations over enumerated
// populations.

#include "verify_core.hpp"

namespace bmat::checks {

inline check_outcome roundness_shortcut(const enumeration_scope& s, verify_context& ctx) {
    return detail::collect(ctx.population(s), ctx.jobs(), [](const binary_matroid& m) -> std::optional<json> {
        const bool fast = is_round(m);
        const bool slow = is_round_by_definition(m);
        if (fast == slow) return std::nullopt;
        return json{{"cocircuits_spanning", fast}, {"no_vertical_separation", slow}};
    });
}

inline check_outcome chordal_iff_no_c4(const enumeration_scope& s, verify_context& ctx) {
    const auto pats = standard_patterns({"MC4"});
    return detail::collect(ctx.population(s), ctx.jobs(), [&](const binary_matroid& m) -> std::optional<json> {
        const bool chordal = is_chordal(m);
        const auto ex = exim_member(m, pats);
        if (chordal == ex.member) return std::nullopt;
        return json{{"chordal", chordal}, {"exim", detail::exim_json(m, ex)}};
    });
}

inline check_outcome c4_f7_iff_chordal_regular(const enumeration_scope& s, verify_context& ctx) {
    const auto pats = standard_patterns({"MC4", "F7"});
    return detail::collect(ctx.population(s), ctx.jobs(), [&](const binary_matroid& m) -> std::optional<json> {
        const bool chordal = is_chordal(m);
        const bool regular = is_regular(m);
        const auto ex = exim_member(m, pats);
        if ((chordal && regular) == ex.member) return std::nullopt;
        return json{{"chordal", chordal}, {"regular", regular}, {"exim", detail::exim_json(m, ex)}};
    });
}

inline check_outcome k4_f7_iff_series_parallel(const enumeration_scope& s, verify_context& ctx) {
    const auto pats = standard_patterns({"MK4", "F7"});
    auto pop = ctx.population(s);
    std::erase_if(pop, [](const binary_matroid& m) { return !detail::nonempty_connected(m); });
    return detail::collect(pop, ctx.jobs(), [&](const binary_matroid& m) -> std::optional<json> {
        const bool sp = is_series_parallel(m);
        const auto ex = exim_member(m, pats);
        if (sp == ex.member) return std::nullopt;
        return json{{"series_parallel", sp}, {"exim", detail::exim_json(m, ex)}};
    });
}

inline check_outcome two_separated_has_c4_or_k4e(const enumeration_scope& s, verify_context& ctx) {
    const auto& c4 = standard_pattern("MC4");
    const auto& k4e = standard_pattern("MK4e");
    return detail::collect(ctx.population(s), ctx.jobs(), [&](const binary_matroid& m) -> std::optional<json> {
        if (m.size() < 5) return std::nullopt;
        const auto c = connectivity(m);
        if (!c.connected || c.three_connected) return std::nullopt;
        if (has_induced_minor(m, c4) || has_induced_minor(m, k4e)) return std::nullopt;
        return json{{"two_separation", detail::columns_json(m, c.witness->a)}};
    });
}

inline check_outcome c4_k4e_disconnected_or_round(const enumeration_scope& s, verify_context& ctx) {
    const auto pats = standard_patterns({"MC4", "MK4e"});
    const bool shortcut = ctx.roundness_shortcut_confirmed();
    return detail::collect(ctx.population(s), ctx.jobs(), [&](const binary_matroid& m) -> std::optional<json> {
        if (!exim_member(m, pats).member) return std::nullopt;
        if (!is_connected(m) || (shortcut ? is_round(m) : is_round_by_definition(m))) return std::nullopt;
        return json{{"connected", true}, {"round", false}};
    });
}

inline check_outcome connected_hyperplane_through_f_avoiding_g(const enumeration_scope& s, verify_context& ctx) {
    return detail::collect(ctx.population(s), ctx.jobs(), [](const binary_matroid& m) -> std::optional<json> {
        if (m.size() < 4 || !is_three_connected(m)) return std::nullopt;
        std::vector<element_set> good;
        for (const flat& h : hyperplanes(m))
            if (detail::nonempty_connected(restrict_to(m, h.elements))) good.push_back(h.elements);
        for (std::size_t f = 0; f < m.size(); ++f)
            for (std::size_t g = 0; g < m.size(); ++g) {
                if (f == g) continue;
                const bool found = std::any_of(good.begin(), good.end(),
                                               [&](element_set h) { return (h >> f & 1u) && !(h >> g & 1u); });
                if (!found)
                    return json{{"f", column_string(m.points()[f], m.ambient_rank())},
                                {"g", column_string(m.points()[g], m.ambient_rank())}};
            }
        return std::nullopt;
    });
}

inline check_outcome no_triads_without_k4(const enumeration_scope& s, verify_context& ctx) {
    const auto& k4 = standard_pattern("MK4");
    return detail::collect(ctx.population(s), ctx.jobs(), [&](const binary_matroid& m) -> std::optional<json> {
        if (m.empty() || !is_three_connected(m) || has_induced_minor(m, k4)) return std::nullopt;
        for (element_set c : cocircuits(m))
            if (popcount(c) == 3) return json{{"triad", detail::columns_json(m, c)}};
        return std::nullopt;
    });
}

namespace detail {

// Compares EXIM membership with a family description on nonempty connected
// members of the population.
template <class Describe>
check_outcome connected_class_matches(const enumeration_scope& s, verify_context& ctx, const pattern_set& pats,
                                      Describe&& describe) {
    auto pop = ctx.population(s);
    std::erase_if(pop, [](const binary_matroid& m) { return !bmat::detail::nonempty_connected(m); });
    return bmat::detail::collect(pop, ctx.jobs(), [&](const binary_matroid& m) -> std::optional<json> {
        const auto form = canonicalize(m);
        const bool listed = describe(m, form);
        const auto ex = exim_member(m, pats);
        if (listed == ex.member) return std::nullopt;
        return json{{"listed", listed}, {"shape", to_string(classify_shape(m))}, {"exim", bmat::detail::exim_json(m, ex)}};
    });
}

}  // namespace detail

inline check_outcome k4e_k4_connected_members(const enumeration_scope& s, verify_context& ctx) {
    return detail::connected_class_matches(
        s, ctx, standard_patterns({"MK4e", "MK4"}), [](const binary_matroid& m, const canonical_form& f) {
            return in_family(m, shape::projective_geometry, f) ||
                   (m.rank() >= 3 && in_family(m, shape::affine_geometry, f)) || in_family(m, shape::circuit, f);
        });
}

inline check_outcome k4e_f7_connected_members(const enumeration_scope& s, verify_context& ctx) {
    const auto f7_dual = canonicalize(named("F7*"));
    return detail::connected_class_matches(
        s, ctx, standard_patterns({"MK4e", "F7"}), [&](const binary_matroid& m, const canonical_form& f) {
            return f == f7_dual || in_family(m, shape::circuit, f) || in_family(m, shape::complete_graph_cycle, f);
        });
}

inline check_outcome c4_k4e_connected_members(const enumeration_scope& s, verify_context& ctx) {
    return detail::connected_class_matches(
        s, ctx, standard_patterns({"MC4", "MK4e"}), [](const binary_matroid& m, const canonical_form& f) {
            return in_family(m, shape::projective_geometry, f) || in_family(m, shape::pg_minus_point, f) ||
                   in_family(m, shape::complete_graph_cycle, f);
        });
}

}  // namespace bmat::checks
