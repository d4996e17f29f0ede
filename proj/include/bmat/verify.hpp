#pragma once

// Registry of theorem checks and the entry points that turn a check into a
// verification report.

#include <chrono>
#include <stdexcept>

#include "checks_coning.hpp"
#include "checks_exim.hpp"
#include "checks_k4.hpp"

namespace bmat {

/// Every registered check, in the order verify_all runs them.
inline const std::vector<theorem_check>& registry() {
    using namespace checks;
    static const std::vector<theorem_check> checks_list{
        {"T-roundness", "is_round agrees with the definition by vertical separations", roundness_shortcut},
        {"T-1.1", "GPC closure of projective geometries equals EXIM(M(C4), M(K4))", gpc_closure_matches_c4_k4},
        {"T-1.2", "connected EXIM(M(K4\\e), M(K4)): projective, affine (rank >= 3), circuits", k4e_k4_connected_members},
        {"T-1.3", "connected EXIM(M(K4\\e), F7): F7*, circuits, complete graphs", k4e_f7_connected_members},
        {"T-1.4", "connected EXIM(M(C4), M(K4\\e)): projective, projective minus a point, complete graphs",
         c4_k4e_connected_members},
        {"T-1.7", "3-connected, no M(K4) in M or M\\e: every element on a triangle with e", triangle_through_e},
        {"T-2.1", "chordal iff EXIM(M(C4))", chordal_iff_no_c4},
        {"T-2.2", "EXIM(M(C4), F7) iff chordal and regular", c4_f7_iff_chordal_regular},
        {"T-2.3", "connected EXIM(M(K4), F7) iff series-parallel", k4_f7_iff_series_parallel},
        {"T-2.4", "connected, not 3-connected, |E| >= 5: has M(C4) or M(K4\\e)", two_separated_has_c4_or_k4e},
        {"T-2.9", "EXIM(M(C4), M(K4\\e)) members are disconnected or round", c4_k4e_disconnected_or_round},
        {"T-2.11", "3-connected: a connected hyperplane contains f and avoids g",
         connected_hyperplane_through_f_avoiding_g},
        {"T-3.x", "coning laws and closure of tipped coning classes under induced minors", coning_laws},
        {"T-3.4", "closure of tipless coning classes under induced minors and induced restrictions", tipless_closure},
        {"T-3.5", "tipless conings starting from a point give affine geometries", tipless_chains_are_affine},
        {"T-3.6", "projective targets equal coning-sequence matroids", targets_are_coning_sequences},
        {"T-3.8", "one projective target per size", unique_target_per_size},
        {"T-4.2", "coning point and M(K4) flat span PG(3,2) minus two points", coning_point_with_k4_flat},
        {"T-4.3", "line saturation preserves EXIM(M(K4))", line_saturation_keeps_no_k4},
        {"T-4.6", "EXIM(M(K4)) closed under GPC across PG, tipped and tipless coning",
         no_k4_closed_under_constructions},
        {"T-4.8", "3-connected EXIM(M(K4)) members have no triads", no_triads_without_k4},
        {"T-4.9", "vertical 3-separation fill-in gives induced minors", vertical_three_separation_fill_in},
        {"T-4.10", "parallel basis in M/e forces a spike with tip and cotip and M(K4)", spike_from_parallel_basis},
    };
    return checks_list;
}

inline std::string canonical_theorem_id(const std::string& id) { return id == "T-4.11" ? "T-4.10" : id; }

inline const theorem_check& find_check(const std::string& id) {
    const std::string key = canonical_theorem_id(id);
    for (const auto& c : registry())
        if (c.id == key) return c;
    throw std::invalid_argument("unknown theorem id: " + id);
}

inline verification_report verify_theorem(const std::string& id, const enumeration_scope& scope, verify_context& ctx) {
    const theorem_check& check = find_check(id);
    scope.validate();
    const auto start = std::chrono::steady_clock::now();
    check_outcome outcome = check.run(scope, ctx);
    const auto stop = std::chrono::steady_clock::now();
    verification_report r;
    r.theorem_id = check.id;
    r.scope = scope;
    r.population = outcome.population;
    r.violations = std::move(outcome.violations);
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return r;
}

inline verification_report verify_theorem(const std::string& id, const enumeration_scope& scope, int jobs = 1) {
    verify_context ctx(jobs);
    return verify_theorem(id, scope, ctx);
}

inline std::vector<verification_report> verify_all(const enumeration_scope& scope, verify_context& ctx) {
    std::vector<verification_report> out;
    for (const auto& c : registry()) out.push_back(verify_theorem(c.id, scope, ctx));
    return out;
}

}  // namespace bmat
