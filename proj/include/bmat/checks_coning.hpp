#pragma once

// Checks of the coning laws, closure of coning classes under induced minors,
// and projective targets.

#include <map>
#include <set>

#include "verify_core.hpp"

namespace bmat::checks {

namespace coning {

// Hyperplane, contraction and flat-extension laws for A(N); returns the
// first failure.
inline std::optional<json> laws(const binary_matroid& n) {
    const auto coned = cone(n, true);
    const binary_matroid& a = coned.matroid;
    const point_t p = *coned.tip;
    const element_set pmask = element_set{1} << *a.index_of(p);
    const auto nform = canonicalize(n);
    const int r = a.ambient_rank();
    auto col = [&](point_t x) { return column_string(x, r); };

    std::vector<element_set> good;  // hyperplanes H with A|H isomorphic to N
    for (const flat& h : hyperplanes(a))
        if (static_cast<std::size_t>(popcount(h.elements)) == n.size() &&
            canonicalize(restrict_to(a, h.elements)) == nform)
            good.push_back(h.elements);

    element_set covered = 0;
    for (element_set h : good) covered |= h;
    if (const element_set missing = a.ground() & ~pmask & ~covered; missing != 0)
        return json{{"law", "a"}, {"element", col(a.points()[std::countr_zero(missing)])}};

    if (canonicalize(contract_simplify(a, pmask).matroid) != nform) return json{{"law", "b"}};

    for (std::size_t i = 0; i < a.size(); ++i) {
        const point_t e = a.points()[i];
        if (e == p) continue;
        const point_t x = e & ~p;
        const auto lhs = canonicalize(contract_simplify(a, element_set{1} << i).matroid);
        const auto rhs = canonicalize(cone(contract_simplify(n, n.mask_of(std::vector<point_t>{x})).matroid, true).matroid);
        if (lhs != rhs) return json{{"law", "c"}, {"element", col(e)}};
    }

    for (const auto& level : flats(a))
        for (const flat& f : level) {
            if (f.elements & pmask) continue;
            const bool extends = std::any_of(good.begin(), good.end(), [&](element_set h) {
                return !(h & pmask) && (f.elements & ~h) == 0;
            });
            if (!extends) return json{{"law", "d"}, {"flat", bmat::detail::columns_json(a, f.elements)}};
        }
    return std::nullopt;
}

// Closure of `seed` under tipped (and, if asked, tipless) conings, keeping
// ranks at most max_rank.
inline std::set<canonical_form> coning_closure(std::set<canonical_form> seed, int max_rank, bool tipless) {
    std::vector<canonical_form> work(seed.begin(), seed.end());
    while (!work.empty()) {
        const auto f = work.back();
        work.pop_back();
        if (f.rank + 1 > max_rank) continue;
        for (bool tipped : {true, false}) {
            if (!tipped && !tipless) continue;
            auto g = canonicalize(cone(f.to_matroid(), tipped).matroid);
            if (seed.insert(g).second) work.push_back(std::move(g));
        }
    }
    return seed;
}

inline std::set<canonical_form> flat_restriction_forms(const binary_matroid& m) {
    std::set<canonical_form> out;
    for (const auto& level : flats(m))
        for (const flat& f : level) out.insert(canonicalize(restrict_to(m, f.elements)));
    return out;
}

inline std::optional<json> first_outside(const std::set<canonical_form>& got, const std::set<canonical_form>& allowed,
                                         const char* what) {
    for (const auto& q : got)
        if (!allowed.count(q))
            return json{{"property", what}, {"induced_minor", to_json(q.to_matroid())}};
    return std::nullopt;
}

}  // namespace coning

/// Laws (a)-(d) for every N in scope, and for N of rank at most 3 closure of
/// the tipped-coning class under induced minors.
inline check_outcome coning_laws(const enumeration_scope& s, verify_context& ctx) {
    return bmat::detail::collect(ctx.population(s), ctx.jobs(), [](const binary_matroid& n) -> std::optional<json> {
        if (auto w = coning::laws(n)) return w;
        if (n.rank() > 3) return std::nullopt;
        const auto allowed = coning::coning_closure(induced_minor_forms(n), n.rank() + 1, false);
        return coning::first_outside(induced_minor_forms(cone(n, true).matroid), allowed, "induced_minor_closure");
    });
}

/// Induced minors of A(N)\p lie in the closure of the induced minors of N
/// under both conings; flats of A(N)\p lie in the tipless closure of the
/// flats of N.
inline check_outcome tipless_closure(const enumeration_scope& s, verify_context& ctx) {
    auto pop = ctx.population(s);
    std::erase_if(pop, [](const binary_matroid& m) { return m.rank() > 3; });
    return bmat::detail::collect(pop, ctx.jobs(), [](const binary_matroid& n) -> std::optional<json> {
        const binary_matroid b = cone(n, false).matroid;
        const auto both = coning::coning_closure(induced_minor_forms(n), n.rank() + 1, true);
        if (auto w = coning::first_outside(induced_minor_forms(b), both, "induced_minor_closure")) return w;
        std::set<canonical_form> seed;
        for (const auto& f : coning::flat_restriction_forms(n)) seed.insert(f);
        // Tipless-only closure.
        std::vector<canonical_form> work(seed.begin(), seed.end());
        while (!work.empty()) {
            const auto f = work.back();
            work.pop_back();
            if (f.rank + 1 > n.rank() + 1) continue;
            auto g = canonicalize(cone(f.to_matroid(), false).matroid);
            if (seed.insert(g).second) work.push_back(std::move(g));
        }
        return coning::first_outside(coning::flat_restriction_forms(b), seed, "induced_restriction_closure");
    });
}

/// "1" followed by k-1 zeros is AG(k-1, 2); zeros alone never leave the
/// empty matroid.
inline check_outcome tipless_chains_are_affine(const enumeration_scope& s, verify_context&) {
    check_outcome out;
    const int top = std::min(s.max_rank, 4);
    for (int k = 1; k <= top; ++k) {
        ++out.population;
        const std::string bits = "1" + std::string(static_cast<std::size_t>(k - 1), '0');
        const auto m = target_from_bits(bits);
        if (canonicalize(m) != canonicalize(affine_geometry(k - 1)))
            out.violations.push_back({to_json(m), json{{"bits", bits}, {"expected", "AG(" + std::to_string(k - 1) + ",2)"}}});
        binary_matroid z;
        for (int i = 0; i < k; ++i) z = cone(z, false).matroid;
        if (!z.empty()) out.violations.push_back({to_json(z), json{{"tipless_steps", k}}});
    }
    return out;
}

namespace coning {

// Every raw coning sequence of length <= len, including leading zeros.
inline std::vector<std::string> sequences(int len) {
    std::vector<std::string> out{""};
    for (int l = 1; l <= len; ++l)
        for (std::uint32_t v = 0; v < (1u << l); ++v) {
            std::string s;
            for (int i = l - 1; i >= 0; --i) s.push_back(static_cast<char>('0' + (v >> i & 1u)));
            out.push_back(s);
        }
    return out;
}

inline binary_matroid run_sequence(const std::string& bits) {
    binary_matroid m;
    for (char c : bits) m = cone(m, c == '1').matroid;
    return m;
}

}  // namespace coning

/// Targets among enumerated matroids of rank <= 4 equal the matroids built
/// by coning sequences of length <= 4, as sets of canonical forms.
inline check_outcome targets_are_coning_sequences(const enumeration_scope& s, verify_context& ctx) {
    const int len = std::min(s.max_rank, 4);
    check_outcome out;
    std::set<canonical_form> built;
    for (const auto& bits : coning::sequences(len)) {
        ++out.population;
        const auto m = coning::run_sequence(bits);
        if (static_cast<int>(m.size()) <= s.max_elements) built.insert(canonicalize(m));
    }
    const auto& pop = ctx.unfiltered(len, s.max_elements);
    std::vector<char> target(pop.size(), 0);
    parallel_for(pop.size(), ctx.jobs(), [&](std::size_t i) { target[i] = is_projective_target(pop[i]).has_value(); });
    out.population += pop.size();
    std::set<canonical_form> recognized;
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (target[i]) recognized.insert(canonicalize(pop[i]));
    for (const auto& f : recognized)
        if (!built.count(f)) out.violations.push_back({to_json(f.to_matroid()), json{{"side", "target_only"}}});
    for (const auto& f : built)
        if (!recognized.count(f)) out.violations.push_back({to_json(f.to_matroid()), json{{"side", "sequence_only"}}});
    return out;
}

/// Size law and uniqueness: every coning sequence of length <= min(5,
/// max_rank) with binary value n has n elements and all of them agree up to
/// isomorphism; among enumerated matroids the recognizer finds exactly one
/// target of each reachable size, isomorphic to the one built from bits.
inline check_outcome unique_target_per_size(const enumeration_scope& s, verify_context& ctx) {
    const int len = std::min(s.max_rank, 5);
    check_outcome out;
    std::map<std::uint64_t, std::set<canonical_form>> by_value;
    for (const auto& bits : coning::sequences(len)) {
        ++out.population;
        const auto m = coning::run_sequence(bits);
        std::uint64_t value = 0;
        for (char c : bits) value = 2 * value + static_cast<std::uint64_t>(c - '0');
        if (m.size() != value)
            out.violations.push_back({to_json(m), json{{"bits", bits}, {"size", m.size()}, {"value", value}}});
        if (static_cast<int>(value) <= s.max_elements) by_value[value].insert(canonicalize(m));
    }
    for (const auto& [value, forms] : by_value)
        if (forms.size() != 1)
            out.violations.push_back({to_json(forms.begin()->to_matroid()),
                                      json{{"value", value}, {"classes", forms.size()}}});

    const auto& pop = ctx.unfiltered(len, s.max_elements);
    std::vector<char> target(pop.size(), 0);
    parallel_for(pop.size(), ctx.jobs(), [&](std::size_t i) { target[i] = is_projective_target(pop[i]).has_value(); });
    out.population += pop.size();
    std::map<std::size_t, std::vector<std::size_t>> targets_by_size;
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (target[i]) targets_by_size[pop[i].size()].push_back(i);
    const std::size_t reach = std::min<std::size_t>((std::size_t{1} << len) - 1, static_cast<std::size_t>(s.max_elements));
    for (std::size_t n = 0; n <= reach; ++n) {
        const auto it = targets_by_size.find(n);
        const std::size_t count = it == targets_by_size.end() ? 0 : it->second.size();
        const auto expected = target_from_bits(target_string::of_size(n));
        if (count != 1) {
            out.violations.push_back({to_json(expected), json{{"size", n}, {"target_classes", count}}});
            continue;
        }
        if (canonicalize(pop[it->second.front()]) != canonicalize(expected))
            out.violations.push_back({to_json(pop[it->second.front()]), json{{"size", n}, {"matches_bits", false}}});
    }
    return out;
}

}  // namespace bmat::checks
