#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "minors.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace bmat {

struct check_outcome {
    std::uint64_t population = 0;
    std::vector<violation> violations;
};

/// Shared state for a verification run: worker count and enumerated
/// populations, computed once per (max_rank, max_elements).
class verify_context {
public:
    explicit verify_context(int jobs = 1) : jobs_(std::max(jobs, 1)) {}

    [[nodiscard]] int jobs() const noexcept { return jobs_; }

    /// Representatives in scope (filters applied), ascending by canonical form.
    std::vector<binary_matroid> population(const enumeration_scope& scope) {
        const auto& all = unfiltered(scope.max_rank, scope.max_elements);
        std::vector<char> keep(all.size(), 0);
        parallel_for(all.size(), jobs_, [&](std::size_t i) { keep[i] = scope.filters.accepts(all[i]); });
        std::vector<binary_matroid> out;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (keep[i]) out.push_back(all[i]);
        return out;
    }

    const std::vector<binary_matroid>& unfiltered(int max_rank, int max_elements) {
        std::lock_guard lock(mutex_);
        auto& slot = populations_[{max_rank, max_elements}];
        if (!slot) {
            slot = std::make_unique<std::vector<binary_matroid>>();
            for (const auto& f : enumerate_forms({max_rank, max_elements, {}}, jobs_)) slot->push_back(f.to_matroid());
        }
        return *slot;
    }

    /// True once is_round agrees with is_round_by_definition on every simple
    /// binary matroid of rank <= 3; computed on first use.
    bool roundness_shortcut_confirmed() {
        const auto& small = unfiltered(3, 7);
        std::lock_guard lock(mutex_);
        if (!round_ok_)
            round_ok_ = std::all_of(small.begin(), small.end(),
                                    [](const binary_matroid& m) { return is_round(m) == is_round_by_definition(m); });
        return *round_ok_;
    }

private:
    int jobs_;
    std::optional<bool> round_ok_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, std::unique_ptr<std::vector<binary_matroid>>> populations_;
};

using check_fn = std::function<check_outcome(const enumeration_scope&, verify_context&)>;

struct theorem_check {
    std::string id;
    std::string summary;
    check_fn run;
};

namespace detail {

/// Runs `test` on every matroid; a returned witness becomes a violation.
/// Violations keep population order.
template <class Test>
check_outcome collect(const std::vector<binary_matroid>& pop, int jobs, Test&& test) {
    std::vector<std::optional<json>> found(pop.size());
    parallel_for(pop.size(), jobs, [&](std::size_t i) { found[i] = test(pop[i]); });
    check_outcome out;
    out.population = pop.size();
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (found[i]) out.violations.push_back({to_json(pop[i]), std::move(*found[i])});
    return out;
}

inline json columns_json(const binary_matroid& m, element_set s) {
    json arr = json::array();
    for (element_set t = s; t != 0; t &= t - 1)
        arr.push_back(column_string(m.points()[std::countr_zero(t)], m.ambient_rank()));
    return arr;
}

inline json points_json(const std::vector<point_t>& pts, int rank) {
    json arr = json::array();
    for (point_t p : pts) arr.push_back(column_string(p, rank));
    return arr;
}

inline json witness_json(const binary_matroid& m, const std::string& pattern, const induced_minor_witness& w) {
    return json{{"pattern", pattern},
                {"outer_flat", columns_json(m, w.outer.elements)},
                {"inner_flat", columns_json(m, w.inner.elements)}};
}

inline json exim_json(const binary_matroid& m, const exim_result& r) {
    if (r.member) return json{{"member", true}};
    return json{{"member", false}, {"induced_minor", witness_json(m, *r.pattern, *r.witness)}};
}

inline bool nonempty_connected(const binary_matroid& m) { return !m.empty() && is_connected(m); }

}  // namespace detail

}  // namespace bmat
