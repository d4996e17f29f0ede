#include <gtest/gtest.h>

#include <bmat/constructs.hpp>
#include <bmat/enumerate.hpp>
#include <bmat/io.hpp>

#include "oracles.hpp"

using namespace bmat;

namespace {

canonical_form form(const binary_matroid& m) { return canonicalize(m); }

// Brute-force target test: some full flag of PG(r-1,2), r = rank(M), has
// monochromatic layers with M as the green points.
bool brute_is_target(const binary_matroid& m0) {
    const binary_matroid m = reembed(m0);
    const int r = m.ambient_rank();
    std::vector<char> green(std::size_t{1} << r, 0);
    for (point_t p : m.points()) green[p] = 1;
    auto rec = [&](auto&& self, const std::vector<point_t>& span, xor_basis basis) -> bool {
        if (basis.rank() == r) return true;
        for (point_t v = 1; v < (point_t{1} << r); ++v) {
            if (basis.contains(v)) continue;
            // New layer: v + span(previous flat).
            const char c = green[v];
            bool mono = true;
            for (point_t s : span)
                if (green[v ^ s] != c) {
                    mono = false;
                    break;
                }
            if (!mono) continue;
            auto next_span = span;
            for (point_t s : span) next_span.push_back(v ^ s);
            auto next = basis;
            next.insert(v);
            if (self(self, next_span, next)) return true;
        }
        return false;
    };
    return rec(rec, std::vector<point_t>{0}, xor_basis{});
}

std::vector<std::string> bit_strings(int max_len) {
    std::vector<std::string> out;
    for (int l = 1; l <= max_len; ++l)
        for (std::uint32_t v = 0; v < (1u << l); ++v) {
            std::string s;
            for (int i = l - 1; i >= 0; --i) s.push_back(static_cast<char>('0' + (v >> i & 1u)));
            out.push_back(s);
        }
    return out;
}

}  // namespace

TEST(Cone, Examples) {
    for (int r = 1; r <= 3; ++r)
        EXPECT_EQ(form(cone(projective_geometry(r - 1), true).matroid), form(projective_geometry(r)));
    const auto t = cone(binary_matroid{}, true);
    EXPECT_EQ(t.matroid.size(), 1u);
    EXPECT_EQ(t.tip, std::optional<point_t>(1));
    EXPECT_TRUE(cone(binary_matroid{}, false).matroid.empty());
    EXPECT_FALSE(cone(binary_matroid{}, false).tip.has_value());
}

TEST(Cone, SizeLawAndLabels) {
    for (const auto& n : enumerate_matroids({8, 8, {}})) {
        const auto a = cone(n, true);
        const auto b = cone(n, false);
        EXPECT_EQ(a.matroid.size(), 2 * n.size() + 1);
        EXPECT_EQ(b.matroid.size(), 2 * n.size());
        EXPECT_EQ(a.matroid.rank(), n.rank() + 1);
        EXPECT_EQ(a.matroid.labels().size(), a.matroid.size());
        EXPECT_TRUE(a.matroid.index_of_label("p" + std::to_string(n.ambient_rank() + 1)).has_value());
    }
}

TEST(Cone, HyperplaneAndContractionLaws) {
    for (const auto& n : enumerate_matroids({8, 8, {}})) {
        EXPECT_EQ(oracle::coning_law_failure(n), std::nullopt) << to_json(n).dump();
        // The construction matches the oracle's point set.
        EXPECT_EQ(cone(n, true).matroid.points(), oracle::tipped_cone_points(n.points(), n.ambient_rank()));
    }
}

TEST(Gpc, Examples) {
    const auto tri = circuit_matroid(3);
    const auto k4e = gpc_across_pg(tri, tri, {{tri.points()[0], tri.points()[0]}});
    EXPECT_EQ(form(k4e), form(named("MK4e")));
    std::map<int, int> sizes;
    for (element_set c : oracle::circuits(k4e.points())) ++sizes[popcount(c)];
    EXPECT_EQ(sizes, (std::map<int, int>{{3, 2}, {4, 1}}));

    const auto f7 = projective_geometry(2);
    const auto glued = gpc_across_pg(f7, f7, {{1, 1}, {2, 2}, {3, 3}});
    EXPECT_EQ(glued.rank(), 4);
    EXPECT_EQ(glued.size(), 11u);
    int fano_planes = 0;
    for (const flat& h : hyperplanes(glued))
        if (popcount(h.elements) == 7 && form(restrict_to(glued, h.elements)) == form(f7)) ++fano_planes;
    EXPECT_EQ(fano_planes, 2);

    glue_map whole;
    for (point_t p : f7.points()) whole.emplace_back(p, p);
    EXPECT_EQ(form(gpc_across_pg(f7, f7, whole)), form(f7));
}

TEST(Gpc, Errors) {
    const auto c4 = circuit_matroid(4);
    const auto f7 = projective_geometry(2);
    // {e1, e2} spans a line whose third point is missing from M(C4).
    EXPECT_THROW(gpc_across_pg(c4, f7, {{c4.points()[0], 1}, {c4.points()[1], 2}}), std::domain_error);
    // Not linear: 1,2,3 onto 1,2,4.
    EXPECT_THROW(gpc_across_pg(f7, f7, {{1, 1}, {2, 2}, {3, 4}}), std::domain_error);
    // Not a bijection.
    EXPECT_THROW(gpc_across_pg(f7, f7, {{1, 1}, {2, 1}}), std::domain_error);
}

TEST(Gpc, RestrictionToEachSide) {
    const auto pool = enumerate_matroids({3, 7, {}});
    for (const auto& a : pool)
        for (const auto& b : pool) {
            if (a.empty() || b.empty()) continue;
            // Glue along a point when both have one; the empty gluing otherwise.
            for (const glue_map& g : {glue_map{}, glue_map{{a.points()[0], b.points()[0]}}}) {
                const auto m = gpc_across_pg(a, b, g);
                EXPECT_EQ(m.rank(), a.rank() + b.rank() - static_cast<int>(g.size()));
                EXPECT_EQ(m.size(), a.size() + b.size() - g.size());
                // The first side occupies the coordinates 1..r(a).
                const point_t low = (point_t{1} << a.rank()) - 1;
                std::vector<point_t> side_a;
                for (point_t p : m.points())
                    if ((p & ~low) == 0) side_a.push_back(p);
                EXPECT_EQ(form(binary_matroid(m.ambient_rank(), side_a)), form(a));
                const auto fb = form(b);
                bool found = false;
                const auto all_flats = flats(m);
                for (const flat& f : all_flats[static_cast<std::size_t>(b.rank())])
                    if (popcount(f.elements) == static_cast<int>(b.size()) &&
                        form(restrict_to(m, f.elements)) == fb)
                        found = true;
                EXPECT_TRUE(found);
            }
        }
}

TEST(Targets, Examples) {
    EXPECT_EQ(form(target_from_bits("111")), form(projective_geometry(2)));
    const auto ag = target_from_bits("100");
    EXPECT_EQ(ag.size(), 4u);
    EXPECT_EQ(ag.rank(), 3);
    EXPECT_EQ(form(ag), form(affine_geometry(2)));
    EXPECT_TRUE(target_from_bits("0").empty());
    EXPECT_THROW(target_from_bits("012"), std::domain_error);
    EXPECT_THROW(target_from_bits(""), std::domain_error);
    EXPECT_THROW(target_from_bits("01"), std::domain_error);
}

TEST(Targets, SizeLawForShortStrings) {
    for (const auto& s : bit_strings(5)) {
        if (s != "0" && s.front() == '0') continue;
        const target_string t(s);
        EXPECT_EQ(target_from_bits(t).size(), t.value()) << s;
        EXPECT_EQ(target_string::of_size(t.value()).value(), t.value());
    }
}

TEST(Targets, RecognizerExamples) {
    const auto pg = is_projective_target(projective_geometry(2));
    ASSERT_TRUE(pg.has_value());
    EXPECT_TRUE(std::all_of(pg->green.begin(), pg->green.end(), [](bool g) { return g; }));
    const auto ag = is_projective_target(affine_geometry(3));
    ASSERT_TRUE(ag.has_value());
    EXPECT_TRUE(ag->green.back());
    EXPECT_EQ(std::count(ag->green.begin(), ag->green.end(), true), 1);
    // M(C4) is four points of PG(2,2) off a line, the target 100.
    const auto c4 = is_projective_target(circuit_matroid(4));
    ASSERT_TRUE(c4.has_value());
    EXPECT_EQ(c4->green, (std::vector<bool>{false, false, true}));
    EXPECT_FALSE(is_projective_target(binary_matroid(3, {1, 2, 4})).has_value());
}

TEST(Targets, RecognizerMatchesAllFlagsOracle) {
    for (const auto& m : enumerate_matroids({4, 15, {}})) {
        const auto flag = is_projective_target(m);
        EXPECT_EQ(flag.has_value(), brute_is_target(m)) << to_json(m).dump();
        if (!flag) continue;
        // Layer sizes and layer colors of the returned flag.
        ASSERT_EQ(flag->flats.size(), static_cast<std::size_t>(m.rank()) + 1);
        for (std::size_t i = 1; i < flag->flats.size(); ++i) {
            EXPECT_EQ(flag->flats[i].size(), (std::size_t{1} << i) - 1);
            std::set<point_t> inner(flag->flats[i - 1].begin(), flag->flats[i - 1].end());
            for (point_t p : flag->flats[i]) {
                if (inner.count(p)) continue;
                EXPECT_EQ(m.contains(p), static_cast<bool>(flag->green[i - 1]));
            }
        }
    }
}

TEST(Spike, Examples) {
    const auto s3 = spike(3, false);
    EXPECT_EQ(s3.points(), pg_points(3));
    EXPECT_EQ(form(spike(3, true)), form(named("MK4")));
    for (int r = 3; r <= 5; ++r) EXPECT_EQ(form(dual(spike(r, true))), form(spike(r, true))) << r;
    EXPECT_THROW(spike(2, false), std::domain_error);
    const auto s4 = spike(4, true);
    EXPECT_TRUE(s4.index_of_label("t").has_value());
    EXPECT_TRUE(s4.index_of_label("t*").has_value());
    EXPECT_FALSE(s4.index_of_label("a1").has_value());
}

// M_r / t without simplification: r parallel classes of size 2 forming an
// r-circuit once simplified.
TEST(Spike, ContractingTheTipDoublesACircuit) {
    for (int r = 3; r <= 8; ++r) {
        const auto m = spike(r, false);
        const point_t t = m.points()[*m.index_of_label("t")];
        const quotient_map q(std::vector<point_t>{t}, r);
        std::map<point_t, int> classes;
        for (point_t p : m.points())
            if (p != t) ++classes[q(p)];
        EXPECT_EQ(classes.size(), static_cast<std::size_t>(r));
        for (const auto& [img, count] : classes) EXPECT_EQ(count, 2);
        const auto si = contract_simplify(m, m.mask_of({t})).matroid;
        EXPECT_EQ(form(si), form(circuit_matroid(r)));
    }
}

TEST(LineSaturate, Examples) {
    const binary_matroid two(2, {1, 2});
    EXPECT_EQ(line_saturate(two, 1).points(), (std::vector<point_t>{1, 2, 3}));
    const auto pg = projective_geometry(2);
    for (point_t x : pg.points()) EXPECT_EQ(line_saturate(pg, x), pg);
    const binary_matroid c4(3, {0b001, 0b010, 0b100, 0b111});
    const auto s = line_saturate(c4, 0b001);
    EXPECT_EQ(s.rank(), 3);
    EXPECT_EQ(s.size(), 7u);
    EXPECT_EQ(form(s), form(pg));
    EXPECT_THROW(line_saturate(c4, 0b011), std::domain_error);
}

TEST(LineSaturate, EveryLineThroughXIsFull) {
    for (const auto& m : enumerate_matroids({4, 12, {}}))
        for (point_t x : m.points()) {
            const auto s = line_saturate(m, x);
            for (point_t y : s.points()) {
                if (y != x) {
                    EXPECT_TRUE(s.contains(x ^ y));
                }
            }
            for (point_t y : m.points()) EXPECT_TRUE(s.contains(y));
        }
}

TEST(Catalog, Examples) {
    const auto f7 = named("F7");
    EXPECT_EQ(f7.size(), 7u);
    EXPECT_EQ(f7.rank(), 3);
    const auto k5 = named("M(K5)");
    EXPECT_EQ(k5.size(), 10u);
    EXPECT_EQ(k5.rank(), 4);
    EXPECT_THROW(named("K9000"), std::domain_error);
    EXPECT_THROW(named("M(Kx)"), std::domain_error);
}

TEST(Catalog, EntriesMatchTheirDescriptions) {
    struct expect {
        const char* name;
        int rank;
        std::size_t size;
    };
    for (const auto& e : {expect{"F7", 3, 7}, expect{"F7*", 4, 7}, expect{"AG32", 4, 8}, expect{"S8", 4, 8},
                          expect{"R10", 5, 10}, expect{"M*(K33)", 4, 9}, expect{"M(K33)", 5, 9}, expect{"MC4", 3, 4},
                          expect{"MK4e", 3, 5}, expect{"MK4", 3, 6}, expect{"W4", 4, 8}, expect{"U23", 2, 3}}) {
        const auto m = named(e.name);
        EXPECT_EQ(m.rank(), e.rank) << e.name;
        EXPECT_EQ(m.size(), e.size) << e.name;
    }
    EXPECT_EQ(catalog().size(), 12u);
    for (const auto& c : catalog()) EXPECT_NO_THROW(named(c.name));
    EXPECT_EQ(form(named("F7*")), form(dual(named("F7"))));
    EXPECT_EQ(form(named("M*(K33)")), form(dual(named("M(K33)"))));
    EXPECT_EQ(triangles(named("M*(K33)")).size(), 6u);
    EXPECT_TRUE(is_triangle_free(named("AG32")));
    EXPECT_EQ(form(named("S8")), form(spike(4, true)));
    EXPECT_EQ(form(named("W4")), form(graphic(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 1}, {1, 2}, {2, 3}, {0, 3}})));
    EXPECT_EQ(form(named("PG(3,2)")), form(projective_geometry(3)));
    EXPECT_EQ(form(named("AG(3,2)")), form(named("AG32")));
    EXPECT_EQ(form(named("M(C5)")), form(circuit_matroid(5)));
}

TEST(Catalog, ContractionsOfR10) {
    const auto r10 = named("R10");
    const auto target = form(named("M*(K33)"));
    for (std::size_t i = 0; i < r10.size(); ++i)
        EXPECT_EQ(form(contract_simplify(r10, element_set{1} << i).matroid), target) << i;
    EXPECT_TRUE(is_triangle_free(r10));
    EXPECT_EQ(form(dual(r10)), form(r10));
}

TEST(Catalog, GraphFamilies) {
    for (int n = 2; n <= 8; ++n) {
        const auto k = complete_graphic(n);
        EXPECT_EQ(k.size(), static_cast<std::size_t>(n * (n - 1) / 2));
        EXPECT_EQ(k.rank(), n - 1);
    }
    for (int n = 3; n <= 8; ++n) {
        const auto c = circuit_matroid(n);
        EXPECT_EQ(oracle::circuits(c.points()).size(), 1u);
        EXPECT_EQ(c.rank(), n - 1);
    }
    for (int k = -1; k <= 4; ++k) {
        EXPECT_EQ(projective_geometry(k).size(), (std::size_t{1} << (k + 1)) - 1);
        if (k >= 0) {
            EXPECT_EQ(affine_geometry(k).size(), std::size_t{1} << k);
        }
    }
    EXPECT_EQ(projective_geometry_minus_point(4).size(), 14u);
}
