#include <gtest/gtest.h>

#include <bmat/constructs.hpp>
#include <bmat/enumerate.hpp>
#include <bmat/io.hpp>

#include "oracles.hpp"

using namespace bmat;

namespace {

const std::vector<binary_matroid>& up_to(int n) {
    static std::map<int, std::vector<binary_matroid>> cache;
    auto& slot = cache[n];
    if (slot.empty()) slot = enumerate_matroids({n, n, {}});
    return slot;
}

std::vector<point_t> sorted_points(const binary_matroid& m, element_set s) {
    auto p = m.points_of(s);
    std::sort(p.begin(), p.end());
    return p;
}

const binary_matroid c4(3, {0b001, 0b010, 0b100, 0b111});

}  // namespace

TEST(Construction, RejectsNonSimpleInput) {
    EXPECT_THROW(binary_matroid(3, {0, 1}), std::domain_error);
    EXPECT_THROW(binary_matroid(3, {1, 1}), std::domain_error);
    EXPECT_THROW(binary_matroid(2, {4}), std::domain_error);
    EXPECT_THROW(binary_matroid(2, {1, 2}, {"a"}), std::domain_error);
    const binary_matroid m(3, {4, 1, 2}, {"c", "a", "b"});
    EXPECT_EQ(m.points(), (std::vector<point_t>{1, 2, 4}));
    EXPECT_EQ(m.labels(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Closure, Examples) {
    const auto pg = projective_geometry(2);
    const flat line = closure(pg, std::vector<point_t>{0b001, 0b010});
    EXPECT_EQ(sorted_points(pg, line.elements), (std::vector<point_t>{1, 2, 3}));
    EXPECT_EQ(line.rank, 2);
    EXPECT_EQ(closure(pg, element_set{0}), (flat{0, 0}));
    const flat f = closure(c4, std::vector<point_t>{0b001, 0b010});
    EXPECT_EQ(sorted_points(c4, f.elements), (std::vector<point_t>{1, 2}));
    EXPECT_EQ(f.rank, 2);
    EXPECT_THROW(closure(c4, element_set{1} << 7), std::domain_error);
}

TEST(Closure, IdempotentExtensiveMonotone) {
    for (const auto& m : up_to(7)) {
        const element_set all = m.ground();
        for (element_set x = 0; x <= all; ++x) {
            const flat c = closure(m, x);
            EXPECT_EQ(c.elements & x, x);
            EXPECT_EQ(closure(m, c.elements).elements, c.elements);
            EXPECT_EQ(m.rank_of(c.elements), m.rank_of(x));
            EXPECT_EQ(c.rank, m.rank_of(x));
            for (std::size_t i = 0; i < m.size(); ++i)
                EXPECT_EQ(closure(m, x | element_set{1} << i).elements & c.elements, c.elements);
        }
    }
}

TEST(Flats, Examples) {
    auto counts = [](const binary_matroid& m) {
        std::vector<std::size_t> out;
        for (const auto& level : flats(m)) out.push_back(level.size());
        return out;
    };
    EXPECT_EQ(counts(projective_geometry(2)), (std::vector<std::size_t>{1, 7, 7, 1}));
    EXPECT_EQ(counts(binary_matroid(1, {1})), (std::vector<std::size_t>{1, 1}));
    const auto ag = affine_geometry(3);
    const auto ag_flats = flats(ag);
    EXPECT_EQ(ag_flats[3].size(), 14u);
    for (const flat& f : ag_flats[3]) EXPECT_EQ(popcount(f.elements), 4);
}

TEST(Flats, MatchBruteForce) {
    for (const auto& m : up_to(8)) {
        std::set<element_set> got;
        for (const auto& level : flats(m))
            for (const flat& f : level) {
                EXPECT_TRUE(got.insert(f.elements).second);
                EXPECT_EQ(f.rank, m.rank_of(f.elements));
            }
        EXPECT_EQ(got, oracle::flats(m.points()));
    }
}

TEST(Restriction, Examples) {
    const auto pg = projective_geometry(2);
    const auto six = restrict_to(pg, pg.ground() & ~element_set{1});
    EXPECT_EQ(canonicalize(six), canonicalize(named("MK4")));
    EXPECT_EQ(restrict_to(pg, pg.ground()), pg);
    EXPECT_TRUE(restrict_to(pg, 0).empty());
}

TEST(Restriction, FlatsOfARestrictionToAFlat) {
    for (const auto& m : up_to(7))
        for (const auto& level : flats(m))
            for (const flat& f : level) {
                const auto r = restrict_to(m, f.elements);
                std::set<std::vector<point_t>> expect, got;
                for (const auto& l2 : flats(m))
                    for (const flat& g : l2)
                        if ((g.elements & ~f.elements) == 0) expect.insert(sorted_points(m, g.elements));
                for (const auto& l2 : flats(r))
                    for (const flat& g : l2) got.insert(sorted_points(r, g.elements));
                EXPECT_EQ(got, expect);
            }
}

TEST(Contraction, Examples) {
    const auto pg = projective_geometry(2);
    const auto c = contract_simplify(pg, element_set{1});
    EXPECT_EQ(c.matroid.size(), 3u);
    EXPECT_EQ(c.matroid.rank(), 2);
    EXPECT_EQ(canonicalize(c.matroid), canonicalize(projective_geometry(1)));

    const auto id = contract_simplify(pg, 0);
    EXPECT_EQ(id.matroid, pg);
    for (const auto& e : id.map.entries) {
        EXPECT_EQ(e.image, std::optional<point_t>(e.source));
        EXPECT_TRUE(e.representative);
    }

    const auto ag = affine_geometry(3);
    const auto a = contract_simplify(ag, element_set{1});
    EXPECT_EQ(a.matroid.size(), 7u);
    EXPECT_EQ(a.matroid.rank(), 3);
    EXPECT_EQ(canonicalize(a.matroid), canonicalize(projective_geometry(2)));
}

TEST(Contraction, MapIsTotalAndKeepsSmallestRepresentative) {
    for (const auto& m : up_to(8))
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto c = contract_simplify(m, element_set{1} << i);
            ASSERT_EQ(c.map.entries.size(), m.size());
            EXPECT_EQ(canonicalize(c.matroid),
                      canonicalize(binary_matroid(std::max(0, m.rank() - 1), oracle::contract_one(m.points(), i))));
            std::map<point_t, point_t> smallest;
            for (const auto& e : c.map.entries)
                if (e.image && !smallest.count(*e.image)) smallest[*e.image] = e.source;
            for (const auto& e : c.map.entries) {
                if (!e.image) {
                    EXPECT_EQ(e.source, m.points()[i]);
                    continue;
                }
                EXPECT_EQ(e.representative, smallest[*e.image] == e.source);
            }
        }
}

// Contracting X and then the image of Y groups sources exactly as
// contracting X and Y at once, and the results are isomorphic.
TEST(Contraction, TwoStepsEqualOne) {
    for (const auto& m : up_to(8)) {
        const element_set all = m.ground();
        for (element_set x = 0; x <= all; x += 3)
            for (element_set y = 0; y <= all; y += 5) {
                const auto first = contract_simplify(m, x);
                std::vector<point_t> yimg;
                for (const auto& e : first.map.entries)
                    if ((y >> *m.index_of(e.source) & 1u) && e.image) yimg.push_back(*e.image);
                const auto second = contract_simplify(first.matroid, first.matroid.mask_of(yimg));
                const auto both = contract_simplify(m, x | y);
                EXPECT_EQ(canonicalize(second.matroid), canonicalize(both.matroid));
                std::map<point_t, std::optional<point_t>> two;
                for (const auto& e : first.map.entries) {
                    std::optional<point_t> img;
                    if (e.image)
                        if (const auto* f = second.map.find(*e.image)) img = f->image;
                    two[e.source] = img;
                }
                for (const auto& a : both.map.entries)
                    for (const auto& b : both.map.entries) {
                        EXPECT_EQ(a.image.has_value(), two[a.source].has_value());
                        if (a.image && b.image) {
                            EXPECT_EQ(*a.image == *b.image, *two[a.source] == *two[b.source]);
                        }
                    }
            }
    }
}

TEST(Dual, Examples) {
    const auto k4 = named("MK4");
    EXPECT_EQ(canonicalize(dual(dual(k4))), canonicalize(k4));
    const auto d = dual(projective_geometry(2));
    EXPECT_EQ(d.size(), 7u);
    EXPECT_EQ(d.rank(), 4);
    // The dual of a 4-circuit is four parallel elements of rank 1.
    const auto cols = dual_columns(c4);
    EXPECT_EQ(bmat::rank_of(cols.columns), 1);
    EXPECT_EQ(std::set<point_t>(cols.columns.begin(), cols.columns.end()).size(), 1u);
    EXPECT_THROW(dual(c4), std::domain_error);
    EXPECT_FALSE(is_cosimple(c4));
}

TEST(Dual, CircuitsOfTheDualAreCocircuits) {
    for (const auto& m : up_to(8)) {
        const auto cols = dual_columns(m);
        EXPECT_EQ(oracle::circuits(cols.columns), oracle::cocircuits(m.points()));
        const auto lib = cocircuits(m);
        EXPECT_EQ(std::set<element_set>(lib.begin(), lib.end()), oracle::cocircuits(m.points()));
    }
}

TEST(Dual, Involution) {
    for (const auto& m : up_to(10)) {
        if (!is_cosimple(m)) continue;
        EXPECT_EQ(canonicalize(dual(dual(m))), canonicalize(m));
        EXPECT_EQ(dual(m).rank(), static_cast<int>(m.size()) - m.rank());
    }
}

TEST(Circuits, Examples) {
    EXPECT_EQ(circuits(projective_geometry(1)).size(), 1u);
    const auto cc = circuits(c4);
    ASSERT_EQ(cc.size(), 1u);
    EXPECT_EQ(cc.front(), c4.ground());
    std::map<int, int> by_size;
    for (element_set c : circuits(named("MK4"))) ++by_size[popcount(c)];
    EXPECT_EQ(by_size, (std::map<int, int>{{3, 4}, {4, 3}}));
}

TEST(Circuits, MatchBruteForce) {
    for (const auto& m : up_to(8)) {
        const auto lib = circuits(m);
        EXPECT_EQ(std::set<element_set>(lib.begin(), lib.end()), oracle::circuits(m.points()));
        std::set<element_set> small;
        for (element_set c : circuits(m, 4)) small.insert(c);
        for (element_set c : oracle::circuits(m.points())) EXPECT_EQ(small.count(c) == 1, popcount(c) <= 4);
    }
}

TEST(Connectivity, Examples) {
    const auto k4 = connectivity(named("MK4"));
    EXPECT_TRUE(k4.connected);
    EXPECT_TRUE(k4.three_connected);

    const binary_matroid two_triangles(4, {0b0001, 0b0010, 0b0011, 0b0100, 0b1000, 0b1100});
    const auto d = connectivity(two_triangles);
    EXPECT_FALSE(d.connected);
    ASSERT_TRUE(d.witness.has_value());
    EXPECT_EQ(d.witness->lambda, 0);
    EXPECT_EQ(popcount(d.witness->a), 3);

    const auto k4e = connectivity(named("MK4e"));
    EXPECT_TRUE(k4e.connected);
    EXPECT_FALSE(k4e.three_connected);
    ASSERT_TRUE(k4e.witness.has_value());
    EXPECT_EQ(k4e.witness->lambda, 1);
    EXPECT_TRUE(connectivity(binary_matroid{}).connected);
}

TEST(Connectivity, MatchesPartitionOracle) {
    for (const auto& m : up_to(9)) {
        const auto lib = connectivity(m);
        const auto ref = oracle::connectivity(m.points());
        EXPECT_EQ(lib.connected, ref.connected);
        EXPECT_EQ(lib.three_connected, ref.three_connected);
        if (lib.witness) {
            const int l = m.rank_of(lib.witness->a) + m.rank_of(lib.witness->b) - m.rank();
            EXPECT_EQ(l, lib.witness->lambda);
            EXPECT_EQ(lib.witness->a | lib.witness->b, m.ground());
        }
    }
}

TEST(VerticalSeparations, Examples) {
    const auto pg = projective_geometry(2);
    for (int k = 2; k <= 4; ++k) EXPECT_TRUE(vertical_separations(pg, k).empty());
    EXPECT_FALSE(vertical_separations(c4, 2).empty());
    EXPECT_TRUE(vertical_separations(c4, 4).empty());
}

TEST(VerticalSeparations, MatchBruteForce) {
    for (const auto& m : up_to(8))
        for (int k = 1; k <= m.rank() + 1; ++k)
            EXPECT_EQ(static_cast<int>(vertical_separations(m, k).size()),
                      oracle::vertical_separation_count(m.points(), k));
}

TEST(Roundness, Examples) {
    EXPECT_TRUE(is_round(projective_geometry(3)));
    EXPECT_TRUE(is_round_by_definition(projective_geometry(3)));
    EXPECT_TRUE(is_round(named("MK4")));
    EXPECT_FALSE(is_round(c4));
    EXPECT_TRUE(is_round(binary_matroid{}));
}

TEST(Roundness, ShortcutAgreesWithDefinition) {
    for (const auto& m : up_to(9)) {
        EXPECT_EQ(is_round(m), is_round_by_definition(m));
        EXPECT_EQ(is_round(m), oracle::is_round(m.points()));
    }
}

TEST(Triangles, Examples) {
    EXPECT_TRUE(is_triangle_free(affine_geometry(3)));
    const auto pg = projective_geometry(2);
    for (point_t e : pg.points()) EXPECT_EQ(triangles(pg, e).size(), 3u);
    EXPECT_TRUE(triangles(c4).empty());
    EXPECT_TRUE(is_triangle_free(c4));
    EXPECT_THROW(triangles(c4, 0b011), std::domain_error);
}

TEST(Triangles, CountMatchesThreeCircuits) {
    for (const auto& m : up_to(8)) {
        std::size_t threes = 0;
        for (element_set c : oracle::circuits(m.points())) threes += popcount(c) == 3;
        EXPECT_EQ(triangles(m).size(), threes);
        EXPECT_EQ(is_triangle_free(m), threes == 0);
    }
}

TEST(Chordality, Examples) {
    EXPECT_TRUE(is_chordal(projective_geometry(2)));
    EXPECT_FALSE(is_chordal(c4));
    EXPECT_TRUE(is_chordal(named("MK4")));
    EXPECT_TRUE(is_chordal(binary_matroid{}));
}

TEST(Chordality, FlatScanMatchesCircuitDefinition) {
    for (const auto& m : up_to(9)) EXPECT_EQ(is_chordal(m), oracle::is_chordal(m.points())) << to_json(m).dump();
}
