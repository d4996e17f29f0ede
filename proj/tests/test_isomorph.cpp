#include <gtest/gtest.h>

#include <bmat/constructs.hpp>
#include <bmat/enumerate.hpp>
#include <bmat/io.hpp>

#include "oracles.hpp"

using namespace bmat;

namespace {

// Images of the circuits of `a` under a point map, as masks of `b`.
std::set<element_set> mapped_circuits(const binary_matroid& a, const binary_matroid& b,
                                      const std::vector<point_t>& map) {
    std::set<element_set> out;
    for (element_set c : oracle::circuits(a.points())) {
        element_set img = 0;
        for (element_set t = c; t != 0; t &= t - 1) img |= element_set{1} << *b.index_of(map[std::countr_zero(t)]);
        out.insert(img);
    }
    return out;
}

}  // namespace

TEST(CanonicalForm, Examples) {
    const auto f = canonicalize(projective_geometry(2));
    EXPECT_EQ(f.rank, 3);
    EXPECT_EQ(f.code, pg_points(3));
    EXPECT_EQ(canonicalize(binary_matroid(1, {1})), canonicalize(binary_matroid(4, {0b1010})));
    const auto pg = projective_geometry(2);
    std::set<canonical_form> six;
    for (std::size_t i = 0; i < pg.size(); ++i) six.insert(canonicalize(delete_elements(pg, element_set{1} << i)));
    EXPECT_EQ(six.size(), 1u);
    EXPECT_EQ(*six.begin(), canonicalize(named("MK4")));
}

TEST(CanonicalForm, EmptyMatroid) {
    EXPECT_EQ(canonicalize(binary_matroid{}), canonicalize(binary_matroid(3, {})));
    EXPECT_EQ(canonicalize(binary_matroid{}).rank, 0);
}

TEST(CanonicalForm, FixesAmbientRankToRank) {
    std::mt19937_64 rng(5);
    for (const auto& m : enumerate_matroids({4, 10, {}})) {
        const auto f = canonicalize(m);
        EXPECT_EQ(f.rank, m.rank());
        // Embed into a larger space by an injective linear map.
        const int big = m.rank() + 2;
        auto cols = oracle::random_gl(rng, big);
        cols.resize(static_cast<std::size_t>(m.ambient_rank()));
        std::vector<point_t> pts;
        for (point_t p : m.points()) {
            point_t img = 0;
            for (std::size_t i = 0; i < cols.size(); ++i)
                if (p >> i & 1u) img ^= cols[i];
            pts.push_back(img);
        }
        EXPECT_EQ(canonicalize(binary_matroid(big, pts)), f);
    }
}

TEST(CanonicalForm, InvariantUnderRandomChangeOfBasis) {
    std::mt19937_64 rng(2024);
    auto corpus = enumerate_matroids({4, 12, {}});
    for (auto& m : enumerate_matroids({5, 11, {}}))
        if (m.rank() == 5) corpus.push_back(m);
    ASSERT_GT(corpus.size(), 150u);
    for (const auto& m : corpus) {
        const auto f = canonicalize(m);
        for (int t = 0; t < 100; ++t) {
            const auto g = oracle::random_gl(rng, m.ambient_rank());
            ASSERT_EQ(canonicalize(oracle::transform(m, g)), f) << to_json(m).dump();
        }
    }
}

TEST(CanonicalForm, CodeIsAnImageOfTheInput) {
    for (const auto& m : enumerate_matroids({4, 15, {}})) {
        const auto l = canonical_labeling_of(m);
        auto img = l.image;
        std::sort(img.begin(), img.end());
        EXPECT_EQ(img, l.form.code);
        // The labeling is linear: sums of points map to sums of images.
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j)
                if (auto k = m.index_of(m.points()[i] ^ m.points()[j])) {
                    EXPECT_EQ(l.image[i] ^ l.image[j], l.image[*k]);
                }
    }
}

TEST(CanonicalForm, AutomorphismsPreserveCircuits) {
    for (const auto& m : enumerate_matroids({4, 9, {}})) {
        const auto l = canonical_labeling_of(m);
        const auto circ = oracle::circuits(m.points());
        for (const auto& perm : l.automorphisms) {
            std::vector<point_t> map;
            for (std::size_t i = 0; i < m.size(); ++i) map.push_back(m.points()[perm[i]]);
            EXPECT_EQ(mapped_circuits(m, m, map), circ);
        }
    }
}

// Graded orbit counts of GL(r,2) on subsets of PG(r-1,2) against the
// enumeration.
TEST(CanonicalForm, DistinctFormsMatchBurnsideCounts) {
    for (int r = 1; r <= 4; ++r) {
        const auto expect = oracle::burnside_orbit_counts(r);
        std::set<canonical_form> forms;
        const auto pts = pg_points(r);
        for (std::uint32_t mask = 0; mask < (1u << pts.size()); ++mask) {
            std::vector<point_t> sub;
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (mask >> i & 1u) sub.push_back(pts[i]);
            forms.insert(canonicalize(binary_matroid(r, sub)));
        }
        std::vector<std::uint64_t> got(pts.size() + 1, 0);
        for (const auto& f : forms) ++got[f.code.size()];
        EXPECT_EQ(got, expect) << "r=" << r;
    }
    EXPECT_EQ(oracle::burnside_orbit_counts(2), (std::vector<std::uint64_t>{1, 1, 1, 1}));
}

TEST(AreIsomorphic, Examples) {
    EXPECT_FALSE(are_isomorphic(named("MK4"), named("MK4e")));
    std::mt19937_64 rng(3);
    const auto r10 = named("R10");
    EXPECT_TRUE(are_isomorphic(r10, oracle::transform(r10, oracle::random_gl(rng, 5))));
    // Deleting the tip of the binary 4-spike leaves e_i and 1111 + e_i, a
    // triangle-free set: it is AG(3,2). The spike with tip and cotip keeps
    // triangles through the tip.
    const auto m4 = spike(4, false);
    const auto tipless = delete_elements(m4, element_set{1} << *m4.index_of_label("t"));
    EXPECT_TRUE(is_triangle_free(tipless));
    EXPECT_TRUE(are_isomorphic(affine_geometry(3), tipless));
    const auto s8 = spike(4, true);
    EXPECT_EQ(s8.size(), 8u);
    EXPECT_FALSE(is_triangle_free(s8));
    EXPECT_FALSE(are_isomorphic(affine_geometry(3), s8));
}

TEST(FindIsomorphism, MapsCircuitsOntoCircuits) {
    std::mt19937_64 rng(41);
    for (const auto& m : enumerate_matroids({4, 9, {}})) {
        const auto other = oracle::transform(m, oracle::random_gl(rng, m.ambient_rank()));
        const auto map = find_isomorphism(m, other);
        ASSERT_TRUE(map.has_value());
        EXPECT_EQ(mapped_circuits(m, other, *map), oracle::circuits(other.points()));
    }
    EXPECT_FALSE(find_isomorphism(named("MK4"), named("F7")).has_value());
}

TEST(ApplyLinearMap, KeepsLabels) {
    const binary_matroid m(2, {1, 2}, {"x", "y"});
    const auto t = apply_linear_map(m, {3, 1});
    EXPECT_EQ(t.points(), (std::vector<point_t>{1, 3}));
    EXPECT_EQ(t.labels(), (std::vector<std::string>{"y", "x"}));
}

TEST(FormCache, ReturnsCanonicalForms) {
    form_cache cache;
    const auto a = named("F7");
    EXPECT_EQ(cache.get(a), canonicalize(a));
    EXPECT_EQ(cache.get(a), canonicalize(a));
    EXPECT_EQ(cache.size(), 1u);
}
