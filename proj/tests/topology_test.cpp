#include "imtl/topology.hpp"

#include <gtest/gtest.h>

#include "imtl/random.hpp"
#include "test_support.hpp"

namespace imtl {
namespace {

using testing::IntSet;
using testing::m1;
using testing::m2;
using testing::opens_as_ints;

const WorldSet kUniverse{0, 1};
FiniteTopology indiscrete() { return FiniteTopology(kUniverse, {{}, {0, 1}}); }
FiniteTopology discrete() { return FiniteTopology(kUniverse, {{}, {0}, {1}, {0, 1}}); }
FiniteTopology sierpinski() { return FiniteTopology(kUniverse, {{}, {0}, {0, 1}}); }

std::set<TopologyViolation::Kind> kinds(const std::vector<TopologyViolation>& vs) {
    std::set<TopologyViolation::Kind> out;
    for (const auto& v : vs) out.insert(v.kind);
    return out;
}

TEST(FiniteTopology, CanonicalOpenOrder) {
    const FiniteTopology t(kUniverse, {{0, 1}, {1}, {}, {0}, {1}});
    EXPECT_EQ(t.opens(), (std::vector<WorldSet>{{}, {0}, {1}, {0, 1}}));
    EXPECT_EQ(t, discrete());
    EXPECT_TRUE(t.is_open({1}));
    EXPECT_FALSE(sierpinski().is_open({1}));
}

TEST(ValidateTopology, Examples) {
    EXPECT_TRUE(validate_topology(indiscrete()).empty());
    EXPECT_TRUE(validate_topology(discrete()).empty());
    const FiniteTopology broken(kUniverse, {{}, {0}, {1}});
    EXPECT_EQ(kinds(validate_topology(broken)),
              (std::set<TopologyViolation::Kind>{TopologyViolation::Kind::MissingUniverse,
                                                 TopologyViolation::Kind::UnionNotOpen}));
}

TEST(ValidateTopology, OtherFailures) {
    EXPECT_EQ(kinds(validate_topology(FiniteTopology(kUniverse, {{0, 1}}))),
              std::set<TopologyViolation::Kind>{TopologyViolation::Kind::MissingEmpty});
    EXPECT_EQ(kinds(validate_topology(FiniteTopology({0}, {{}, {0}, {0, 1}}))),
              std::set<TopologyViolation::Kind>{TopologyViolation::Kind::OpenOutsideUniverse});
    const FiniteTopology t({0, 1, 2}, {{}, {0, 1}, {1, 2}, {0, 1, 2}});
    EXPECT_EQ(kinds(validate_topology(t)),
              std::set<TopologyViolation::Kind>{TopologyViolation::Kind::IntersectionNotOpen});
    EXPECT_FALSE(describe(validate_topology(t)).empty());
}

TEST(Interior, Examples) {
    EXPECT_EQ(interior(indiscrete(), {0}), WorldSet{});
    EXPECT_EQ(interior(discrete(), {0}), (WorldSet{0}));
    EXPECT_EQ(interior(sierpinski(), kUniverse), kUniverse);
    EXPECT_EQ(interior(sierpinski(), {1}), WorldSet{});
}

TEST(MinOpenNbhd, Examples) {
    EXPECT_EQ(min_open_nbhd(discrete(), 0), (WorldSet{0}));
    EXPECT_EQ(min_open_nbhd(indiscrete(), 0), kUniverse);
    EXPECT_EQ(min_open_nbhd(sierpinski(), 1), kUniverse);
    EXPECT_THROW(min_open_nbhd(FiniteTopology({0}, {{}, {0}}), 1), std::out_of_range);
}

TEST(BuildOw, Examples) {
    const NimFrame singleton(1, {{0}}, {{0}});
    EXPECT_EQ(build_ow(singleton, 0), FiniteTopology({0}, {{}, {0}}));
    EXPECT_EQ(build_ow(m1().frame, 0), discrete());
    EXPECT_EQ(build_ow(m2().frame, 0), FiniteTopology(kUniverse, {{}, {1}, {0, 1}}));
}

TEST(BuildQw, Examples) {
    const NimFrame singleton(1, {{0}}, {{0}});
    EXPECT_EQ(build_qw(singleton, 0), FiniteTopology({0}, {{}, {0}}));
    EXPECT_EQ(build_qw(m1().frame, 0), sierpinski());
    EXPECT_EQ(build_qw(m2().frame, 0), indiscrete());
}

TEST(BuildOw, RefusesFramesWithoutTCondition) {
    // max[0] = {0,1} but min[1] = {1,2}: the whole of max[0] is not 0-open.
    NimFrame f(3, {{0}, {1, 2}, {2}}, {{0, 1}, {1, 2}, {2}}, false);
    ASSERT_TRUE(validate_frame(f).empty());
    EXPECT_FALSE(testing::brute_force_ow(f, 0).count(IntSet{0, 1}));
    EXPECT_THROW(build_ow(f, 0), InvalidModel);
    EXPECT_THROW(build_qw(f, 0), InvalidModel);
}

TEST(BuildOw, RefusesInvalidFramesAndLargeNeighborhoods) {
    EXPECT_THROW(build_ow(NimFrame(2, {{0}, {1}}, {{1}, {1}}), 0), InvalidModel);
    EXPECT_THROW(build_ow(m1().frame, 0, 1), std::length_error);
}

TEST(BuildOw, MatchesBruteForceAndIsATopology) {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const NimFrame f = random_nim_frame(rng, 6);
        for (World w = 0; w < f.worlds; ++w) {
            const FiniteTopology ow = build_ow(f, w);
            const FiniteTopology qw = build_qw(f, w);
            ASSERT_EQ(opens_as_ints(ow), testing::brute_force_ow(f, w));
            ASSERT_EQ(opens_as_ints(qw), testing::brute_force_qw(f, w));
            ASSERT_TRUE(validate_topology(ow).empty()) << describe(validate_topology(ow));
            ASSERT_TRUE(validate_topology(qw).empty()) << describe(validate_topology(qw));
            ASSERT_EQ(ow.universe(), f.max[w]);
            ASSERT_TRUE(ow.is_open(f.min[w]));
            for (WorldSet x : qw.opens()) ASSERT_TRUE(ow.is_open(x));
            ASSERT_EQ(min_open_nbhd(qw, w), f.min[w]);
        }
    }
}

TEST(Interior, Laws) {
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        const WorldSet u = WorldSet::full(1 + rng() % 6);
        const FiniteTopology t = random_topology(rng, u);
        ASSERT_TRUE(validate_topology(t).empty());
        for (int j = 0; j < 10; ++j) {
            const WorldSet x = random_subset(rng, u);
            const WorldSet y = x | random_subset(rng, u);
            const WorldSet ix = interior(t, x);
            ASSERT_TRUE(t.is_open(ix));
            ASSERT_TRUE(ix.subset_of(x));
            ASSERT_EQ(interior(t, ix), ix);
            ASSERT_TRUE(ix.subset_of(interior(t, y)));
        }
        for (World w : u) {
            const WorldSet m = min_open_nbhd(t, w);
            ASSERT_TRUE(t.is_open(m));
            ASSERT_TRUE(m.contains(w));
            for (WorldSet o : t.opens()) {
                if (o.contains(w)) ASSERT_TRUE(m.subset_of(o));
            }
        }
    }
}

}  // namespace
}  // namespace imtl
