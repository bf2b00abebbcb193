#include "imtl/nim_model.hpp"

#include <gtest/gtest.h>

#include "imtl/random.hpp"
#include "test_support.hpp"

namespace imtl {
namespace {

using testing::brute_force_frame_letters;
using testing::m1;
using testing::m2;

std::set<char> letters(const std::vector<FrameViolation>& vs) {
    std::set<char> out;
    for (const auto& v : vs) out.insert(v.condition);
    return out;
}

TEST(ValidateFrame, SingletonReflexiveFrame) { EXPECT_TRUE(validate_frame(NimFrame(1, {{0}}, {{0}})).empty()); }

TEST(ValidateFrame, M1FrameIsValid) {
    EXPECT_TRUE(validate_frame(m1().frame).empty());
    EXPECT_TRUE(brute_force_frame_letters(m1().frame).empty());
}

TEST(ValidateFrame, M2FrameIsValid) { EXPECT_TRUE(validate_frame(m2().frame).empty()); }

TEST(ValidateFrame, MinOutsideMax) {
    const NimFrame f(2, {{0}, {1}}, {{1}, {1}});
    const auto vs = validate_frame(f);
    ASSERT_EQ(vs.size(), 1U);
    EXPECT_EQ(vs[0].condition, 'b');
    EXPECT_EQ(vs[0].world, 0U);
    EXPECT_EQ(brute_force_frame_letters(f), std::set<char>{'b'});
}

TEST(ValidateFrame, EachConditionNamesItsLetter) {
    // w not in min[w]
    EXPECT_EQ(letters(validate_frame(NimFrame(2, {{1}, {1}}, {{0, 1}, {1}}))), (std::set<char>{'a'}));
    // 1 in min[0] but min[1] not inside min[0]
    EXPECT_EQ(letters(validate_frame(NimFrame(3, {{0, 1}, {1, 2}, {2}}, {{0, 1, 2}, {1, 2}, {2}}))),
              (std::set<char>{'c'}));
    // 1 in min[0] but max[1] not inside max[0]
    const NimFrame e(3, {{0, 1}, {1}, {2}}, {{0, 1}, {1, 2}, {2}});
    EXPECT_EQ(letters(validate_frame(e)), (std::set<char>{'e'}));
    // 1 in max[0] but min[1] escapes max[0]
    const NimFrame f(3, {{0}, {1, 2}, {2}}, {{0, 1}, {1, 2}, {2}});
    EXPECT_EQ(letters(validate_frame(f)), (std::set<char>{'f'}));
    NimFrame no_t = f;
    no_t.t_condition = false;
    EXPECT_TRUE(validate_frame(no_t).empty());
}

TEST(ValidateFrame, ViolationsCarryWitnesses) {
    const NimFrame f(3, {{0}, {1, 2}, {2}}, {{0, 1}, {1, 2}, {2}});
    const auto vs = validate_frame(f);
    ASSERT_EQ(vs.size(), 1U);
    EXPECT_EQ(vs[0].world, 0U);
    ASSERT_TRUE(vs[0].witness.has_value());
    EXPECT_EQ(*vs[0].witness, 1U);
    EXPECT_FALSE(vs[0].describe().empty());
}

TEST(ValidateFrame, MatchesBruteForceOnMutations) {
    Rng rng(21);
    for (int i = 0; i < 400; ++i) {
        NimFrame f = random_nim_frame(rng, 5);
        ASSERT_TRUE(validate_frame(f).empty());
        const std::size_t w = rng() % f.worlds;
        const World bit = rng() % f.worlds;
        if (rng() % 2) {
            f.min[w].flip(bit);
        } else {
            f.max[w].flip(bit);
        }
        ASSERT_EQ(letters(validate_frame(f)), brute_force_frame_letters(f)) << i;
    }
}

TEST(NimFrame, ConstructorRejectsMalformedInput) {
    EXPECT_THROW(NimFrame(0, {}, {}), std::invalid_argument);
    EXPECT_THROW(NimFrame(2, {{0}}, {{0}, {1}}), std::invalid_argument);
    EXPECT_THROW(NimFrame(1, {{0, 1}}, {{0}}), std::invalid_argument);
}

TEST(ValidateModel, NonMonotoneValuation) {
    NimModel m = m2();
    m.valuation["q"] = {0};
    const auto vs = validate_model(m);
    ASSERT_EQ(vs.size(), 1U);
    EXPECT_EQ(vs[0].condition, 'V');
    EXPECT_EQ(vs[0].variable, "q");
    EXPECT_FALSE(is_upward_closed(m.frame, {0}));
    EXPECT_TRUE(is_upward_closed(m.frame, {1}));
}

TEST(Forces, Bottom) {
    for (World w = 0; w < 2; ++w) {
        EXPECT_FALSE(forces(m1(), w, Formula::bottom()));
        EXPECT_FALSE(forces(m2(), w, Formula::bottom()));
    }
}

TEST(Forces, BoxUsesMaximalNeighborhood) {
    EXPECT_FALSE(forces(m1(), 0, parse("[]p")));
    EXPECT_TRUE(forces(m1(), 1, parse("[]p")));
}

TEST(Forces, NegationUsesMinimalNeighborhood) { EXPECT_TRUE(forces(m1(), 0, parse("~p"))); }

TEST(Forces, ExcludedMiddleFails) { EXPECT_FALSE(forces(m2(), 0, parse("p | ~p"))); }

TEST(Forces, RejectsWorldOutOfRangeAndInvalidModels) {
    EXPECT_THROW(forces(m1(), 2, parse("p")), std::out_of_range);
    NimModel bad = m1();
    bad.frame.min[0] = {1};
    EXPECT_THROW(forces(bad, 0, parse("p")), InvalidModel);
    EXPECT_THROW(NimEvaluator{bad}, InvalidModel);
}

TEST(TruthSet, Examples) {
    EXPECT_EQ(truth_set(m1(), parse("p")), (WorldSet{1}));
    EXPECT_EQ(truth_set(m1(), parse("[]p")), (WorldSet{1}));
    EXPECT_EQ(truth_set(m1(), Formula::bottom()), WorldSet{});
}

TEST(TruthSet, UnlistedVariableIsEmpty) { EXPECT_EQ(truth_set(m1(), parse("r")), WorldSet{}); }

TEST(IsSatisfied, Examples) {
    EXPECT_FALSE(is_satisfied_in_model(m1(), parse("[]p")));
    EXPECT_TRUE(is_satisfied_in_model(m1(), parse("[]p -> p")));
    Rng rng(5);
    for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_satisfied_in_model(random_nim_model(rng, 5, {"p"}), parse("p -> p")));
}

class RandomModels : public ::testing::Test {
protected:
    void SetUp() override {
        Rng rng(99);
        for (int i = 0; i < 60; ++i) models.push_back(random_nim_model(rng, 5, {"p", "q"}));
        for (int i = 0; i < 200; ++i) formulas.push_back(random_formula(rng, {"p", "q"}, 5));
    }
    std::vector<NimModel> models;
    std::vector<Formula> formulas;
};

TEST_F(RandomModels, GeneratedModelsAreValid) {
    for (const auto& m : models) ASSERT_TRUE(validate_model(m).empty()) << describe(validate_model(m));
}

TEST_F(RandomModels, ForcesAgreesWithTruthSet) {
    for (const auto& m : models) {
        const NimEvaluator ev(m);
        const auto sets = ev.truth_sets(formulas);
        for (std::size_t i = 0; i < formulas.size(); ++i) {
            for (World w = 0; w < m.worlds(); ++w) ASSERT_EQ(sets[i].contains(w), forces(m, w, formulas[i]));
            ASSERT_EQ(sets[i], ev.truth_set(formulas[i]));
        }
    }
}

TEST_F(RandomModels, ForcingIsHereditary) {
    for (const auto& m : models) {
        const NimEvaluator ev(m);
        for (const auto& f : formulas) {
            const WorldSet t = ev.truth_set(f);
            for (World w : t) ASSERT_TRUE(m.frame.min[w].subset_of(t)) << to_string(f);
        }
    }
}

TEST_F(RandomModels, ImplicationIsMinimalNeighborhoodInclusion) {
    for (const auto& m : models) {
        const NimEvaluator ev(m);
        for (std::size_t i = 0; i + 1 < formulas.size(); i += 2) {
            const Formula& a = formulas[i];
            const Formula& b = formulas[i + 1];
            const WorldSet good = ev.truth_set(a).complement(m.worlds()) | ev.truth_set(b);
            const WorldSet imp = ev.truth_set(Formula::implies(a, b));
            for (World w = 0; w < m.worlds(); ++w) ASSERT_EQ(imp.contains(w), m.frame.min[w].subset_of(good));
        }
    }
}

TEST_F(RandomModels, AxiomInstancesHold) {
    const std::vector<std::string> axioms{"[]p -> p", "[](p -> q) -> ([]p -> []q)", "p -> (q -> p)",
                                          "p & q -> p", "p -> p | q", "_|_ -> q"};
    for (const auto& m : models) {
        for (const auto& a : axioms) ASSERT_TRUE(is_satisfied_in_model(m, parse(a))) << a;
    }
}

}  // namespace
}  // namespace imtl
