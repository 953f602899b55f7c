#include <gtest/gtest.h>

#include "roughphish/core.hpp"
#include "roughphish/phishing/reliability.hpp"

using namespace rough;

namespace {

const AttributeSet kAD = {"Stratum A", "Stratum D"};
const AttributeSet kAll = {"Stratum A", "Stratum B", "Stratum C", "Stratum D"};

DecisionTable table_v() { return phish::canonical_reliability_table(); }

DecisionTable small(std::vector<std::string> conds, std::vector<std::vector<std::string>> rows) {
    return DecisionTable(std::move(conds), "d", std::move(rows));
}

} // namespace

TEST(DecisionTable, RejectsMalformedShapes) {
    EXPECT_THROW(small({"a", "a"}, {}), TableFormatError);
    EXPECT_THROW(DecisionTable({"a", "d"}, "d", {}), TableFormatError);
    EXPECT_THROW(small({"a"}, {{"x"}}), TableFormatError);
    EXPECT_NO_THROW(small({"a"}, {{"x", "y"}}));
}

TEST(DecisionTable, ColumnLookup) {
    auto t = table_v();
    EXPECT_EQ(t.size(), 26u);
    EXPECT_EQ(t.require_column("Stratum C"), 2u);
    EXPECT_EQ(t.require_column("R Factor"), 4u);
    EXPECT_THROW(t.require_column("Stratum E"), UnknownAttributeError);
    EXPECT_THROW(t.require_condition("R Factor"), UnknownAttributeError);
}

TEST(Csv, LoadsHeaderAndRows) {
    auto t = parse_decision_table_csv("x,y,dec\r\n1,2,yes\r\n\r\n1,3,no\n");
    EXPECT_EQ(t.condition_attributes(), (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(t.decision_attribute(), "dec");
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t.value(1, 1), "3");
    EXPECT_EQ(t.decision(1), "no");
}

TEST(Csv, DiagnosticsCarryRowAndColumn) {
    try {
        parse_decision_table_csv("x,y,dec\n1,2,yes\n1,2\n");
        FAIL();
    } catch (const TableFormatError& e) {
        EXPECT_EQ(e.row(), 3u);
        EXPECT_EQ(e.column(), 3u);
    }
    try {
        parse_decision_table_csv("x,y,x\n");
        FAIL();
    } catch (const TableFormatError& e) {
        EXPECT_EQ(e.row(), 1u);
        EXPECT_EQ(e.column(), 3u);
        EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
    }
    EXPECT_THROW(parse_decision_table_csv(""), TableFormatError);
    EXPECT_THROW(parse_decision_table_csv("onlyone\n"), TableFormatError);
    EXPECT_THROW(parse_decision_table_csv("x,d\n,1\n"), TableFormatError);
}

TEST(Csv, RoundTripsThroughText) {
    auto t = table_v();
    EXPECT_EQ(parse_decision_table_csv(to_csv(t)), t);
}

TEST(Partition, TableVByAD) {
    auto p = partition_by(table_v(), kAD);
    EXPECT_EQ(p.blocks.size(), 9u);
    EXPECT_EQ(p.blocks.front(), (ObjectSet{0, 3, 6}));
    for (std::size_t i = 1; i < p.blocks.size(); ++i)
        EXPECT_LT(p.blocks[i - 1].front(), p.blocks[i].front());
}

TEST(Partition, EmptyAttributeSetIsOneBlock) {
    auto p = partition_by(table_v(), {});
    ASSERT_EQ(p.blocks.size(), 1u);
    EXPECT_EQ(p.blocks[0], table_v().universe());
}

TEST(Partition, AllStrataGives24Blocks) {
    auto p = partition_by(table_v(), kAll);
    EXPECT_EQ(p.blocks.size(), 24u);
}

TEST(Partition, UnknownAttributeIsNamed) {
    try {
        partition_by(table_v(), {"Stratum Q"});
        FAIL();
    } catch (const UnknownAttributeError& e) {
        EXPECT_EQ(e.attribute(), "Stratum Q");
    }
}

TEST(Approximation, UniverseAndEmptyTargets) {
    auto t = table_v();
    auto p = partition_by(t, kAD);
    auto whole = approximate(p, t.universe());
    EXPECT_EQ(whole.lower, t.universe());
    EXPECT_EQ(whole.upper, t.universe());
    EXPECT_TRUE(whole.boundary.empty());
    EXPECT_TRUE(whole.definable);

    auto none = approximate(p, {});
    EXPECT_TRUE(none.lower.empty());
    EXPECT_TRUE(none.upper.empty());
    EXPECT_TRUE(none.definable);
}

TEST(Approximation, ReliableClassBoundaryIsTheConflictingDuplicates) {
    auto t = table_v();
    auto a = approximate(partition_by(t, kAll), t.objects_with_decision("Reliable"));
    EXPECT_EQ(a.boundary, (ObjectSet{1, 13, 24, 25}));
    EXPECT_FALSE(a.definable);
    EXPECT_EQ(a.lower.size(), 6u);
}

TEST(Approximation, OutOfRangeTargetThrows) {
    auto t = table_v();
    EXPECT_THROW(approximate(partition_by(t, kAD), {3, 26}), BoundsError);
}

TEST(PositiveRegion, PublishedSubsets) {
    auto t = table_v();
    EXPECT_EQ(positive_region(t, kAD).size(), 15u);
    EXPECT_EQ(gamma(t, kAD), Fraction(15, 26));
    EXPECT_EQ(gamma(t, {"Stratum A", "Stratum C", "Stratum D"}), Fraction(19, 26));
    EXPECT_TRUE(positive_region(t, {}).empty());
}

TEST(PositiveRegion, DecisionAttributeNotAllowed) {
    EXPECT_THROW(positive_region(table_v(), {"R Factor"}), UnknownAttributeError);
}

TEST(Gamma, SingletonsAndFullSet) {
    auto t = table_v();
    EXPECT_EQ(gamma(t, {"Stratum A"}), Fraction(6, 26));
    EXPECT_EQ(gamma(t, {"Stratum A"}).decimal(), "0.23076923076923078");
    EXPECT_EQ(gamma(t, {"Stratum B"}), Fraction(8, 26));
    EXPECT_EQ(gamma(t, {"Stratum B"}).decimal(), "0.3076923076923077");
    auto full = gamma(t, kAll);
    EXPECT_EQ(full.numerator(), 22u);
    EXPECT_EQ(full.denominator(), 26u);
}

TEST(Gamma, EmptyTableIsUndefined) {
    DecisionTable empty({"a"}, "d", {});
    EXPECT_THROW(gamma(empty, {"a"}), UndefinedDivisionError);
    EXPECT_THROW(gamma(empty, {"zz"}), UnknownAttributeError);
}

TEST(Fraction, ExactComparisonAndRendering) {
    EXPECT_EQ(Fraction(15, 26), Fraction(30, 52));
    EXPECT_LT(Fraction(6, 26), Fraction(8, 26));
    EXPECT_EQ(Fraction(10, 26).decimal(), "0.38461538461538464");
    EXPECT_EQ(Fraction(26, 26).decimal(), "1.0");
    EXPECT_EQ(Fraction(0, 26).decimal(), "0.0");
    EXPECT_EQ(Fraction(12, 26).reduced().str(), "6/13");
    EXPECT_THROW(Fraction(1, 0), UndefinedDivisionError);
}

TEST(Survey, PreservesRequestOrder) {
    auto report = subset_gamma_survey(table_v(), {{"Stratum D"}, {}, kAD});
    ASSERT_EQ(report.entries.size(), 3u);
    EXPECT_EQ(report.entries[0].gamma, Fraction(8, 26));
    EXPECT_EQ(report.entries[1].gamma, Fraction(0, 26));
    EXPECT_EQ(report.entries[2].gamma, Fraction(15, 26));
    EXPECT_EQ(report.entries[2].attributes, kAD);
}

TEST(Reducts, TableVNeedsAllFourStrata) {
    // No proper subset reaches 22/26; the best triple {A,B,D} gives 20/26.
    auto t = table_v();
    EXPECT_EQ(find_reducts(t), (std::vector<AttributeSet>{kAll}));
    EXPECT_EQ(core(t), kAll);
    EXPECT_EQ(gamma(t, {"Stratum A", "Stratum B", "Stratum D"}), Fraction(20, 26));
}

TEST(Reducts, DecisionCopiesOneColumn) {
    auto t = small({"c", "noise"}, {{"x", "p", "x"}, {"y", "p", "y"}, {"x", "q", "x"}, {"z", "q", "z"}});
    EXPECT_EQ(find_reducts(t), (std::vector<AttributeSet>{{"c"}}));
    EXPECT_EQ(core(t), (AttributeSet{"c"}));
}

TEST(Reducts, TwinColumnsGiveTwoReductsAndEmptyCore) {
    auto t = small({"c1", "c2"}, {{"x", "x", "x"}, {"y", "y", "y"}, {"z", "z", "z"}});
    EXPECT_EQ(find_reducts(t), (std::vector<AttributeSet>{{"c1"}, {"c2"}}));
    EXPECT_TRUE(core(t).empty());
}

TEST(Reducts, ConstantDecisionHasEmptyReduct) {
    auto t = small({"c"}, {{"x", "k"}, {"y", "k"}});
    EXPECT_EQ(find_reducts(t), (std::vector<AttributeSet>{AttributeSet{}}));
    EXPECT_TRUE(core(t).empty());
}

TEST(Reducts, CapacityErrorAboveTwentyAttributes) {
    std::vector<std::string> names;
    std::vector<std::string> row;
    for (int i = 0; i < 21; ++i) {
        names.push_back("c" + std::to_string(i));
        row.push_back("v");
    }
    row.push_back("d");
    DecisionTable t(names, "dec", {row});
    try {
        find_reducts(t);
        FAIL();
    } catch (const CapacityError& e) {
        EXPECT_EQ(e.cap(), 20u);
        EXPECT_NE(std::string(e.what()).find("20"), std::string::npos);
    }
    EXPECT_THROW(core(t), CapacityError);
    EXPECT_THROW(induce_certain_rules(t), CapacityError);
}

TEST(Rules, RuleInvariants) {
    EXPECT_THROW(DecisionRule({}, "x"), Error);
    EXPECT_THROW(DecisionRule({{"a", "1"}, {"a", "2"}}, "x"), Error);
    DecisionRule r({{"a", "1"}, {"b", "2"}}, "x");
    EXPECT_TRUE(r.matches({{"a", "1"}, {"b", "2"}, {"c", "9"}}));
    EXPECT_FALSE(r.matches({{"a", "1"}, {"b", "3"}}));
    EXPECT_THROW(r.matches({{"a", "1"}}), UnknownAttributeError);
}

TEST(CheckRule, CertainContradictedAndVacuous) {
    auto t = table_v();
    auto fake_b = check_rule(DecisionRule({{"Stratum B", "Fake"}}, "Unreliable"), t);
    EXPECT_EQ(fake_b.status, RuleStatus::certain);
    EXPECT_EQ(fake_b.matched.size(), 8u);
    EXPECT_FALSE(fake_b.vacuous());

    auto r5 = check_rule(DecisionRule({{"Stratum B", "Valid"}, {"Stratum D", "Suspicious"}}, "Unreliable"), t);
    EXPECT_EQ(r5.status, RuleStatus::contradicted);
    EXPECT_EQ(r5.counterexamples, (ObjectSet{1, 13}));

    auto none = check_rule(DecisionRule({{"Stratum B", "Unheard"}}, "Unreliable"), t);
    EXPECT_EQ(none.status, RuleStatus::certain);
    EXPECT_TRUE(none.vacuous());
    EXPECT_TRUE(none.matched.empty());

    EXPECT_THROW(check_rule(DecisionRule({{"Stratum Z", "Fake"}}, "Unreliable"), t), UnknownAttributeError);
}

TEST(ApplyRules, PolicyResolution) {
    std::vector<DecisionRule> rules = {
        DecisionRule({{"a", "1"}}, "bad"),
        DecisionRule({{"b", "1"}}, "good"),
        DecisionRule({{"c", "1"}}, "meh"),
    };
    ConflictPolicy conservative{ConflictMode::conservative, "bad"};
    ConflictPolicy strict{ConflictMode::strict, "bad"};

    ObjectValues both{{"a", "1"}, {"b", "1"}, {"c", "0"}};
    EXPECT_EQ(apply_rules(rules, both, conservative).decision, "bad");
    EXPECT_FALSE(apply_rules(rules, both, strict).decision);
    EXPECT_EQ(apply_rules(rules, both, strict).fired, (std::vector<std::size_t>{0, 1}));

    ObjectValues good{{"a", "0"}, {"b", "1"}, {"c", "0"}};
    EXPECT_EQ(apply_rules(rules, good, conservative).decision, "good");
    EXPECT_EQ(apply_rules(rules, good, strict).decision, "good");

    ObjectValues neither{{"a", "0"}, {"b", "0"}, {"c", "0"}};
    EXPECT_FALSE(apply_rules(rules, neither, conservative).decision);
    EXPECT_TRUE(apply_rules(rules, neither, conservative).fired.empty());

    // Two non-cautious conclusions disagree: nothing to prefer.
    ObjectValues mixed{{"a", "0"}, {"b", "1"}, {"c", "1"}};
    EXPECT_FALSE(apply_rules(rules, mixed, conservative).decision);

    EXPECT_THROW(apply_rules(rules, {{"a", "1"}, {"b", "1"}}, conservative), UnknownAttributeError);
}

TEST(Induction, TableVDeduplicatedContainsFakeDRule) {
    auto rules = induce_certain_rules(phish::deduplicate_last_wins(table_v()));
    DecisionRule expected({{"Stratum D", "Fake"}}, "Unreliable");
    EXPECT_NE(std::find(rules.begin(), rules.end(), expected), rules.end());
    for (std::size_t i = 1; i < rules.size(); ++i)
        EXPECT_LE(rules[i - 1].conditions().size(), rules[i].conditions().size());
}

TEST(Induction, ConstantDecisionUsesSingleConditions) {
    auto t = small({"a", "b"}, {{"x", "p", "k"}, {"y", "q", "k"}, {"x", "q", "k"}});
    auto rules = induce_certain_rules(t);
    ASSERT_FALSE(rules.empty());
    for (const auto& r : rules) {
        EXPECT_EQ(r.conditions().size(), 1u);
        EXPECT_EQ(r.conclusion(), "k");
        EXPECT_EQ(r.provenance(), Provenance::induced);
    }
    EXPECT_EQ(rules.size(), 4u);
    EXPECT_EQ(rules[0].str(), "(a = x) => k");
    for (const auto& r : rules)
        EXPECT_TRUE(is_minimal(r, t)) << r.str();
    EXPECT_FALSE(is_minimal(DecisionRule({{"a", "x"}, {"b", "p"}}, "k"), t));
}

TEST(Induction, InconsistentTuplesYieldNoRule) {
    auto t = small({"a"}, {{"x", "yes"}, {"x", "no"}, {"y", "no"}});
    auto rules = induce_certain_rules(t);
    ASSERT_EQ(rules.size(), 1u);
    EXPECT_EQ(rules[0], DecisionRule({{"a", "y"}}, "no"));
}

TEST(Induction, IsMinimalMatchesDefinition) {
    auto t = table_v();
    auto dedup = phish::deduplicate_last_wins(t);
    for (const auto& r : induce_certain_rules(dedup))
        EXPECT_TRUE(is_minimal(r, dedup)) << r.str();
    EXPECT_FALSE(is_minimal(DecisionRule({{"Stratum D", "Fake"}, {"Stratum A", "Fake"}}, "Unreliable"), dedup));
}
