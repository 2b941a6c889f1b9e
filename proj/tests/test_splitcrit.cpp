#include <gtest/gtest.h>

#include <random>

#include "gensplit/splitcrit.hpp"

using namespace gensplit;

namespace {

const Registry reg = Registry::builtin();

GroupSpec grp(const char* t)
{
    auto ty = parse_type(t);
    return {ty, ty.family == Family::B ? IsogenyForm::Special : IsogenyForm::Adjoint};
}

std::string derived(const char* t, int i) { return to_string(derive_condition(reg, grp(t), i)); }
std::string tabulated(const char* t, int i) { return to_string(table_row(grp(t), i).condition); }

GroupInvariants inv(const char* t, std::map<int, std::vector<int>> j, std::optional<int> ch = std::nullopt)
{
    GroupInvariants g;
    g.group = grp(t);
    g.j = std::move(j);
    g.characteristic = ch;
    return g;
}

Verdict::Kind check(const char* t, int i, const GroupInvariants& g)
{
    return evaluate(reg, derive_condition(reg, grp(t), i), g).kind;
}

} // namespace

TEST(Derive, DocumentedExamples)
{
    EXPECT_EQ(derived("E8", 8), "and(j[3,1]=0 | char!=3: and(j[3,1]=0,j[3,2]=0), j[2,1]=0, j[2,2]=0, j[2,3]=0)");
    EXPECT_EQ(derived("G2", 2), "always");
    EXPECT_EQ(derived("G2", 1), "always");
    EXPECT_EQ(derived("B5", 2), "and(j[2,1]=0, j[2,2]=0)");
    EXPECT_EQ(derived("F4", 4), "j[2,1]=0");
    EXPECT_EQ(derived("E8", 7),
              "and(j[3,1]=0 | char!=3: and(j[3,1]=0,j[3,2]=0), j[2,1]=0 | char!=2: and(j[2,1]=0,j[2,2]=0,j[2,3]=0))");
}

TEST(Derive, SimplyConnectedGroupsHaveNoDegreeOnePart)
{
    GroupSpec e7{parse_type("E7"), IsogenyForm::SimplyConnected};
    // Levi D6 of type 1 carries degrees 3 and 5, which are x_1, x_2 of E7sc.
    EXPECT_EQ(to_string(derive_condition(reg, e7, 1)), "and(j[2,1]=0, j[2,2]=0)");
    GroupSpec d6{parse_type("D6"), IsogenyForm::SimplyConnected};
    EXPECT_EQ(to_string(derive_condition(reg, d6, 1)), "j[2,1]=0");
    EXPECT_THROW(derive_condition(reg, GroupSpec{parse_type("D6"), IsogenyForm::Special}, 1), Unsupported);
}

TEST(TableRow, SelectorExamples)
{
    EXPECT_EQ(tabulated("D6", 6), "or(split(A_1), split(A_5))");
    EXPECT_EQ(tabulated("D6", 5), "or(split(A_1), split(A_6))");
    EXPECT_EQ(tabulated("D7", 7), "always");
    EXPECT_EQ(tabulated("A5", 4), "gcd(exp A_1, 4)=1");
    EXPECT_EQ(tabulated("C4", 3), "always");
    EXPECT_EQ(tabulated("C4", 2), "G-split");
    EXPECT_EQ(tabulated("D8", 3), "and(j[2,2]=0, j[2,3]=0, or(split(A_7),split(A_8)))");
    EXPECT_EQ(tabulated("E7", 7), "and(j[3,1]=0, j[2,2]=0 | char!=2: and(j[2,2]=0,j[2,3]=0,j[2,4]=0))");
    EXPECT_THROW(table_row(GroupSpec{parse_type("E7"), IsogenyForm::SimplyConnected}, 1), Unsupported);
    EXPECT_THROW(table_row(grp("E7"), 8), InvalidInput);
}

// Exactly one row matches every (group, i), checked by scanning the rows
// directly rather than through table_row.
TEST(TableRow, SelectorsPartitionEveryGroup)
{
    for (const auto& g : table_groups({std::nullopt, std::nullopt, 2, 16})) {
        const int n = table_n(g.type);
        for (int i = 1; i <= g.type.rank; ++i) {
            int hits = 0;
            for (const auto& row : table_rows())
                if (row.family == g.type.family && (row.rank == 0 || row.rank == g.type.rank) && row.applies(n, i)) ++hits;
            EXPECT_EQ(hits, 1) << group_name(g) << " i=" << i;
        }
    }
}

TEST(TableRow, ExceptionalPatternsHaveRegistryLength)
{
    for (const auto& row : table_rows()) {
        if (row.rank == 0) continue;
        GroupSpec g{make_type(row.family, row.rank), IsogenyForm::Adjoint};
        for (const auto& c : row.constraints) {
            EXPECT_EQ(static_cast<int>(c.pattern.size()), reg.presentation(g, c.prime).rank()) << row.group;
            if (!c.refined.empty()) {
                EXPECT_EQ(c.refined.size(), c.pattern.size()) << row.group;
                // The refinement only adds zeros.
                for (std::size_t k = 0; k < c.pattern.size(); ++k)
                    if (c.pattern[k] == '0') {
                        EXPECT_EQ(c.refined[k], '0') << row.group;
                    }
            }
        }
    }
}

TEST(Diff, FullTableMatches)
{
    auto rep = diff_table(reg);
    EXPECT_EQ(rep.mismatches(), 0);
    for (const auto& r : rep.records)
        EXPECT_TRUE(r.equal) << r.group_label << " i=" << r.i << "\n  derived " << r.derived << "\n  table   " << r.table;
    // 11 values of n for A, B, C, 10 for D, then 2+4+6+7+8 exceptional parabolics.
    int expected = 0;
    for (int n = 2; n <= 12; ++n) expected += (n - 1) + n + n + (n >= 3 ? n : 0);
    expected += 2 + 4 + 6 + 7 + 8;
    EXPECT_EQ(static_cast<int>(rep.records.size()), expected);
}

TEST(Diff, Filters)
{
    auto e7 = diff_table(reg, {Family::E, 7});
    ASSERT_EQ(e7.records.size(), 7u);
    for (int i = 1; i <= 7; ++i) EXPECT_EQ(e7.records[static_cast<std::size_t>(i - 1)].i, i);
    EXPECT_EQ(diff_table(reg, {Family::D, 6}).records.size(), 6u);
    EXPECT_EQ(diff_table(reg, {Family::G, std::nullopt}).mismatches(), 0);
}

TEST(Diff, DroppedE8DegreeIsFlaggedOnE8Rows)
{
    Registry r;
    r.set_degrees(parse_type("E8"), IsogenyForm::Adjoint, 2, {3, 5, 9});
    auto rep = diff_table(r, {Family::E, 8});
    EXPECT_GE(rep.mismatches(), 1);
    bool localized = false;
    for (const auto& rec : rep.records)
        for (const auto& n : rec.notes) localized |= n.find("r=3") != std::string::npos;
    EXPECT_TRUE(localized);
}

TEST(Anchors, EmptyThetaIsAlways)
{
    for (const char* t : {"A4", "B6", "C5", "D7", "D8", "E6", "E7", "E8", "F4", "G2"})
        EXPECT_EQ(derive_condition(reg, grp(t), SubsetTheta::of(parse_type(t), {})), Condition::always()) << t;
}

TEST(Anchors, FullThetaIsEveryGeneratorPlusTits)
{
    EXPECT_EQ(to_string(derive_condition(reg, grp("E8"), SubsetTheta::all(parse_type("E8")))),
              "and(j[5,1]=0, j[3,1]=0, j[3,2]=0, j[2,1]=0, j[2,2]=0, j[2,3]=0, j[2,4]=0)");
    EXPECT_EQ(to_string(derive_condition(reg, grp("A5"), SubsetTheta::all(parse_type("A5")))),
              "and(j[3,1]=0, j[2,1]=0, split(A_1))");
    EXPECT_EQ(to_string(derive_condition(reg, grp("C3"), SubsetTheta::all(parse_type("C3")))), "and(j[2,1]=0, G-split)");
}

TEST(Evaluate, WorkedExamples)
{
    EXPECT_EQ(check("E7", 3, inv("E7", {{2, {0, 1, 0, 0}}})), Verdict::Kind::Split);
    EXPECT_EQ(check("F4", 4, inv("F4", {{2, {1}}})), Verdict::Kind::NotSplit);
    auto e8 = inv("E8", {{3, {0, 1}}, {2, {0, 0, 0, 0}}});
    auto v = evaluate(reg, derive_condition(reg, grp("E8"), 7), e8);
    EXPECT_EQ(v.kind, Verdict::Kind::Unknown);
    ASSERT_FALSE(v.reasons.empty());
    EXPECT_NE(v.reasons.front().find("char!=3"), std::string::npos);
    e8.characteristic = 3;
    EXPECT_EQ(check("E8", 7, e8), Verdict::Kind::Split);
    e8.characteristic = 0;
    EXPECT_EQ(check("E8", 7, e8), Verdict::Kind::NotSplit);
}

TEST(Evaluate, DimensionMismatchNamesExpectedRank)
{
    try {
        evaluate(reg, derive_condition(reg, grp("E7"), 3), inv("E7", {{2, {0, 1, 0}}}));
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("expected r=4"), std::string::npos) << e.what();
    }
}

TEST(Evaluate, HeightsBoundComponents)
{
    Registry r;
    r.set_entry(parse_type("F4"), IsogenyForm::Adjoint, 2, {{1, 3, 1}});
    auto g = inv("F4", {{2, {2}}});
    EXPECT_THROW(evaluate(r, derive_condition(r, grp("F4"), 4), g), InvalidInput);
}

TEST(Evaluate, GroupSplitNeedsTheFlag)
{
    auto g = inv("C4", {});
    auto cond = derive_condition(reg, grp("C4"), 2);
    EXPECT_EQ(evaluate(reg, cond, g).kind, Verdict::Kind::Unknown);
    g.split = true;
    EXPECT_EQ(evaluate(reg, cond, g).kind, Verdict::Kind::Split);
}

TEST(Evaluate, GcdUsesTheExponent)
{
    auto cond = derive_condition(reg, grp("A5"), 4);
    auto g = inv("A5", {});
    EXPECT_EQ(evaluate(reg, cond, g).kind, Verdict::Kind::Unknown);
    g.tits[1].exponent = 3;
    EXPECT_EQ(evaluate(reg, cond, g).kind, Verdict::Kind::Split);
    g.tits[1].exponent = 6;
    EXPECT_EQ(evaluate(reg, cond, g).kind, Verdict::Kind::NotSplit);
}

// The two degree-1 slots of PGO+ are not attached to particular Tits
// algebras, so answers that depend on the pairing are Unknown.
TEST(Evaluate, PgoSlotPairingAmbiguity)
{
    auto cond = derive_condition(reg, grp("D6"), 2); // j_1, j_2, j_3 all zero
    EXPECT_EQ(evaluate(reg, cond, inv("D6", {{2, {0, 1, 0, 0}}})).kind, Verdict::Kind::NotSplit);
    // j_2 only: the i odd row; swapping slots flips the verdict.
    auto odd = derive_condition(reg, grp("D6"), 1);
    auto g = inv("D6", {{2, {0, 1, 0, 0}}});
    g.tits[5].split = true;
    EXPECT_EQ(evaluate(reg, odd, g).kind, Verdict::Kind::Unknown);
    g.j[2] = {0, 0, 0, 1};
    EXPECT_EQ(evaluate(reg, odd, g).kind, Verdict::Kind::Split);
}

// Turning a J component to 0 or a Tits algebra to split never turns Split
// into NotSplit.
TEST(EvaluateProperty, Monotonicity)
{
    std::mt19937 rng(2024);
    auto groups = table_groups({std::nullopt, std::nullopt, 2, 8});
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& g = groups[rng() % groups.size()];
        int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(g.type.rank));
        auto cond = derive_condition(reg, g, i);
        GroupInvariants a;
        a.group = g;
        for (int p : reg.torsion_primes(g)) {
            std::vector<int> v;
            for (int k = 0; k < reg.presentation(g, p).rank(); ++k) v.push_back(static_cast<int>(rng() % 2));
            a.j[p] = v;
        }
        for (int l = 1; l <= g.type.rank; ++l)
            if (rng() % 2) a.tits[l].split = rng() % 2 == 0;
        if (rng() % 2) a.tits[1].exponent = 1 + static_cast<long>(rng() % 6);
        if (a.tits[1].exponent) a.tits[1].split = *a.tits[1].exponent == 1;
        if (rng() % 2) a.split = rng() % 2 == 0;
        if (rng() % 3) a.characteristic = std::vector<int>{0, 2, 3}[rng() % 3];

        GroupInvariants b = a;
        switch (rng() % 3) {
        case 0:
            if (!b.j.empty()) {
                auto& v = std::next(b.j.begin(), static_cast<long>(rng() % b.j.size()))->second;
                if (!v.empty()) v[rng() % v.size()] = 0;
            }
            break;
        case 1: {
            int l = 1 + static_cast<int>(rng() % static_cast<unsigned>(g.type.rank));
            b.tits[l].split = true;
            if (b.tits[l].exponent) b.tits[l].exponent = 1;
            break;
        }
        default:
            b.tits[1].split = true;
            b.tits[1].exponent = 1;
        }
        auto va = evaluate(reg, cond, a).kind;
        auto vb = evaluate(reg, cond, b).kind;
        if (va == Verdict::Kind::Split) {
            EXPECT_NE(vb, Verdict::Kind::NotSplit) << group_name(g) << " i=" << i;
            ++checked;
        }
    }
    EXPECT_GT(checked, 50);
}

// Every refined row: away from the excluded characteristic the refinement
// implies the base; at it, only the base applies.
TEST(Refinement, Soundness)
{
    int refined = 0;
    for (const auto& row : table_rows()) {
        for (const auto& c : row.constraints) {
            if (c.refined.empty()) continue;
            ++refined;
            Condition base = jpattern(c.prime, c.pattern);
            Condition strong = jpattern(c.prime, c.refined);
            Condition r = Condition::refined(base, c.prime, strong);
            EXPECT_TRUE(implies(strong, base)) << row.group;
            EXPECT_TRUE(implies(r, strong, 0)) << row.group;
            EXPECT_TRUE(implies(strong, r, 0)) << row.group;
            EXPECT_TRUE(implies(r, base, c.prime)) << row.group;
            EXPECT_TRUE(implies(base, r, c.prime)) << row.group;
        }
    }
    EXPECT_EQ(refined, 8);
}

TEST(Scenario, ConfirmsTheJ3Conclusion)
{
    auto rep = rost_scenario(reg);
    EXPECT_TRUE(rep.in_scenario);
    EXPECT_TRUE(rep.confirmed);
    auto c3 = rost_scenario(reg, 3);
    EXPECT_TRUE(c3.confirmed);
    bool only_first = false;
    for (const auto& l : c3.lines) only_first |= l.find("(0,*)") != std::string::npos;
    EXPECT_TRUE(only_first);
    auto p2 = rost_scenario(reg, std::nullopt, 2);
    EXPECT_FALSE(p2.in_scenario);
    EXPECT_NE(p2.lines.front().find("out of scenario"), std::string::npos);
}
