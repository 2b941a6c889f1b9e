#include <gtest/gtest.h>

#include <sstream>

#include "gensplit/invariants_io.hpp"

using namespace gensplit;

namespace {

const GroupSpec e7{make_type(Family::E, 7), IsogenyForm::Adjoint};

GroupInvariants read(const std::string& text)
{
    std::istringstream in(text);
    return read_invariants(in, e7, "t.inv");
}

int error_line(const std::string& text)
{
    try {
        read(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST(InvariantsFile, ReadsEveryKey)
{
    auto g = read("# E7 example\nJ2 = 0,1,0,0\nJ3=1\n\nA1 = split\nA7 = nonsplit\nexpA2 = 4\nchar = 3\nsplit = no\n");
    EXPECT_EQ(g.j.at(2), (std::vector<int>{0, 1, 0, 0}));
    EXPECT_EQ(g.j.at(3), (std::vector<int>{1}));
    EXPECT_EQ(g.tits.at(1).split, true);
    EXPECT_EQ(g.tits.at(7).split, false);
    EXPECT_EQ(g.tits.at(2).exponent, 4);
    EXPECT_EQ(g.characteristic, 3);
    EXPECT_EQ(g.split, false);
}

TEST(InvariantsFile, UnknownValues)
{
    auto g = read("char = unknown\nexpA1 = unknown\n");
    EXPECT_FALSE(g.characteristic);
    EXPECT_FALSE(g.tits.at(1).exponent);
}

TEST(InvariantsFile, StrictValidationWithLineNumbers)
{
    EXPECT_EQ(error_line("J2 = 0,1\nJ2 = 0\n"), 2);
    EXPECT_EQ(error_line("\n\nJ4 = 0\n"), 3);
    EXPECT_EQ(error_line("J2 = 0,-1\n"), 1);
    EXPECT_EQ(error_line("J2 = 0,,1\n"), 1);
    EXPECT_EQ(error_line("J2 = 0,1,\n"), 1);
    EXPECT_EQ(error_line("A1 = maybe\n"), 1);
    EXPECT_EQ(error_line("expA1 = 0\n"), 1);
    EXPECT_EQ(error_line("char = 4\n"), 1);
    EXPECT_EQ(error_line("split = true\n"), 1);
    EXPECT_EQ(error_line("colour = blue\n"), 1);
    EXPECT_EQ(error_line("J2\n"), 1);
    EXPECT_EQ(error_line("J2 =\n"), 1);
    EXPECT_EQ(error_line("A0 = split\n"), 1);
}

TEST(InvariantsFile, OverridesReplaceEarlierValues)
{
    InvariantsReader r(e7);
    std::istringstream in("J2 = 1,1,1,1\nchar = 2\n");
    r.read(in);
    r.override_with("J2 = 0,0,0,0");
    r.override_with("char = unknown");
    EXPECT_EQ(r.result().j.at(2), (std::vector<int>{0, 0, 0, 0}));
    EXPECT_FALSE(r.result().characteristic);
}

TEST(InvariantsFile, ValidationAgainstTheRegistry)
{
    auto reg = Registry::builtin();
    EXPECT_NO_THROW(read("J2 = 0,1,0,0\nJ3 = 1\n").validate(reg));
    EXPECT_THROW(read("J2 = 0,1,0\n").validate(reg), InvalidInput);
    EXPECT_THROW(read("J5 = 0\n").validate(reg), InvalidInput);
    EXPECT_THROW(read("A8 = split\n").validate(reg), InvalidInput);
    EXPECT_THROW(read("A1 = split\nexpA1 = 2\n").validate(reg), InvalidInput);
}
