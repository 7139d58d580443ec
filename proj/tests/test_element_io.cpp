#include "effhom/element_io.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace effhom;

namespace {
const Module kZ = Module::finite(1);
const Module kZN = Module::countable();
const Module kCone = Module::sum(Module::sum(kZ, kZN), kZ);
} // namespace

TEST(Format, CombinationsAscendingWithUnitCoefficientsElided) {
    EXPECT_EQ(format(normalize({{7, 4}, {8, 0}}, kZN), kZN), "8*x0+7*x4");
    EXPECT_EQ(format(normalize({{-7, 4}, {-8, 0}}, kZN), kZN), "-8*x0-7*x4");
    EXPECT_EQ(format(normalize({{1, 3}, {-1, 5}}, kZN), kZN), "x3-x5");
    EXPECT_EQ(format(Element::generator(2, -1), kZN), "-x2");
    EXPECT_EQ(format(Element(), kZN), "0");
    EXPECT_EQ(format(Element(), Module::zero()), "0");
    EXPECT_EQ(format(normalize({{2, 1}}, Module::finite(3)), Module::finite(3)), "2*x1");
}

TEST(Format, RankOneLeavesAreBareIntegers) {
    EXPECT_EQ(format(Element::integer(-10), kZ), "-10");
    EXPECT_EQ(format(Element(), kZ), "0");
    const Element t = Element::tuple(
        Element::tuple(Element::integer(5), normalize({{7, 4}, {8, 0}}, kZN)),
        Element::integer(3));
    EXPECT_EQ(format(t, kCone), "(5, 8*x0+7*x4, 3)");
    EXPECT_EQ(format(zero(kCone), kCone), "(0, 0, 0)");
}

TEST(Parse, FlatAndNestedTuplesAgree) {
    const Element flat = parseElement("(5, 7*x4+8*x0, 3)", kCone);
    EXPECT_EQ(parseElement("((5, 7*x4 + 8*x0), 3)", kCone), flat);
    EXPECT_EQ(parseElement("(5, (7*x4+8*x0, 3))", kCone), flat);
    EXPECT_EQ(flat.left().right(), normalize({{7, 4}, {8, 0}}, kZN));
    EXPECT_EQ(parseElement("0", kCone), zero(kCone));
    EXPECT_EQ(parseElement("(-10, -8*x0-7*x4, 5)", kCone),
              Element::tuple(Element::tuple(Element::integer(-10),
                                            normalize({{-8, 0}, {-7, 4}}, kZN)),
                             Element::integer(5)));
}

TEST(Parse, LeafForms) {
    EXPECT_EQ(parseElement("5", kZ), Element::integer(5));
    EXPECT_EQ(parseElement("-x0", kZ), Element::integer(-1));
    EXPECT_EQ(parseElement("x1 - x1", kZN), Element());
    EXPECT_EQ(parseElement("x3 + 2*x3 - x0", kZN), normalize({{3, 3}, {-1, 0}}, kZN));
    EXPECT_EQ(parseElement("0", kZN), Element());
}

TEST(Parse, Errors) {
    EXPECT_THROW(parseElement("(5, 3", kCone), ParseError);
    EXPECT_THROW(parseElement("5 x1", kZN), ParseError);
    EXPECT_THROW(parseElement("5*", kZN), ParseError);
    EXPECT_THROW(parseElement("3 + x1", kZN), ParseError);
    EXPECT_THROW(parseElement("(5)", kCone), ParseError);
    EXPECT_THROW(parseElement("", kZ), ParseError);
    EXPECT_THROW(parseElement("5", kZN), MembershipError);
    EXPECT_THROW(parseElement("x1", kZ), MembershipError);
    EXPECT_THROW(parseElement("(1, 2)", kCone), MembershipError);
    EXPECT_THROW(parseElement("(1, 2)", kZ), MembershipError);
}

TEST(ParsePrintProperty, RoundTripOnRandomElements) {
    gen::Gen g(2024);
    for (int n = 0; n < 1000; ++n) {
        const Module m = g.module();
        const Element e = g.element(m);
        const std::string text = format(e, m);
        EXPECT_EQ(parseElement(text, m), e) << text << " in " << m.describe();
    }
}
