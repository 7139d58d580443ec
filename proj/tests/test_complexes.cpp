#include "effhom/complex.hpp"
#include "effhom/element_io.hpp"
#include "effhom/instances.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace effhom;
using namespace effhom::instances;

namespace {

const Module kZ = Module::finite(1);
const Module kZN = Module::countable();

Element e() { return normalize({{7, 4}, {8, 0}}, kZN); }

ChainComplex identityDifferential() {
    return ChainComplex(
        "broken", [](Degree) { return kZN; }, [](Degree) { return identity(kZN); });
}

} // namespace

TEST(DiffAt, Examples) {
    EXPECT_EQ(diffAt(cc1(), 2)(Element::integer(5)), Element::integer(10));
    EXPECT_TRUE(diffAt(cc1(), 1)(Element::integer(5)).isZero());
    EXPECT_TRUE(diffAt(nullComplex(), -3)(Element()).isZero());
    EXPECT_EQ(diffAt(cc1(), -2)(Element::integer(1)), Element::integer(2));
    EXPECT_TRUE(diffAt(cc1(), -1)(Element::integer(1)).isZero());
}

TEST(DiffAt, RejectsFamiliesThatDisagreeWithTheGrading) {
    ChainComplex bad("bad", [](Degree) { return kZ; }, [](Degree) { return identity(kZN); });
    EXPECT_THROW(bad.diff(0), ShapeError);
}

TEST(DiffAt, TotalOverLargeDegrees) {
    for (Degree i : {Degree{-1000000}, Degree{-999999}, Degree{0}, Degree{999999}, Degree{1000000}}) {
        EXPECT_NO_THROW(diffAt(cc2(), i)(e()));
        EXPECT_NO_THROW(diffAt(exampleCone().top(), i));
        EXPECT_NO_THROW(diffAt(exampleCone().bottom(), i));
    }
}

TEST(Nilpotency, Cc2PassesOnWindow) {
    const auto report = checkNilpotency(cc2(), Sampler({-4, 4, 32, 1}));
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.cases().size(), 9u * 32u);
}

TEST(Nilpotency, IdentityDifferentialFailsEverywhere) {
    const auto report = checkNilpotency(identityDifferential(), Sampler({-3, 3, 16, 5}));
    std::set<Degree> failing;
    for (const auto& c : report.counterexamples()) {
        EXPECT_FALSE(c.input.isZero());
        failing.insert(c.degree);
    }
    for (const auto& c : report.cases())
        if (!c.input.isZero())
            EXPECT_FALSE(c.pass);
    EXPECT_EQ(failing.size(), 7u);
}

TEST(Nilpotency, NullComplexPasses) {
    EXPECT_TRUE(checkNilpotency(nullComplex(), Sampler()).ok());
}

TEST(ChainMorphismCheck, ProjectionAndIdentityPass) {
    EXPECT_TRUE(checkChainMorphism(alphaPi1(), Sampler()).ok());
    EXPECT_TRUE(checkChainMorphism(identityChainMorphism(cc2()), Sampler()).ok());
}

// pi_1 into a copy of cc1 whose x2 / 0 pattern is shifted by one degree.
// Brute force over x_0, x_1 in both summands at degree 0 finds the violation
// at the element (1, 0): f(d(1, 0)) = 2 but d'(f(1, 0)) = 0.
TEST(ChainMorphismCheck, SwappedParityTargetFails) {
    ChainComplex shifted(
        "cc1-shifted", [](Degree) { return kZ; },
        [](Degree i) { return isEven(i) ? zeroMorphism(kZ, kZ) : scalar(kZ, 2); });
    ChainMorphism swapped(sum12(), shifted, [](Degree i) { return proj1(sum12().at(i)); });

    std::vector<Element> candidates;
    for (const auto& a : {Element(), Element::integer(1)})
        for (const auto& b : {Element(), Element::generator(0), Element::generator(1)})
            candidates.push_back(Element::tuple(a, b));
    bool found = false;
    for (const auto& x : candidates) {
        const Element lhs = swapped.at(0)(sum12().diff(0)(x));
        const Element rhs = shifted.diff(0)(swapped.at(1)(x));
        if (!(lhs == rhs)) {
            found = true;
            EXPECT_EQ(x.left(), Element::integer(1));
            EXPECT_EQ(lhs, Element::integer(2));
            EXPECT_TRUE(rhs.isZero());
        }
    }
    EXPECT_TRUE(found);
    EXPECT_FALSE(checkChainMorphism(swapped, Sampler()).ok());
}

TEST(DirectSum, ComponentwiseDifferential) {
    const ChainComplex s = directSumComplex(cc1(), cc2());
    EXPECT_EQ(s.diff(2)(Element::tuple(Element::integer(5), e())),
              Element::tuple(Element::integer(10), e()));
    EXPECT_EQ(s.diff(1)(Element::tuple(Element::integer(5), Element::generator(1))),
              Element::tuple(Element(), Element::generator(1)));
    const ChainComplex withNull = directSumComplex(cc1(), nullComplex());
    EXPECT_EQ(withNull.diff(0)(Element::tuple(Element::integer(3), Element())),
              Element::tuple(Element::integer(6), Element()));
    EXPECT_TRUE(checkNilpotency(s, Sampler()).ok());
}

TEST(DirectSum, AgreesWithSummandsOnSamples) {
    const ChainComplex s = directSumComplex(cc1(), cc2());
    const Sampler sampler;
    for (Degree i = -4; i <= 4; ++i)
        for (std::size_t k = 0; k < 16; ++k) {
            const Element x = sampler.draw(s.at(i + 1), "direct-sum", i, k);
            EXPECT_EQ(s.diff(i)(x), Element::tuple(cc1().diff(i)(x.left()),
                                                   cc2().diff(i)(x.right())));
        }
}

TEST(FiniteType, Examples) {
    EXPECT_TRUE(isFiniteTypeComplex(fcc1(), -8, 8).holds());
    EXPECT_FALSE(isFiniteTypeComplex(cc2(), -8, 8).finiteOnWindow);
    EXPECT_EQ(isFiniteTypeComplex(cc2(), -8, 8).firstInfiniteDegree, Degree{-8});
    EXPECT_TRUE(isFiniteTypeComplex(nullComplex(), -8, 8).holds());
    // cc1 has finite modules but carries no declaration.
    EXPECT_TRUE(isFiniteTypeComplex(cc1(), -8, 8).finiteOnWindow);
    EXPECT_FALSE(isFiniteTypeComplex(cc1(), -8, 8).holds());
}

TEST(LawReportText, SummaryLineFormat) {
    const auto report = checkNilpotency(cc1(), Sampler({-1, 1, 2, 99}));
    const std::string text = report.toText();
    EXPECT_NE(text.find("law=nilpotency degrees=-1..1 samples=2 seed=99 violations=0\n"),
              std::string::npos);
    EXPECT_NE(text.find("law=nilpotency degree=-1 sample=0 verdict=pass input="),
              std::string::npos);
    const auto j = report.toJson();
    EXPECT_EQ(j["summaries"][0]["violations"], 0);
    EXPECT_EQ(j["cases"].size(), 6u);
}

TEST(LawReportText, SameSeedSameReport) {
    const Sampler a({-3, 3, 8, 42});
    EXPECT_EQ(checkNilpotency(sum12(), a).toText(), checkNilpotency(sum12(), a).toText());
    const Sampler b({-3, 3, 8, 43});
    EXPECT_NE(checkNilpotency(sum12(), a).toText(), checkNilpotency(sum12(), b).toText());
}
