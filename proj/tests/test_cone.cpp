#include "effhom/cone.hpp"
#include "effhom/element_io.hpp"
#include "effhom/instances.hpp"

#include "oracles/cone_expansion.hpp"

#include <gtest/gtest.h>

using namespace effhom;
using namespace effhom::instances;

namespace {

const Module kZ = Module::finite(1);
const Module kZN = Module::countable();

Element e() { return normalize({{7, 4}, {8, 0}}, kZN); }

Element coneTuple(long a, const Element& b, long c) {
    return Element::tuple(Element::tuple(Element::integer(a), b), Element::integer(c));
}

} // namespace

TEST(Cone, GradingIsSourcePlusShiftedTarget) {
    const ChainComplex c = cone(alphaPi1());
    EXPECT_EQ(c.at(0), Module::sum(Module::sum(kZ, kZN), kZ));
    EXPECT_EQ(c.name(), "Cone(cc1+cc2->cc1)");
    EXPECT_FALSE(c.declaredFiniteType());
    EXPECT_TRUE(cone(identityChainMorphism(fcc1())).declaredFiniteType());
}

TEST(Cone, WorkedDifferential) {
    const ChainComplex c = cone(alphaPi1());
    EXPECT_EQ(c.diff(2)(coneTuple(5, e(), 3)), coneTuple(-10, neg(e()), 5));
    EXPECT_TRUE(c.diff(1)(coneTuple(-10, neg(e()), 5)).isZero());
}

// d''(x, 0) = (-d x, alpha x): the sign sits on the first component only.
TEST(Cone, SignConvention) {
    const ChainComplex c = cone(identityChainMorphism(cc1()));
    const Element x = Element::tuple(Element::integer(1), Element());
    EXPECT_EQ(c.diff(0)(x), Element::tuple(Element::integer(-2), Element::integer(1)));
    const Element y = Element::tuple(Element(), Element::integer(1));
    EXPECT_EQ(c.diff(0)(y), Element::tuple(Element(), Element()));
    EXPECT_EQ(c.diff(1)(y), Element::tuple(Element(), Element::integer(2)));
}

TEST(Cone, NilpotentOnInstances) {
    const Sampler s;
    EXPECT_TRUE(checkNilpotency(cone(alphaPi1()), s).ok());
    EXPECT_TRUE(checkNilpotency(cone(zxZnat().reduction().f), s).ok());
    EXPECT_TRUE(checkNilpotency(cone(identityChainMorphism(cc2())), s).ok());
}

TEST(Cone, OfMapsBetweenNullComplexesIsNull) {
    const ChainComplex c = cone(identityChainMorphism(nullComplex()));
    EXPECT_EQ(c.at(0), Module::sum(Module::zero(), Module::zero()));
    EXPECT_TRUE(c.diff(0)(zero(c.at(1))).isZero());
    EXPECT_TRUE(checkNilpotency(c, Sampler()).ok());
}

TEST(BottomMorphism, IsIdentityForTheWorkedExample) {
    const ChainMorphism a =
        bottomMorphism(zxZnat().reduction(), idZ2x0().reduction(), alphaPi1());
    for (Degree i = -3; i <= 3; ++i)
        EXPECT_EQ(a.at(i)(Element::integer(5)), Element::integer(5));
    EXPECT_TRUE(checkChainMorphism(a, Sampler()).ok());
}

TEST(ConeReduction, WorkedExampleSatisfiesAllLaws) {
    const auto report = checkReductionLaws(exampleCone().reduction(), Sampler());
    EXPECT_TRUE(report.ok()) << report.toText();
    EXPECT_TRUE(checkChainMorphism(exampleCone().reduction().f, Sampler()).ok());
    EXPECT_TRUE(checkChainMorphism(exampleCone().reduction().g, Sampler()).ok());
}

TEST(ConeReduction, FgOnWorkedBottomElement) {
    const Reduction& r = exampleCone().reduction();
    const Element y = Element::tuple(Element::integer(5), Element::integer(7));
    EXPECT_EQ(r.f.at(2)(r.g.at(2)(y)), y);
    EXPECT_EQ(r.g.at(2)(y), coneTuple(5, Element(), 7));
}

TEST(ConeReduction, IdentityReductionsOnBothEnds) {
    const EffectiveHomology eh =
        coneEffectiveHomology(idZ2x0(), idZ2x0(), identityChainMorphism(cc1()));
    EXPECT_TRUE(checkReductionLaws(eh.reduction(), Sampler()).ok());
    EXPECT_EQ(eh.bottom().at(0), Module::sum(kZ, kZ));
}

TEST(ConeReduction, NullEnds) {
    const EffectiveHomology eh =
        coneEffectiveHomology(cc2ToNull(), cc2ToNull(), identityChainMorphism(cc2()));
    EXPECT_TRUE(checkReductionLaws(eh.reduction(), Sampler()).ok());
    EXPECT_TRUE(eh.bottomFiniteType().holds());
}

TEST(ConeEffectiveHomology, BottomIsFiniteType) {
    const EffectiveHomology& eh = exampleCone();
    EXPECT_EQ(eh.bottom().at(0), Module::sum(kZ, kZ));
    EXPECT_TRUE(eh.bottomFiniteType().holds());
    EXPECT_EQ(eh.top().at(0), Module::sum(Module::sum(kZ, kZN), kZ));
}

TEST(ConeContraction, WorkedPoint) {
    const Reduction& r = zxZnat().reduction();
    const HomotopyOperator k = coneContraction(r);
    const Element x = Element::tuple(Element::integer(5), e());
    const Element y = Element::integer(3);
    // k(x, y) = (g y - h x, 0) with g y = (3, 0) and h x = (0, hCC2(e)).
    const Element got = k.at(2)(Element::tuple(x, y));
    EXPECT_EQ(got.left(), r.g.at(3)(y) - r.h.at(2)(x));
    EXPECT_TRUE(got.right().isZero());
    const Element composite = contractionComposite(cone(r.f), k, 2)(Element::tuple(x, y));
    EXPECT_EQ(composite, Element::tuple(x, y));
}

TEST(ConeContraction, OnPureBottomElementsIsG) {
    const Reduction& r = zxZnat().reduction();
    const HomotopyOperator k = coneContraction(r);
    const Module src = cone(r.f).at(1);
    for (long v : {-4L, 0L, 1L, 9L}) {
        const Element y = Element::integer(v);
        EXPECT_EQ(k.at(1)(Element::tuple(zero(src.left()), y)),
                  Element::tuple(r.g.at(2)(y), Element()));
    }
}

TEST(ConeContraction, AgreesWithExpandedOracle) {
    const Sampler s;
    for (const Reduction* r : {&zxZnat().reduction(), &idZ2x0().reduction(),
                               &exampleCone().reduction(), &cc2ToNull().reduction()}) {
        const ChainComplex c = cone(r->f);
        const HomotopyOperator k = coneContraction(*r);
        std::size_t samples = 0;
        for (Degree i = -8; i <= 8; ++i)
            for (std::size_t n = 0; n < 32; ++n) {
                const Element xy = s.draw(c.at(i), "cone-contraction", i, n);
                const auto [first, second] =
                    oracle::expandedContraction(*r, i, xy.left(), xy.right());
                EXPECT_EQ(first, xy.left());
                EXPECT_EQ(second, xy.right());
                EXPECT_EQ(contractionComposite(c, k, i)(xy), Element::tuple(first, second));
                ++samples;
            }
        EXPECT_GE(samples, 100u);
        EXPECT_TRUE(checkContracting(c, k, s).ok());
        EXPECT_TRUE(checkHomotopySquare(k, s).ok());
    }
}

TEST(ConeContraction, SymbolicExpansionReducesToIdentity) {
    const oracle::SymbolicContraction s = oracle::symbolicContraction();
    EXPECT_EQ(s.firstFromX, (oracle::WordSum{{oracle::Word{}, 1}}));
    EXPECT_TRUE(s.firstFromY.empty());
    EXPECT_EQ(s.secondFromY, (oracle::WordSum{{oracle::Word{}, 1}}));
    EXPECT_TRUE(s.secondFromX.empty());
}

TEST(ConeContraction, BrokenReductionIsCaught) {
    const Reduction& r = zxZnat().reduction();
    const Reduction broken(r.f, r.g, zeroHomotopy(r.top));
    const ChainComplex c = cone(broken.f);
    EXPECT_FALSE(checkContracting(c, coneContraction(broken), Sampler()).ok());
}
