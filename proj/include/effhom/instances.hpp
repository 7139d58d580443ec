#pragma once

#include "effhom/complex.hpp"
#include "effhom/cone.hpp"
#include "effhom/reduction.hpp"

// Catalog of concrete complexes: Z with the alternating x2 / 0 differential,
// Z[N] with the parity differential and its contracting homotopy, their
// direct sum, the two effective homologies, the projection between the tops
// and the effective homology of its cone.

namespace effhom::instances {

using effhom::nullComplex;

namespace detail {

inline ChainComplex alternatingTimesTwo(const char* name, bool declared) {
    return ChainComplex(
        name, [](Degree) { return Module::finite(1); },
        [](Degree i) {
            return isEven(i) ? scalar(Module::finite(1), 2)
                             : zeroMorphism(Module::finite(1), Module::finite(1));
        },
        declared);
}

/// x_j |-> x_j when j has the parity of i, 0 otherwise.
inline ModMorphism keepParity(Degree i) {
    const bool even = isEven(i);
    return fromGeneratorImages(Module::countable(), Module::countable(),
                               [even](GeneratorIndex j) {
                                   return ((j % 2 == 0) == even) ? Element::generator(j)
                                                                 : Element();
                               });
}

} // namespace detail

/// Z in every degree; d_i = x2 for even i, 0 for odd i. No finiteness flag.
inline const ChainComplex& cc1() {
    static const ChainComplex c = detail::alternatingTimesTwo("cc1", false);
    return c;
}

/// The same complex declared free of finite type.
inline const ChainComplex& fcc1() {
    static const ChainComplex c = detail::alternatingTimesTwo("fcc1", true);
    return c;
}

/// Z[N] in every degree; d_i keeps the generators with the parity of i.
inline const ChainComplex& cc2() {
    static const ChainComplex c(
        "cc2", [](Degree) { return Module::countable(); }, detail::keepParity, false);
    return c;
}

/// h_i keeps the generators with the parity of i. Contracting on cc2.
inline const HomotopyOperator& hCC2() {
    static const HomotopyOperator h(cc2(), detail::keepParity);
    return h;
}

inline const ChainComplex& sum12() {
    static const ChainComplex c = directSumComplex(cc1(), cc2());
    return c;
}

/// cc1 -> fcc1 with f = g = id and h = 0.
inline const EffectiveHomology& idZ2x0() {
    static const EffectiveHomology eh(Reduction(
        ChainMorphism(cc1(), fcc1(), [](Degree) { return identity(Module::finite(1)); }),
        ChainMorphism(fcc1(), cc1(), [](Degree) { return identity(Module::finite(1)); }),
        zeroHomotopy(cc1())));
    return eh;
}

/// cc2 -> null through hCC2, witnessing that cc2 is acyclic.
inline const EffectiveHomology& cc2ToNull() {
    static const EffectiveHomology eh = acyclicToNullEffectiveHomology(cc2(), hCC2());
    return eh;
}

/// cc1 + cc2 -> fcc1 with f = pi_1, g = (id, 0), h = (0, hCC2).
/// Construction samples the five laws and throws on a violation.
inline const EffectiveHomology& zxZnat() {
    static const EffectiveHomology eh = [] {
        const ChainComplex& top = sum12();
        ChainMorphism f(top, fcc1(), [top](Degree i) { return proj1(top.at(i)); });
        ChainMorphism g(fcc1(), top, [](Degree i) {
            return pair(identity(cc1().at(i)), zeroMorphism(fcc1().at(i), cc2().at(i)));
        });
        HomotopyOperator h(top, [top](Degree i) {
            const Module in = top.at(i);
            return pair(zeroMorphism(in, cc1().at(i + 1)), compose(hCC2().at(i), proj2(in)));
        });
        return verified(EffectiveHomology(Reduction(std::move(f), std::move(g), std::move(h))));
    }();
    return eh;
}

/// Projection of cc1 + cc2 onto cc1.
inline const ChainMorphism& alphaPi1() {
    static const ChainMorphism a(sum12(), cc1(),
                                 [](Degree i) { return proj1(sum12().at(i)); });
    return a;
}

/// Effective homology of Cone(alphaPi1) through Cone(alpha') over fcc1.
inline const EffectiveHomology& exampleCone() {
    static const EffectiveHomology eh = coneEffectiveHomology(zxZnat(), idZ2x0(), alphaPi1());
    return eh;
}

/// h1_i(a, b) = (0, a) on the bottom cone. Not contracting.
inline const HomotopyOperator& h1Bottom() {
    static const HomotopyOperator h = [] {
        const ChainComplex bottom = exampleCone().bottom();
        return HomotopyOperator(bottom, [bottom](Degree i) {
            const Module in = bottom.at(i);
            const Module out = bottom.at(i + 1);
            return pair(zeroMorphism(in, out.left()), proj1(in));
        });
    }();
    return h;
}

/// h2_i(a, b) = (b, 0) on the bottom cone. Contracting.
inline const HomotopyOperator& h2Bottom() {
    static const HomotopyOperator h = [] {
        const ChainComplex bottom = exampleCone().bottom();
        return HomotopyOperator(bottom, [bottom](Degree i) {
            const Module in = bottom.at(i);
            const Module out = bottom.at(i + 1);
            return pair(proj2(in), zeroMorphism(in, out.right()));
        });
    }();
    return h;
}

/// h2 transported to the top cone: h^Ex + g^Ex o h2 o f^Ex.
inline const HomotopyOperator& hTopCone() {
    static const HomotopyOperator h = perturbHomotopy(exampleCone().reduction(), h2Bottom());
    return h;
}

} // namespace effhom::instances
