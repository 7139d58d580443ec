#pragma once

#include "effhom/complex.hpp"
#include "effhom/reduction.hpp"

#include <utility>

namespace effhom {

/// Cone of alpha : CC -> CC'. Degree i is CC_i + CC'_{i+1} and
///   d''_i(x, x') = (-d_i(x), d'_{i+1}(x') + alpha_{i+1}(x)).
inline ChainComplex cone(const ChainMorphism& alpha) {
    const ChainComplex src = alpha.source();
    const ChainComplex dst = alpha.target();
    auto grading = [src, dst](Degree i) { return Module::sum(src.at(i), dst.at(i + 1)); };
    return ChainComplex(
        "Cone(" + src.name() + "->" + dst.name() + ")", grading,
        [src, dst, alpha, grading](Degree i) {
            const Module in = grading(i + 1);
            const ModMorphism p1 = proj1(in);
            const ModMorphism p2 = proj2(in);
            return pair(-compose(src.diff(i), p1),
                        compose(dst.diff(i + 1), p2) + compose(alpha.at(i + 1), p1));
        },
        src.declaredFiniteType() && dst.declaredFiniteType());
}

/// alpha' = f2 o alpha o g1 between the bottoms of two reductions.
inline ChainMorphism bottomMorphism(const Reduction& r1, const Reduction& r2,
                                    const ChainMorphism& alpha) {
    return ChainMorphism(r1.bottom, r2.bottom, [r1, r2, alpha](Degree i) {
        return compose(r2.f.at(i), alpha.at(i), r1.g.at(i));
    });
}

/// Reduction from Cone(alpha) to Cone(alpha'), given reductions r1, r2 of the
/// source and target of alpha:
///   f''_i(x, x') = (f(x), f'(alpha(h(x))) + f'(x'))
///   g''_i(y, y') = (g(y), -h'(alpha(g(y))) + g'(y'))
///   h''_i(x, x') = (-h(x), h'(alpha(h(x))) + h'(x'))
inline Reduction coneReduction(const Reduction& r1, const Reduction& r2,
                               const ChainMorphism& alpha) {
    const ChainComplex top = cone(alpha);
    const ChainMorphism alphaBottom = bottomMorphism(r1, r2, alpha);
    const ChainComplex bottom = cone(alphaBottom);

    ChainMorphism f(top, bottom, [top, r1, r2, alpha](Degree i) {
        const Module in = top.at(i);
        const ModMorphism p1 = proj1(in);
        const ModMorphism p2 = proj2(in);
        return pair(compose(r1.f.at(i), p1),
                    compose(r2.f.at(i + 1), alpha.at(i + 1), r1.h.at(i), p1) +
                        compose(r2.f.at(i + 1), p2));
    });
    ChainMorphism g(bottom, top, [bottom, r1, r2, alpha](Degree i) {
        const Module in = bottom.at(i);
        const ModMorphism p1 = proj1(in);
        const ModMorphism p2 = proj2(in);
        return pair(compose(r1.g.at(i), p1),
                    -compose(r2.h.at(i), alpha.at(i), r1.g.at(i), p1) +
                        compose(r2.g.at(i + 1), p2));
    });
    HomotopyOperator h(top, [top, r1, r2, alpha](Degree i) {
        const Module in = top.at(i);
        const ModMorphism p1 = proj1(in);
        const ModMorphism p2 = proj2(in);
        return pair(-compose(r1.h.at(i), p1),
                    compose(r2.h.at(i + 1), alpha.at(i + 1), r1.h.at(i), p1) +
                        compose(r2.h.at(i + 1), p2));
    });
    return Reduction(std::move(f), std::move(g), std::move(h));
}

/// Effective homology of Cone(alpha) from effective homologies of its ends.
/// The bottom Cone(alpha') is finite type because both bottoms are.
inline EffectiveHomology coneEffectiveHomology(const EffectiveHomology& eh1,
                                               const EffectiveHomology& eh2,
                                               const ChainMorphism& alpha) {
    return EffectiveHomology(coneReduction(eh1.reduction(), eh2.reduction(), alpha));
}

/// Contracting homotopy of Cone(f) for a reduction (M, N, f, g, h):
///   k_i(x, y) = (g_{i+1}(y) - h_i(x), 0).
/// Laws 1 and 3 give the second component, law 2 and g being a chain map
/// give the first. k o k = 0 follows from laws 4 and 5.
inline HomotopyOperator coneContraction(const Reduction& r) {
    const ChainComplex c = cone(r.f);
    return HomotopyOperator(c, [c, r](Degree i) {
        const Module in = c.at(i);
        const Module out = c.at(i + 1);
        return pair(compose(r.g.at(i + 1), proj2(in)) - compose(r.h.at(i), proj1(in)),
                    zeroMorphism(in, out.right()));
    });
}

} // namespace effhom
