#pragma once

#include "effhom/complex.hpp"
#include "effhom/element.hpp"
#include "effhom/reduction.hpp"
#include "effhom/smith.hpp"

#include <string>
#include <vector>

namespace effhom {

/// Ordered basis of a finite-type descriptor: x_0..x_{k-1} for a leaf, the
/// left basis then the right basis (each injected) for a sum.
inline std::vector<Element> enumerateBasis(const Module& desc) {
    if (!desc.isFiniteType())
        throw NotFiniteError("no finite basis for " + desc.describe());
    std::vector<Element> basis;
    if (desc.isSum()) {
        const Element zl = zero(desc.left());
        const Element zr = zero(desc.right());
        for (auto& e : enumerateBasis(desc.left()))
            basis.push_back(Element::tuple(std::move(e), zr));
        for (auto& e : enumerateBasis(desc.right()))
            basis.push_back(Element::tuple(zl, std::move(e)));
        return basis;
    }
    for (GeneratorIndex k = 0; k < desc.rank(); ++k)
        basis.push_back(Element::generator(k));
    return basis;
}

/// Coordinates of an element in the basis of enumerateBasis.
inline std::vector<Coefficient> coordinates(const Element& e, const Module& desc) {
    if (!desc.isFiniteType())
        throw NotFiniteError("no coordinates in " + desc.describe());
    requireMember(e, desc, "coordinates");
    if (desc.isSum()) {
        auto out = coordinates(e.left(), desc.left());
        auto rest = coordinates(e.right(), desc.right());
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }
    std::vector<Coefficient> out(desc.rank());
    for (const auto& t : e.terms())
        out[t.index] = t.coeff;
    return out;
}

/// Matrix of a morphism between finite-type modules; column j holds the
/// image of the j-th source basis element.
inline IntMatrix matrixOf(const ModMorphism& phi) {
    const auto basis = enumerateBasis(phi.source());
    const std::size_t rows = enumerateBasis(phi.target()).size();
    IntMatrix m(rows, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto col = coordinates(phi(basis[j]), phi.target());
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = col[i];
    }
    return m;
}

/// Matrix of d_i : M_{i+1} -> M_i.
inline IntMatrix differentialMatrix(const ChainComplex& cc, Degree i) {
    return matrixOf(cc.diff(i));
}

/// Finitely generated abelian group Z^r + Z/t_1 + ... with t_1 | t_2 | ...
struct HomologyGroup {
    std::size_t bettiRank = 0;
    std::vector<Coefficient> torsion;

    bool isTrivial() const noexcept { return bettiRank == 0 && torsion.empty(); }

    /// `0`, `Z^r`, `Z/2`, `Z^r + Z/d1 + Z/d2`.
    std::string toString() const {
        if (isTrivial())
            return "0";
        std::string s;
        if (bettiRank > 0)
            s = "Z^" + std::to_string(bettiRank);
        for (const auto& t : torsion) {
            if (!s.empty())
                s += " + ";
            s += "Z/" + t.str();
        }
        return s;
    }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H_i = ker d_{i-1} / im d_i for a complex finite at degrees i-1, i, i+1.
///
/// The kernel of d_{i-1} is a direct summand of M_i (its cokernel embeds in
/// the free module M_{i-1}), so the torsion of H_i is that of M_i / im d_i:
/// the invariant factors of d_i greater than 1.
inline HomologyGroup homologyAt(const ChainComplex& cc, Degree i) {
    for (Degree k = i - 1; k <= i + 1; ++k)
        if (!cc.at(k).isFiniteType())
            throw NotFiniteError(cc.name() + " at degree " + std::to_string(k) + " is " +
                                 cc.at(k).describe());
    const std::size_t dim = enumerateBasis(cc.at(i)).size();
    const SNFResult out = smithNormalForm(differentialMatrix(cc, i - 1));
    const SNFResult in = smithNormalForm(differentialMatrix(cc, i));
    HomologyGroup h;
    h.bettiRank = dim - out.rank() - in.rank();
    for (const auto& d : in.invariantFactors)
        if (d != 1)
            h.torsion.push_back(d);
    return h;
}

/// Homology of the top complex, computed on the finite-type bottom.
inline HomologyGroup homologyViaEffectiveHomology(const EffectiveHomology& eh, Degree i) {
    return homologyAt(eh.bottom(), i);
}

} // namespace effhom
