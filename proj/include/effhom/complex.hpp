#pragma once

#include "effhom/law_report.hpp"
#include "effhom/module.hpp"
#include "effhom/morphism.hpp"
#include "effhom/sampler.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace effhom {

/// A family of modules indexed by every integer degree.
using GradedModule = std::function<Module(Degree)>;

/// Differential convention: diff(i) maps degree i+1 to degree i.
class ChainComplex {
  public:
    using MorphismFamily = std::function<ModMorphism(Degree)>;

    ChainComplex(std::string name, GradedModule grading, MorphismFamily diff,
                 bool declaredFiniteType = false)
        : impl_(std::make_shared<const Impl>(Impl{std::move(name), std::move(grading),
                                                  std::move(diff),
                                                  declaredFiniteType})) {}

    const std::string& name() const noexcept { return impl_->name; }

    Module at(Degree i) const { return impl_->grading(i); }

    /// d_i : M_{i+1} -> M_i, with descriptors checked against the grading.
    ModMorphism diff(Degree i) const {
        ModMorphism d = impl_->diff(i);
        if (!(d.source() == at(i + 1)) || !(d.target() == at(i)))
            throw ShapeError("differential of " + name() + " at " +
                             std::to_string(i) + " does not match the grading");
        return d;
    }

    /// Uniform finiteness claimed by whoever built the complex.
    bool declaredFiniteType() const noexcept { return impl_->declaredFiniteType; }

    /// Same complex with a different finiteness declaration.
    ChainComplex withFiniteTypeDeclaration(std::string name, bool declared) const {
        return ChainComplex(std::move(name), impl_->grading, impl_->diff, declared);
    }

  private:
    struct Impl {
        std::string name;
        GradedModule grading;
        MorphismFamily diff;
        bool declaredFiniteType;
    };
    std::shared_ptr<const Impl> impl_;
};

inline ModMorphism diffAt(const ChainComplex& cc, Degree i) { return cc.diff(i); }

/// A degree-preserving family f_i : source_i -> target_i.
class ChainMorphism {
  public:
    using Family = std::function<ModMorphism(Degree)>;

    ChainMorphism(ChainComplex source, ChainComplex target, Family family)
        : source_(std::move(source)), target_(std::move(target)),
          family_(std::make_shared<const Family>(std::move(family))) {}

    const ChainComplex& source() const noexcept { return source_; }
    const ChainComplex& target() const noexcept { return target_; }

    ModMorphism at(Degree i) const {
        ModMorphism f = (*family_)(i);
        if (!(f.source() == source_.at(i)) || !(f.target() == target_.at(i)))
            throw ShapeError("chain morphism " + source_.name() + " -> " +
                             target_.name() + " at " + std::to_string(i) +
                             " does not match the gradings");
        return f;
    }

  private:
    ChainComplex source_;
    ChainComplex target_;
    std::shared_ptr<const Family> family_;
};

inline ChainComplex nullComplex() {
    return ChainComplex(
        "null", [](Degree) { return Module::zero(); },
        [](Degree) { return zeroMorphism(Module::zero(), Module::zero()); }, true);
}

inline ChainMorphism identityChainMorphism(const ChainComplex& cc) {
    return ChainMorphism(cc, cc, [cc](Degree i) { return identity(cc.at(i)); });
}

inline ChainMorphism zeroChainMorphism(const ChainComplex& source,
                                       const ChainComplex& target) {
    return ChainMorphism(source, target, [source, target](Degree i) {
        return zeroMorphism(source.at(i), target.at(i));
    });
}

/// Componentwise direct sum of two complexes.
inline ChainComplex directSumComplex(const ChainComplex& a, const ChainComplex& b) {
    return ChainComplex(
        a.name() + "+" + b.name(),
        [a, b](Degree i) { return Module::sum(a.at(i), b.at(i)); },
        [a, b](Degree i) { return directSum(a.diff(i), b.diff(i)); },
        a.declaredFiniteType() && b.declaredFiniteType());
}

/// d_i o d_{i+1} = 0 on sampled elements of degree i+2.
inline LawReport checkNilpotency(const ChainComplex& cc, const Sampler& sampler) {
    return checkLaw(
        PointwiseLaw{"nilpotency",
                     [cc](Degree i) { return compose(cc.diff(i), cc.diff(i + 1)); },
                     [cc](Degree i) { return zeroMorphism(cc.at(i + 2), cc.at(i)); }},
        sampler);
}

/// f_i o d_i = d'_i o f_{i+1} on sampled elements of degree i+1.
inline LawReport checkChainMorphism(const ChainMorphism& f, const Sampler& sampler,
                                    std::string name = "chain-morphism") {
    const ChainComplex& s = f.source();
    const ChainComplex& t = f.target();
    return checkLaw(
        PointwiseLaw{std::move(name),
                     [f, s](Degree i) { return compose(f.at(i), s.diff(i)); },
                     [f, t](Degree i) { return compose(t.diff(i), f.at(i + 1)); }},
        sampler);
}

struct FiniteTypeEvidence {
    bool finiteOnWindow = true;
    bool declared = false;
    Degree lo = 0;
    Degree hi = 0;
    std::optional<Degree> firstInfiniteDegree;

    /// Finite type in the sense used for effective homology.
    bool holds() const noexcept { return finiteOnWindow && declared; }
};

/// Finiteness of every module in the witness window, plus the declaration.
inline FiniteTypeEvidence isFiniteTypeComplex(const ChainComplex& cc, Degree lo,
                                              Degree hi) {
    FiniteTypeEvidence ev;
    ev.declared = cc.declaredFiniteType();
    ev.lo = lo;
    ev.hi = hi;
    for (Degree i = lo; i <= hi; ++i) {
        if (!cc.at(i).isFiniteType()) {
            ev.finiteOnWindow = false;
            ev.firstInfiniteDegree = i;
            break;
        }
    }
    return ev;
}

} // namespace effhom
