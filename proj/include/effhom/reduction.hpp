#pragma once

#include "effhom/complex.hpp"
#include "effhom/law_report.hpp"

#include <functional>
#include <memory>
#include <string>
#include <utility>

namespace effhom {

/// A degree-raising family h_i : M_i -> M_{i+1} over a complex.
class HomotopyOperator {
  public:
    using Family = std::function<ModMorphism(Degree)>;

    HomotopyOperator(ChainComplex over, Family family)
        : over_(std::move(over)),
          family_(std::make_shared<const Family>(std::move(family))) {}

    const ChainComplex& over() const noexcept { return over_; }

    ModMorphism at(Degree i) const {
        ModMorphism h = (*family_)(i);
        if (!(h.source() == over_.at(i)) || !(h.target() == over_.at(i + 1)))
            throw ShapeError("homotopy operator over " + over_.name() + " at " +
                             std::to_string(i) + " does not match the grading");
        return h;
    }

  private:
    ChainComplex over_;
    std::shared_ptr<const Family> family_;
};

inline HomotopyOperator zeroHomotopy(const ChainComplex& cc) {
    return HomotopyOperator(cc, [cc](Degree i) { return zeroMorphism(cc.at(i), cc.at(i + 1)); });
}

/// Degrees on which constructors compare descriptors eagerly.
inline constexpr Degree kShapeWindow = 4;

/// The 5-tuple (top, bottom, f, g, h). Constructible without proof; its
/// five laws are established by checkReductionLaws.
struct Reduction {
    ChainComplex top;
    ChainComplex bottom;
    ChainMorphism f; // top -> bottom
    ChainMorphism g; // bottom -> top
    HomotopyOperator h;

    Reduction(ChainMorphism f_, ChainMorphism g_, HomotopyOperator h_)
        : top(f_.source()), bottom(f_.target()), f(std::move(f_)), g(std::move(g_)),
          h(std::move(h_)) {
        for (Degree i = -kShapeWindow; i <= kShapeWindow; ++i) {
            if (!(g.source().at(i) == bottom.at(i)) || !(g.target().at(i) == top.at(i)))
                throw ShapeError("g does not run from bottom to top at degree " +
                                 std::to_string(i));
            if (!(h.over().at(i) == top.at(i)))
                throw ShapeError("h is not over the top complex at degree " +
                                 std::to_string(i));
            f.at(i);
            g.at(i);
            h.at(i);
        }
    }
};

/// Law names used in reports.
namespace law {
inline constexpr const char* fg = "reduction.fg=id";
inline constexpr const char* homotopy = "reduction.dh+hd+gf=id";
inline constexpr const char* fh = "reduction.fh=0";
inline constexpr const char* hg = "reduction.hg=0";
inline constexpr const char* hh = "reduction.hh=0";
inline constexpr const char* contracting = "contracting";
inline constexpr const char* square = "homotopy.hh=0";
} // namespace law

/// Samples the five reduction laws at every degree of the window.
inline LawReport checkReductionLaws(const Reduction& r, const Sampler& sampler) {
    const auto& top = r.top;
    const auto& bottom = r.bottom;
    const auto& f = r.f;
    const auto& g = r.g;
    const auto& h = r.h;
    LawReport report;
    report.merge(checkLaw(
        PointwiseLaw{law::fg, [f, g](Degree i) { return compose(f.at(i), g.at(i)); },
                     [bottom](Degree i) { return identity(bottom.at(i)); }},
        sampler));
    report.merge(checkLaw(
        PointwiseLaw{law::homotopy,
                     [top, f, g, h](Degree i) {
                         return compose(top.diff(i + 1), h.at(i + 1)) +
                                compose(h.at(i), top.diff(i)) +
                                compose(g.at(i + 1), f.at(i + 1));
                     },
                     [top](Degree i) { return identity(top.at(i + 1)); }},
        sampler));
    report.merge(checkLaw(
        PointwiseLaw{law::fh, [f, h](Degree i) { return compose(f.at(i + 1), h.at(i)); },
                     [top, bottom](Degree i) {
                         return zeroMorphism(top.at(i), bottom.at(i + 1));
                     }},
        sampler));
    report.merge(checkLaw(
        PointwiseLaw{law::hg, [g, h](Degree i) { return compose(h.at(i), g.at(i)); },
                     [top, bottom](Degree i) {
                         return zeroMorphism(bottom.at(i), top.at(i + 1));
                     }},
        sampler));
    report.merge(checkLaw(
        PointwiseLaw{law::hh, [h](Degree i) { return compose(h.at(i + 1), h.at(i)); },
                     [top](Degree i) { return zeroMorphism(top.at(i), top.at(i + 2)); }},
        sampler));
    return report;
}

/// d_i o h_i + h_{i-1} o d_{i-1} = id on sampled elements of degree i.
inline ModMorphism contractionComposite(const ChainComplex& cc, const HomotopyOperator& h,
                                        Degree i) {
    return compose(cc.diff(i), h.at(i)) + compose(h.at(i - 1), cc.diff(i - 1));
}

inline LawReport checkContracting(const ChainComplex& cc, const HomotopyOperator& h,
                                  const Sampler& sampler) {
    return checkLaw(
        PointwiseLaw{law::contracting,
                     [cc, h](Degree i) { return contractionComposite(cc, h, i); },
                     [cc](Degree i) { return identity(cc.at(i)); }},
        sampler);
}

/// h_{i+1} o h_i = 0.
inline LawReport checkHomotopySquare(const HomotopyOperator& h, const Sampler& sampler) {
    const ChainComplex& cc = h.over();
    return checkLaw(
        PointwiseLaw{law::square, [h](Degree i) { return compose(h.at(i + 1), h.at(i)); },
                     [cc](Degree i) { return zeroMorphism(cc.at(i), cc.at(i + 2)); }},
        sampler);
}

/// A reduction whose bottom complex is free of finite type.
class EffectiveHomology {
  public:
    explicit EffectiveHomology(Reduction reduction)
        : reduction_(std::move(reduction)),
          evidence_(isFiniteTypeComplex(reduction_.bottom, -kShapeWindow, kShapeWindow)) {
        if (!evidence_.holds())
            throw NotFiniteError("bottom complex " + reduction_.bottom.name() +
                                 " is not declared and verified finite type");
    }

    const Reduction& reduction() const noexcept { return reduction_; }
    const ChainComplex& top() const noexcept { return reduction_.top; }
    const ChainComplex& bottom() const noexcept { return reduction_.bottom; }
    const FiniteTypeEvidence& bottomFiniteType() const noexcept { return evidence_; }

  private:
    Reduction reduction_;
    FiniteTypeEvidence evidence_;
};

/// Samples the reduction laws and throws LawViolationError on any violation.
inline EffectiveHomology verified(EffectiveHomology eh, const Sampler& sampler = Sampler()) {
    LawReport report = checkReductionLaws(eh.reduction(), sampler);
    if (!report.ok())
        throw LawViolationError(std::move(report));
    return eh;
}

/// i |-> h_i + g_{i+1} o hBottom_i o f_i : a homotopy on the top complex
/// built from one on the bottom.
inline HomotopyOperator perturbHomotopy(const Reduction& r, const HomotopyOperator& hBottom) {
    for (Degree i = -kShapeWindow; i <= kShapeWindow; ++i)
        if (!(hBottom.over().at(i) == r.bottom.at(i)))
            throw ShapeError("homotopy is not over the bottom complex at degree " +
                             std::to_string(i));
    return HomotopyOperator(r.top, [r, hBottom](Degree i) {
        return r.h.at(i) + compose(r.g.at(i + 1), hBottom.at(i), r.f.at(i));
    });
}

/// Whether d_i(x) = 0, for x of degree i+1.
inline bool isCycle(const ChainComplex& cc, Degree i, const Element& x) {
    return cc.diff(i)(x).isZero();
}

class NotACycleError : public Error {
  public:
    NotACycleError(Element boundary, Module module, Degree diffIndex)
        : Error("not a cycle: d_" + std::to_string(diffIndex) +
                "(x) = " + format(boundary, module)),
          boundary_(std::move(boundary)), module_(std::move(module)),
          diffIndex_(diffIndex) {}

    const Element& boundary() const noexcept { return boundary_; }
    const Module& module() const noexcept { return module_; }
    Degree diffIndex() const noexcept { return diffIndex_; }

  private:
    Element boundary_;
    Module module_;
    Degree diffIndex_;
};

class VerificationFailedError : public Error {
  public:
    VerificationFailedError(Element candidate, Element image, Module candidateModule,
                            Module imageModule)
        : Error("pre-image verification failed: h(x) = " +
                format(candidate, candidateModule) + " but d(h(x)) = " +
                format(image, imageModule)),
          candidate_(std::move(candidate)), image_(std::move(image)) {}

    const Element& candidate() const noexcept { return candidate_; }
    const Element& image() const noexcept { return image_; }

  private:
    Element candidate_;
    Element image_;
};

/// For a cycle x of degree i, returns z = h_i(x) after checking d_i(z) = x.
inline Element preimage(const ChainComplex& cc, const HomotopyOperator& h, Degree i,
                        const Element& x) {
    const ModMorphism dBelow = cc.diff(i - 1);
    Element boundary = dBelow(x);
    if (!boundary.isZero())
        throw NotACycleError(std::move(boundary), dBelow.target(), i - 1);
    const ModMorphism hi = h.at(i);
    Element z = hi(x);
    Element dz = cc.diff(i)(z);
    if (!(dz == x))
        throw VerificationFailedError(std::move(z), std::move(dz), hi.target(), cc.at(i));
    return z;
}

/// Effective homology to the null complex from a contracting homotopy.
/// Requires both d o h + h o d = id and h o h = 0 on the sampled window.
inline EffectiveHomology acyclicToNullEffectiveHomology(const ChainComplex& cc,
                                                        const HomotopyOperator& h,
                                                        const Sampler& sampler = Sampler()) {
    LawReport report = checkContracting(cc, h, sampler);
    report.merge(checkHomotopySquare(h, sampler));
    if (!report.ok())
        throw LawViolationError(std::move(report));
    const ChainComplex null = nullComplex();
    return EffectiveHomology(
        Reduction(zeroChainMorphism(cc, null), zeroChainMorphism(null, cc), h));
}

} // namespace effhom
