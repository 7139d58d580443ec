#pragma once

#include "effhom/element.hpp"
#include "effhom/module.hpp"

#include <functional>
#include <memory>
#include <string>
#include <utility>

namespace effhom {

/// A linear map between two module descriptors.
///
/// The action is opaque: morphisms can be applied and combined but not
/// compared. Application checks that the argument belongs to the source
/// and that the image belongs to the target.
class ModMorphism {
  public:
    using Action = std::function<Element(const Element&)>;

    ModMorphism(Module source, Module target, Action action)
        : source_(std::move(source)), target_(std::move(target)),
          action_(std::make_shared<const Action>(std::move(action))) {}

    const Module& source() const noexcept { return source_; }
    const Module& target() const noexcept { return target_; }

    Element operator()(const Element& e) const {
        requireMember(e, source_, "morphism argument");
        Element image = (*action_)(e);
        requireMember(image, target_, "morphism image");
        return image;
    }

  private:
    Module source_;
    Module target_;
    std::shared_ptr<const Action> action_;
};

inline Element apply(const ModMorphism& phi, const Element& e) { return phi(e); }

/// Extends generator images linearly: x_i |-> images(i).
inline ModMorphism
fromGeneratorImages(Module source, Module target,
                    std::function<Element(GeneratorIndex)> images) {
    if (source.isSum())
        throw ShapeError("generator images need a leaf source, got " +
                         source.describe());
    return ModMorphism(std::move(source), std::move(target),
                       [images = std::move(images), target](const Element& e) {
                           Element acc = zero(target);
                           for (const auto& t : e.terms())
                               acc = add(acc, scale(t.coeff, images(t.index)));
                           return acc;
                       });
}

inline ModMorphism identity(const Module& desc) {
    return ModMorphism(desc, desc, [](const Element& e) { return e; });
}

inline ModMorphism zeroMorphism(const Module& source, const Module& target) {
    return ModMorphism(source, target,
                       [target](const Element&) { return zero(target); });
}

/// Multiplication by a fixed integer on a module.
inline ModMorphism scalar(const Module& desc, Coefficient c) {
    return ModMorphism(desc, desc,
                       [c = std::move(c)](const Element& e) { return scale(c, e); });
}

/// g after f.
inline ModMorphism compose(const ModMorphism& g, const ModMorphism& f) {
    if (!(f.target() == g.source()))
        throw ShapeError("cannot compose: " + f.target().describe() +
                         " vs " + g.source().describe());
    return ModMorphism(f.source(), g.target(),
                       [g, f](const Element& e) { return g(f(e)); });
}

template <typename... Rest>
ModMorphism compose(const ModMorphism& a, const ModMorphism& b,
                    const ModMorphism& c, const Rest&... rest) {
    return compose(a, compose(b, c, rest...));
}

inline ModMorphism operator+(const ModMorphism& f, const ModMorphism& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw ShapeError("cannot add morphisms " + f.source().describe() +
                         " -> " + f.target().describe() + " and " +
                         g.source().describe() + " -> " + g.target().describe());
    return ModMorphism(f.source(), f.target(),
                       [f, g](const Element& e) { return add(f(e), g(e)); });
}

inline ModMorphism operator-(const ModMorphism& f) {
    return ModMorphism(f.source(), f.target(),
                       [f](const Element& e) { return neg(f(e)); });
}

inline ModMorphism operator-(const ModMorphism& f, const ModMorphism& g) {
    return f + (-g);
}

/// e |-> (f(e), g(e)).
inline ModMorphism pair(const ModMorphism& f, const ModMorphism& g) {
    if (!(f.source() == g.source()))
        throw ShapeError("pair of morphisms with different sources");
    return ModMorphism(f.source(), Module::sum(f.target(), g.target()),
                       [f, g](const Element& e) {
                           return Element::tuple(f(e), g(e));
                       });
}

/// (a, b) |-> (f(a), g(b)).
inline ModMorphism directSum(const ModMorphism& f, const ModMorphism& g) {
    return ModMorphism(Module::sum(f.source(), g.source()),
                       Module::sum(f.target(), g.target()),
                       [f, g](const Element& e) {
                           return Element::tuple(f(e.left()), g(e.right()));
                       });
}

inline ModMorphism proj1(const Module& sum) {
    return ModMorphism(sum, sum.left(),
                       [](const Element& e) { return e.left(); });
}

inline ModMorphism proj2(const Module& sum) {
    return ModMorphism(sum, sum.right(),
                       [](const Element& e) { return e.right(); });
}

inline ModMorphism inj1(const Module& sum) {
    return ModMorphism(sum.left(), sum, [z = zero(sum.right())](const Element& e) {
        return Element::tuple(e, z);
    });
}

inline ModMorphism inj2(const Module& sum) {
    return ModMorphism(sum.right(), sum, [z = zero(sum.left())](const Element& e) {
        return Element::tuple(z, e);
    });
}

} // namespace effhom
