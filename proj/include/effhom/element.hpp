#pragma once

#include "effhom/coefficient.hpp"
#include "effhom/errors.hpp"
#include "effhom/module.hpp"

#include <algorithm>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace effhom {

struct Term {
    GeneratorIndex index;
    Coefficient coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A value of a free module.
///
/// Either a finite linear combination of generators, kept in canonical form
/// (indices strictly increasing, no zero coefficient), or a pair of elements
/// for a direct sum. Equality is structural on canonical forms.
class Element {
  public:
    /// The zero combination.
    Element() = default;

    /// Canonicalizes raw terms without checking them against a descriptor.
    static Element combination(std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
            return a.index < b.index;
        });
        std::vector<Term> merged;
        merged.reserve(raw.size());
        for (auto& t : raw) {
            if (!merged.empty() && merged.back().index == t.index)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
        Element e;
        e.value_ = Comb{std::move(merged)};
        return e;
    }

    static Element generator(GeneratorIndex index, Coefficient coeff = 1) {
        return combination({Term{index, std::move(coeff)}});
    }

    /// An element of a rank-1 module, written as a bare integer.
    static Element integer(Coefficient value) {
        return generator(0, std::move(value));
    }

    static Element tuple(Element left, Element right) {
        Element e;
        e.value_ = Tuple{std::make_shared<const Element>(std::move(left)),
                         std::make_shared<const Element>(std::move(right))};
        return e;
    }

    /// Right-nested tuple builder: tuple(a, b, c) == tuple(a, tuple(b, c)).
    template <typename... Rest>
    static Element tuple(Element a, Element b, Element c, Rest... rest) {
        return tuple(std::move(a),
                     tuple(std::move(b), std::move(c), std::move(rest)...));
    }

    bool isCombination() const noexcept {
        return std::holds_alternative<Comb>(value_);
    }
    bool isTuple() const noexcept { return std::holds_alternative<Tuple>(value_); }

    const std::vector<Term>& terms() const {
        if (const auto* c = std::get_if<Comb>(&value_))
            return c->terms;
        throw MembershipError("terms() of a tuple element");
    }

    const Element& left() const {
        if (const auto* t = std::get_if<Tuple>(&value_))
            return *t->left;
        throw MembershipError("left() of a combination element");
    }

    const Element& right() const {
        if (const auto* t = std::get_if<Tuple>(&value_))
            return *t->right;
        throw MembershipError("right() of a combination element");
    }

    /// Coefficient of x_index in a combination (0 when absent).
    Coefficient coefficient(GeneratorIndex index) const {
        for (const auto& t : terms()) {
            if (t.index == index)
                return t.coeff;
            if (t.index > index)
                break;
        }
        return 0;
    }

    bool isZero() const {
        if (const auto* c = std::get_if<Comb>(&value_))
            return c->terms.empty();
        return left().isZero() && right().isZero();
    }

    friend bool operator==(const Element& a, const Element& b) {
        if (a.isCombination() != b.isCombination())
            return false;
        if (a.isCombination())
            return a.terms() == b.terms();
        return a.left() == b.left() && a.right() == b.right();
    }

  private:
    struct Comb {
        std::vector<Term> terms;
    };
    struct Tuple {
        std::shared_ptr<const Element> left;
        std::shared_ptr<const Element> right;
    };

    std::variant<Comb, Tuple> value_;
};

/// Canonical form check: sorted strictly increasing indices, no zero terms.
inline bool isCanonical(const Element& e) {
    if (e.isTuple())
        return isCanonical(e.left()) && isCanonical(e.right());
    const auto& ts = e.terms();
    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (ts[k].coeff == 0)
            return false;
        if (k > 0 && ts[k - 1].index >= ts[k].index)
            return false;
    }
    return true;
}

inline bool isMember(const Element& e, const Module& desc) {
    if (desc.isSum())
        return e.isTuple() && isMember(e.left(), desc.left()) &&
               isMember(e.right(), desc.right());
    if (!e.isCombination())
        return false;
    const auto& ts = e.terms();
    return std::all_of(ts.begin(), ts.end(),
                       [&](const Term& t) { return desc.admits(t.index); });
}

inline void requireMember(const Element& e, const Module& desc,
                          const char* context) {
    if (!isMember(e, desc))
        throw MembershipError(std::string(context) +
                              ": element is not a member of " +
                              desc.describe());
}

/// Canonical combination from raw (coefficient, generator) pairs over a leaf
/// descriptor.
inline Element
normalize(const std::vector<std::pair<Coefficient, GeneratorIndex>>& raw,
          const Module& desc) {
    if (desc.isSum())
        throw MembershipError("normalize over sum descriptor " +
                              desc.describe());
    std::vector<Term> terms;
    terms.reserve(raw.size());
    for (const auto& [c, i] : raw) {
        if (!desc.admits(i))
            throw MembershipError("generator x" + std::to_string(i) +
                                  " out of range for " + desc.describe());
        terms.push_back(Term{i, c});
    }
    return Element::combination(std::move(terms));
}

/// The zero element of a descriptor: empty combination, or a tuple of zeros.
inline Element zero(const Module& desc) {
    if (desc.isSum())
        return Element::tuple(zero(desc.left()), zero(desc.right()));
    return Element();
}

inline Element add(const Element& a, const Element& b) {
    if (a.isTuple() && b.isTuple())
        return Element::tuple(add(a.left(), b.left()), add(a.right(), b.right()));
    if (a.isTuple() || b.isTuple())
        throw MembershipError("adding a tuple to a combination");
    const auto& x = a.terms();
    const auto& y = b.terms();
    if (y.empty())
        return a;
    if (x.empty())
        return b;
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].index < x[i].index) {
            out.push_back(y[j++]);
        } else {
            Coefficient c = x[i].coeff + y[j].coeff;
            if (c != 0)
                out.push_back(Term{x[i].index, std::move(c)});
            ++i;
            ++j;
        }
    }
    return Element::combination(std::move(out));
}

inline Element scale(const Coefficient& c, const Element& e) {
    if (e.isTuple())
        return Element::tuple(scale(c, e.left()), scale(c, e.right()));
    if (c == 0)
        return Element();
    std::vector<Term> out;
    out.reserve(e.terms().size());
    for (const auto& t : e.terms())
        out.push_back(Term{t.index, c * t.coeff});
    return Element::combination(std::move(out));
}

inline Element neg(const Element& e) { return scale(-1, e); }

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a) { return neg(a); }
inline Element operator-(const Element& a, const Element& b) {
    return add(a, neg(b));
}
inline Element operator*(const Coefficient& c, const Element& e) {
    return scale(c, e);
}

} // namespace effhom
