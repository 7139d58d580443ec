#pragma once

#include "effhom/element.hpp"
#include "effhom/errors.hpp"
#include "effhom/module.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Textual form of elements:
//
//   element := tuple | comb | int
//   tuple   := "(" element ("," element)+ ")"
//   comb    := ["-"] term (("+" | "-") term)* | "0"
//   term    := [int "*"] "x" nat
//   int     := ["-"] digit+
//
// Tuples are matched against a descriptor by their leaves, so "(a, b, c)",
// "((a, b), c)" and "(a, (b, c))" all denote the same element of any
// three-leaf sum. Rank-1 leaves print as bare integers.

namespace effhom {

namespace io_detail {

inline void formatLeaf(std::string& out, const Element& e, const Module& desc) {
    if (desc.kind() == Module::Kind::FiniteFree && desc.rank() == 1) {
        out += toString(e.coefficient(0));
        return;
    }
    const auto& ts = e.terms();
    if (ts.empty()) {
        out += '0';
        return;
    }
    bool first = true;
    for (const auto& t : ts) {
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative)
                out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        Coefficient magnitude = negative ? Coefficient(-t.coeff) : t.coeff;
        if (magnitude != 1) {
            out += toString(magnitude);
            out += '*';
        }
        out += 'x';
        out += std::to_string(t.index);
        first = false;
    }
}

inline void collectLeaves(const Element& e, const Module& desc,
                          std::vector<std::pair<const Element*, Module>>& out) {
    if (desc.isSum()) {
        collectLeaves(e.left(), desc.left(), out);
        collectLeaves(e.right(), desc.right(), out);
    } else {
        out.emplace_back(&e, desc);
    }
}

/// Parse tree before it is matched against a descriptor.
struct Syntax {
    bool isTuple = false;
    std::vector<Syntax> items;
    // Leaf contents. A bare integer has no generator.
    std::vector<std::pair<Coefficient, std::optional<GeneratorIndex>>> terms;
    std::size_t position = 0;

    bool isBareInteger() const {
        return !isTuple && terms.size() == 1 && !terms.front().second;
    }
};

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Syntax parseAll() {
        Syntax s = element();
        skipSpace();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return s;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, pos_);
    }

    void skipSpace() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skipSpace();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peekDigit() {
        skipSpace();
        return pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::string digits() {
        skipSpace();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    Syntax element() {
        skipSpace();
        Syntax s;
        s.position = pos_;
        if (accept('(')) {
            s.isTuple = true;
            s.items.push_back(element());
            while (accept(','))
                s.items.push_back(element());
            if (!accept(')'))
                fail("expected ')' or ','");
            if (s.items.size() < 2)
                fail("a tuple needs at least two components");
            return s;
        }
        combination(s);
        return s;
    }

    // One signed term: [int "*"] "x" nat, or a bare int.
    void term(Syntax& s, bool negative) {
        Coefficient c = 1;
        bool hasCoefficient = false;
        if (peekDigit()) {
            c = Coefficient(digits());
            hasCoefficient = true;
            if (!accept('*')) {
                if (peek('x'))
                    fail("expected '*' between coefficient and generator");
                s.terms.emplace_back(negative ? Coefficient(-c) : c, std::nullopt);
                return;
            }
        }
        if (!accept('x'))
            fail(hasCoefficient ? "expected generator after '*'"
                                : "expected integer or generator");
        const std::string idx = digits();
        GeneratorIndex index = 0;
        try {
            index = std::stoull(idx);
        } catch (const std::exception&) {
            fail("generator index out of range");
        }
        s.terms.emplace_back(negative ? Coefficient(-c) : c, index);
    }

    void combination(Syntax& s) {
        bool negative = accept('-');
        term(s, negative);
        while (true) {
            if (accept('+'))
                negative = false;
            else if (accept('-'))
                negative = true;
            else
                break;
            term(s, negative);
        }
        if (s.terms.size() > 1)
            for (const auto& [c, g] : s.terms)
                if (!g)
                    fail("bare integers cannot be mixed with generator terms");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline void flatten(const Syntax& s, std::vector<const Syntax*>& out) {
    if (s.isTuple)
        for (const auto& item : s.items)
            flatten(item, out);
    else
        out.push_back(&s);
}

inline Element realizeLeaf(const Syntax& s, const Module& desc) {
    if (s.isBareInteger()) {
        const Coefficient& value = s.terms.front().first;
        if (value == 0)
            return Element();
        if (desc.kind() == Module::Kind::FiniteFree && desc.rank() == 1)
            return Element::integer(value);
        throw MembershipError("bare integer " + toString(value) +
                              " needs a rank-1 module, got " + desc.describe());
    }
    std::vector<std::pair<Coefficient, GeneratorIndex>> raw;
    raw.reserve(s.terms.size());
    for (const auto& [c, g] : s.terms)
        raw.emplace_back(c, *g);
    return normalize(raw, desc);
}

inline Element build(const Module& desc, std::vector<const Syntax*>::const_iterator& it) {
    if (desc.isSum()) {
        Element l = build(desc.left(), it);
        Element r = build(desc.right(), it);
        return Element::tuple(std::move(l), std::move(r));
    }
    return realizeLeaf(**it++, desc);
}

} // namespace io_detail

/// Prints an element of the given descriptor. Sums print as one flat tuple.
inline std::string format(const Element& e, const Module& desc) {
    requireMember(e, desc, "format");
    std::string out;
    if (!desc.isSum()) {
        io_detail::formatLeaf(out, e, desc);
        return out;
    }
    std::vector<std::pair<const Element*, Module>> leaves;
    io_detail::collectLeaves(e, desc, leaves);
    out += '(';
    for (std::size_t k = 0; k < leaves.size(); ++k) {
        if (k > 0)
            out += ", ";
        io_detail::formatLeaf(out, *leaves[k].first, leaves[k].second);
    }
    out += ')';
    return out;
}

/// Parses an element and matches it against a descriptor. A lone "0" is the
/// zero of any descriptor.
inline Element parseElement(std::string_view text, const Module& desc) {
    io_detail::Syntax syntax = io_detail::Parser(text).parseAll();
    if (!desc.isSum()) {
        if (syntax.isTuple)
            throw MembershipError("tuple given for leaf module " + desc.describe());
        return io_detail::realizeLeaf(syntax, desc);
    }
    if (syntax.isBareInteger() && syntax.terms.front().first == 0)
        return zero(desc);
    std::vector<const io_detail::Syntax*> leaves;
    io_detail::flatten(syntax, leaves);
    const std::size_t expected = desc.leaves().size();
    if (leaves.size() != expected)
        throw MembershipError("expected " + std::to_string(expected) +
                              " components for " + desc.describe() + ", got " +
                              std::to_string(leaves.size()));
    auto it = std::vector<const io_detail::Syntax*>::const_iterator(leaves.begin());
    return io_detail::build(desc, it);
}

} // namespace effhom
