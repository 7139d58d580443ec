#pragma once

#include "effhom/coefficient.hpp"
#include "effhom/errors.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace effhom {

/// Structural description of a free module: zero, free of finite rank k,
/// countably generated (Z[N]), or the direct sum of two descriptors.
///
/// Descriptors are immutable values; copies share their subtrees.
/// FiniteFree(0) is stored as Zero, so the two compare equal.
class Module {
  public:
    enum class Kind { Zero, FiniteFree, CountableFree, Sum };

    Module() = default;

    static Module zero() { return Module(); }

    static Module finite(std::size_t rank) {
        Module m;
        if (rank > 0) {
            m.kind_ = Kind::FiniteFree;
            m.rank_ = rank;
        }
        return m;
    }

    static Module countable() {
        Module m;
        m.kind_ = Kind::CountableFree;
        return m;
    }

    static Module sum(Module left, Module right) {
        Module m;
        m.kind_ = Kind::Sum;
        m.parts_ = std::make_shared<const std::pair<Module, Module>>(
            std::move(left), std::move(right));
        return m;
    }

    Kind kind() const noexcept { return kind_; }

    bool isSum() const noexcept { return kind_ == Kind::Sum; }
    bool isLeaf() const noexcept { return kind_ != Kind::Sum; }

    /// Rank of a FiniteFree leaf; 0 for Zero.
    std::size_t rank() const {
        if (kind_ == Kind::CountableFree || kind_ == Kind::Sum)
            throw NotFiniteError("rank() of " + describe());
        return rank_;
    }

    const Module& left() const {
        if (!isSum())
            throw ShapeError("left() of non-sum descriptor " + describe());
        return parts_->first;
    }

    const Module& right() const {
        if (!isSum())
            throw ShapeError("right() of non-sum descriptor " + describe());
        return parts_->second;
    }

    /// True iff no CountableFree leaf occurs.
    bool isFiniteType() const {
        switch (kind_) {
        case Kind::Zero:
        case Kind::FiniteFree:
            return true;
        case Kind::CountableFree:
            return false;
        case Kind::Sum:
            return left().isFiniteType() && right().isFiniteType();
        }
        return false;
    }

    /// Whether the generator index is valid in a leaf descriptor.
    bool admits(GeneratorIndex index) const {
        switch (kind_) {
        case Kind::Zero:
            return false;
        case Kind::FiniteFree:
            return index < rank_;
        case Kind::CountableFree:
            return true;
        case Kind::Sum:
            return false;
        }
        return false;
    }

    /// Leaves in left-to-right order.
    std::vector<Module> leaves() const {
        std::vector<Module> out;
        collectLeaves(out);
        return out;
    }

    std::string describe() const {
        switch (kind_) {
        case Kind::Zero:
            return "0";
        case Kind::FiniteFree:
            return rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
        case Kind::CountableFree:
            return "Z[N]";
        case Kind::Sum:
            return "(" + left().describe() + " + " + right().describe() + ")";
        }
        return "?";
    }

    friend bool operator==(const Module& a, const Module& b) {
        if (a.kind_ != b.kind_)
            return false;
        switch (a.kind_) {
        case Kind::Zero:
        case Kind::CountableFree:
            return true;
        case Kind::FiniteFree:
            return a.rank_ == b.rank_;
        case Kind::Sum:
            return a.parts_ == b.parts_ ||
                   (a.left() == b.left() && a.right() == b.right());
        }
        return false;
    }

  private:
    void collectLeaves(std::vector<Module>& out) const {
        if (isSum()) {
            left().collectLeaves(out);
            right().collectLeaves(out);
        } else {
            out.push_back(*this);
        }
    }

    Kind kind_ = Kind::Zero;
    std::size_t rank_ = 0;
    std::shared_ptr<const std::pair<Module, Module>> parts_;
};

} // namespace effhom
