#pragma once

#include <stdexcept>
#include <string>

namespace effhom {

/// Base class of every error raised by the kernel.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An element does not belong to the module descriptor it was used with.
class MembershipError : public Error {
  public:
    explicit MembershipError(const std::string& what)
        : Error("membership error: " + what) {}
};

/// Morphisms or families whose descriptors do not line up.
class ShapeError : public Error {
  public:
    explicit ShapeError(const std::string& what)
        : Error("shape error: " + what) {}
};

/// A computation needing a finite basis met a countably generated module.
class NotFiniteError : public Error {
  public:
    explicit NotFiniteError(const std::string& what)
        : Error("not finite: " + what) {}
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : Error("parse error at offset " + std::to_string(position) + ": " +
                what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

} // namespace effhom
