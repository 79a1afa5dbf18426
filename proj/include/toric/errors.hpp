#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotStronglyConvex : public Error {
 public:
  NotStronglyConvex() : Error("cone is not strongly convex (contains a line)") {}
};

class NotSimplicial : public Error {
 public:
  NotSimplicial() : Error("cone is not simplicial") {}
};

/// Fan axiom (1) fails for the maximal cones at the given input positions.
class IntersectionNotFace : public Error {
 public:
  IntersectionNotFace(std::size_t first, std::size_t second)
      : Error("intersection of max cones " + std::to_string(first) + " and " + std::to_string(second) +
              " is not a face of both"),
        first_(first),
        second_(second) {}
  [[nodiscard]] std::size_t first() const { return first_; }
  [[nodiscard]] std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class DuplicateCone : public Error {
 public:
  DuplicateCone(std::size_t first, std::size_t second)
      : Error("max cones " + std::to_string(first) + " and " + std::to_string(second) + " are equal") {}
};

class InvalidFanInput : public Error {
 public:
  using Error::Error;
};

class NotInSupport : public Error {
 public:
  NotInSupport() : Error("vector is not in the support of the fan") {}
};

class NotPrimitive : public Error {
 public:
  NotPrimitive() : Error("vector is not primitive") {}
};

class UnknownCone : public Error {
 public:
  explicit UnknownCone(std::ptrdiff_t id) : Error("unknown cone id " + std::to_string(id)) {}
};

class NotASubfan : public Error {
 public:
  using Error::Error;
};

class NotACover : public Error {
 public:
  NotACover() : Error("subfans do not cover the fan") {}
};

class InvalidClass : public Error {
 public:
  using Error::Error;
};

class WriteError : public Error {
 public:
  using Error::Error;
};

/// Malformed fan file; `where` names the offending field or position.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace toric
