#pragma once

#include <stdexcept>
#include <string>

namespace fillperm {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed cycle notation or record. `position` is a character offset
// into the parsed text (or -1 when not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long position)
      : Error(position >= 0 ? what + " at position " + std::to_string(position) : what),
        position_(position) {}
  long position() const noexcept { return position_; }

 private:
  long position_;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Raised by validate(). `symbol` is the first offending symbol, 0 if none.
class ValidationError : public Error {
 public:
  enum class Kind { size_not_multiple_of_4, alternation_violation, equation_violation };
  ValidationError(Kind kind, int symbol, const std::string& what)
      : Error(what), kind_(kind), symbol_(symbol) {}
  Kind kind() const noexcept { return kind_; }
  int symbol() const noexcept { return symbol_; }

 private:
  Kind kind_;
  int symbol_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class NotAVertexAnchor : public Error {
 public:
  using Error::Error;
};

class ArrangementImpossible : public Error {
 public:
  using Error::Error;
};

// A relabeling map was asked for a label no case covers. Never expected on
// valid input.
class CaseGap : public Error {
 public:
  using Error::Error;
};

class ChordsCross : public Error {
 public:
  using Error::Error;
};

class NoConjugacyFound : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fillperm
