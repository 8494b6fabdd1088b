#ifndef PLAN_STRINGS_ERROR_H_
#define PLAN_STRINGS_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace plan_strings {

/// Source position of a token, 1-based. Zero means unknown.
struct SourceLocation {
  int line = 0;
  int column = 0;
};

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Errors tied to a position in an input document.
class InputError : public Error {
 public:
  InputError(const std::string& message, SourceLocation loc)
      : Error(message), loc_(loc) {}

  const SourceLocation& location() const { return loc_; }

 private:
  SourceLocation loc_;
};

class SyntaxError : public InputError {
 public:
  using InputError::InputError;
};

class SemanticError : public InputError {
 public:
  using InputError::InputError;
};

/// Raised when a document uses PDDL beyond the STRIPS subset. Carries every
/// offending token found in the document, in order of first appearance.
class UnsupportedFeature : public InputError {
 public:
  UnsupportedFeature(std::vector<std::string> tokens, SourceLocation loc);

  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON interchange document. `path()` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : Error(path + ": " + message), path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace plan_strings

#endif  // PLAN_STRINGS_ERROR_H_
