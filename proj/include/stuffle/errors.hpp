#pragma once

#include <stdexcept>
#include <string>

namespace stuffle {

/// A rule-based specification produced a letter beyond its truncation bound.
class OverflowError : public std::runtime_error {
public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its stated domain (empty word where a
/// non-empty one is required, nonempty contracting map for a shuffle-only
/// operation, hypothesis violations, ...).
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Malformed textual input (words, rationals, spec files).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stuffle
