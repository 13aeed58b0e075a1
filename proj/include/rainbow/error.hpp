#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace rainbow {

/// Malformed or out-of-range input: bad ids, self-loops, bad documents.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what, std::optional<int> line = std::nullopt)
      : std::invalid_argument(line ? "line " + std::to_string(*line) + ": " + what : what),
        line_(line) {}

  std::optional<int> line() const noexcept { return line_; }

 private:
  std::optional<int> line_;
};

/// A coloring procedure was called outside the edge-density regime it covers.
class PreconditionNotMet : public InputError {
 public:
  using InputError::InputError;
};

/// The exact search ran past its work budget. Carries what was proven so far.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int lower_bound, int upper_bound)
      : std::runtime_error(what), lower_(lower_bound), upper_(upper_bound) {}

  int lower_bound() const noexcept { return lower_; }
  int upper_bound() const noexcept { return upper_; }

 private:
  int lower_;
  int upper_;
};

/// An inductive reduction met a structure its supporting claim rules out.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rainbow
