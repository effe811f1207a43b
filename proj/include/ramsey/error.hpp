#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

// Base of every error the library throws on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidGraphon : public Error {
 public:
  enum class Kind { NonSymmetric, OutOfRangeEntry, BadWeights, BadShape };

  InvalidGraphon(Kind kind, std::size_t row, std::size_t col, const std::string& what)
      : Error(what), kind_(kind), row_(row), col_(col) {}

  Kind kind() const noexcept { return kind_; }
  // Offending block index; for matrix entries also the column.
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  Kind kind_;
  std::size_t row_;
  std::size_t col_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(double required, std::uint64_t allowed)
      : Error("term budget exceeded: " + std::to_string(required) + " terms required, " +
              std::to_string(allowed) + " allowed"),
        required_(required),
        allowed_(allowed) {}

  double required() const noexcept { return required_; }
  std::uint64_t allowed() const noexcept { return allowed_; }

 private:
  double required_;
  std::uint64_t allowed_;
};

class NotAForest : public Error {
 public:
  NotAForest() : Error("graph contains a cycle; forest evaluation does not apply") {}
};

class EpsOutOfRange : public Error {
 public:
  using Error::Error;
};

class EpsOutOfDomain : public Error {
 public:
  using Error::Error;
};

// Raised when a ratio certificate for k <= 5 falls below 2^-(k+1). The inequality
// is a theorem for those k, so this always indicates a defect in the evaluator.
class InconsistentWithLemma : public Error {
 public:
  InconsistentWithLemma(std::string certificate_json)
      : Error("ratio below 2^-(k+1) for k <= 5: " + certificate_json),
        certificate_(std::move(certificate_json)) {}

  const std::string& certificate() const noexcept { return certificate_; }

 private:
  std::string certificate_;
};

class ConfigInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace ramsey
