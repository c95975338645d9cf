#ifndef TOTREAL_ERRORS_HPP
#define TOTREAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace totreal {

/// Bad user input: malformed words, invalid atom parameters, syntax errors.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax error in the expression grammar; column is 1-based.
class ParseError : public ValidationError {
  public:
    ParseError(const std::string& msg, std::size_t column)
        : ValidationError(msg + " (column " + std::to_string(column) + ")"), column_(column) {}
    std::size_t column() const { return column_; }

  private:
    std::size_t column_;
};

/// Structurally ill-formed descriptor (e.g. connected sum of unequal dims).
class StructuralError : public ValidationError {
  public:
    explicit StructuralError(const std::string& msg) : ValidationError(msg) {}
};

/// Operation applied outside its domain (e.g. semi-characteristic in even dim).
class DomainError : public ValidationError {
  public:
    explicit DomainError(const std::string& msg) : ValidationError(msg) {}
};

/// Operation outside the supported hypotheses (e.g. surgery with p > 2).
class UnsupportedError : public ValidationError {
  public:
    explicit UnsupportedError(const std::string& msg) : ValidationError(msg) {}
};

/// Two rules decided the same verdict slot differently. Must be unreachable;
/// the CLI maps it to exit code 2 and the test suite treats it as failure.
class EngineFault : public std::logic_error {
  public:
    explicit EngineFault(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace totreal

#endif
