#ifndef DBLCAT_REPORT_HPP
#define DBLCAT_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace dblcat {

enum class ViolationKind {
  NameClash,
  UnknownName,
  MissingEntry,
  IllTyped,
  LawViolation,
  DecorationMismatch,
  CompatibilityError,
  CompositionError,
  GlobularCollapse,
  NewGlobularCell,
  Disagreement,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Collected outcome of a validation or law check. `incomplete` marks results
// truncated by a search budget; it is informational, not a violation.
struct ValidationReport {
  std::vector<Violation> violations;
  bool incomplete = false;

  bool ok() const { return violations.empty(); }
  void add(ViolationKind kind, std::string message) {
    violations.push_back({kind, std::move(message)});
  }
  void merge(const ValidationReport& other);
  std::string str() const;
};

// Thrown for unrecoverable input errors (unknown names, ill-typed
// expressions, malformed files). Validators collect instead of throwing.
class EngineError : public std::runtime_error {
 public:
  EngineError(ViolationKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ViolationKind kind() const { return kind_; }

 private:
  ViolationKind kind_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dblcat

#endif
