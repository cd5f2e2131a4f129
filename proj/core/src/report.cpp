#include "dblcat/report.hpp"

namespace dblcat {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NameClash: return "NameClash";
    case ViolationKind::UnknownName: return "UnknownName";
    case ViolationKind::MissingEntry: return "MissingEntry";
    case ViolationKind::IllTyped: return "IllTyped";
    case ViolationKind::LawViolation: return "LawViolation";
    case ViolationKind::DecorationMismatch: return "DecorationMismatch";
    case ViolationKind::CompatibilityError: return "CompatibilityError";
    case ViolationKind::CompositionError: return "CompositionError";
    case ViolationKind::GlobularCollapse: return "GlobularCollapse";
    case ViolationKind::NewGlobularCell: return "NewGlobularCell";
    case ViolationKind::Disagreement: return "Disagreement";
  }
  return "Unknown";
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  incomplete = incomplete || other.incomplete;
}

std::string ValidationReport::str() const {
  std::string out;
  for (const auto& v : violations) {
    out += to_string(v.kind);
    out += ": ";
    out += v.message;
    out += '\n';
  }
  if (incomplete) out += "(incomplete: search budget truncated)\n";
  if (out.empty()) out = "ok\n";
  return out;
}

}  // namespace dblcat
