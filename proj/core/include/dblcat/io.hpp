#ifndef DBLCAT_IO_HPP
#define DBLCAT_IO_HPP

#include <memory>
#include <string>

#include "dblcat/presentation.hpp"
#include "dblcat/quotient.hpp"

namespace dblcat {

// UTF-8 JSON formats. A presentation document has top-level keys `objects`,
// `decoration`, `horizontal`, `globular`, `mode` and optional `coherence`;
// each category block has `morphisms`, `identities` and `compose`. Quotient
// files have `base` (path, corpus name or inline presentation) and
// `relations`; functor files have `source`, `target`, `objects`, `vertical`,
// `cells1`, `cells2`.

Presentation parse_presentation_json(const std::string& text);
std::string presentation_to_json(const Presentation& p);

Presentation load_presentation_file(const std::string& path);
QuotientSpec load_quotient_file(const std::string& path);
DecoratedFunctorSpec load_functor_file(const std::string& path);

std::string quotient_to_json(const QuotientSpec& q);
std::string functor_to_json(const DecoratedFunctorSpec& f);

// Name-or-path resolution used by the CLI: an existing file wins, otherwise
// the bundled corpus is consulted.
std::shared_ptr<const Presentation> resolve_presentation(const std::string& name_or_path);
QuotientSpec resolve_quotient(const std::string& name_or_path);
DecoratedFunctorSpec resolve_functor(const std::string& name_or_path);

}  // namespace dblcat

#endif
