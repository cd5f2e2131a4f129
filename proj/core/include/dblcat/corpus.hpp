#ifndef DBLCAT_CORPUS_HPP
#define DBLCAT_CORPUS_HPP

#include <memory>
#include <string>
#include <vector>

#include "dblcat/presentation.hpp"
#include "dblcat/quotient.hpp"

namespace dblcat {

// Bundled examples. `point` is the trivially decorated one-object
// presentation; `z2` is the one-object presentation whose 2-cells and
// decoration are both the two-element group; `z2-abelian` adds the relation
// making the two level-1 generators commute; `collapse` maps z2 onto point.
std::shared_ptr<const Presentation> corpus_presentation(const std::string& name);
QuotientSpec corpus_quotient(const std::string& name);
DecoratedFunctorSpec corpus_functor(const std::string& name);

bool corpus_has_presentation(const std::string& name);
bool corpus_has_quotient(const std::string& name);
bool corpus_has_functor(const std::string& name);

std::vector<std::string> corpus_names();

}  // namespace dblcat

#endif
