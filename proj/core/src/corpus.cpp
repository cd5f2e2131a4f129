#include "dblcat/corpus.hpp"

#include "dblcat/expr.hpp"

namespace dblcat {

namespace {

FinCategory one_object_group(const std::string& obj, const std::vector<std::string>& elems,
                             const std::string& unit,
                             const std::map<std::pair<std::string, std::string>, std::string>& mul) {
  FinCategory cat;
  cat.objects = {obj};
  for (const auto& e : elems) cat.morphisms.push_back({e, obj, obj});
  cat.identities[obj] = unit;
  cat.compose_table = mul;
  return cat;
}

std::shared_ptr<const Presentation> build_point() {
  auto p = std::make_shared<Presentation>();
  p->objects = {"a"};
  p->decoration = one_object_group("a", {"1"}, "1", {{{"1", "1"}, "1"}});
  p->horizontal = one_object_group("a", {"id_a"}, "id_a", {{{"id_a", "id_a"}, "id_a"}});
  p->cells = {{"1", "id_a", "id_a"}};
  p->identity2 = {{"id_a", "1"}};
  p->vcompose_table = {{{"1", "1"}, "1"}};
  p->hcompose_table = {{{"1", "1"}, "1"}};
  p->mode = Mode::Strict;
  return p;
}

std::shared_ptr<const Presentation> build_z2() {
  std::map<std::pair<std::string, std::string>, std::string> z2{
      {{"1", "1"}, "1"}, {{"1", "-1"}, "-1"}, {{"-1", "1"}, "-1"}, {{"-1", "-1"}, "1"}};
  auto p = std::make_shared<Presentation>();
  p->objects = {"a"};
  p->decoration = one_object_group("a", {"1", "-1"}, "1", z2);
  p->horizontal = one_object_group("a", {"id_a"}, "id_a", {{{"id_a", "id_a"}, "id_a"}});
  p->cells = {{"1", "id_a", "id_a"}, {"-1", "id_a", "id_a"}};
  p->identity2 = {{"id_a", "1"}};
  p->vcompose_table = z2;
  p->hcompose_table = z2;
  p->mode = Mode::Strict;
  return p;
}

const std::shared_ptr<const Presentation>& point_presentation() {
  static std::shared_ptr<const Presentation> p = build_point();
  return p;
}

const std::shared_ptr<const Presentation>& z2_presentation() {
  static std::shared_ptr<const Presentation> p = build_z2();
  return p;
}

}  // namespace

bool corpus_has_presentation(const std::string& name) {
  return name == "point" || name == "z2";
}

std::shared_ptr<const Presentation> corpus_presentation(const std::string& name) {
  if (name == "point") return point_presentation();
  if (name == "z2") return z2_presentation();
  throw EngineError(ViolationKind::UnknownName, "no bundled presentation '" + name + "'");
}

bool corpus_has_quotient(const std::string& name) {
  return name == "z2-abelian" || corpus_has_presentation(name);
}

QuotientSpec corpus_quotient(const std::string& name) {
  if (name == "z2-abelian") {
    return QuotientSpec{z2_presentation(),
                        {{parse_expr("-1 . i[-1]"), parse_expr("i[-1] . -1")}}};
  }
  if (corpus_has_presentation(name)) return QuotientSpec{corpus_presentation(name), {}};
  throw EngineError(ViolationKind::UnknownName, "no bundled quotient '" + name + "'");
}

bool corpus_has_functor(const std::string& name) {
  return name == "collapse" || name == "id-point" || name == "id-z2";
}

DecoratedFunctorSpec corpus_functor(const std::string& name) {
  if (name == "collapse") {
    DecoratedFunctorSpec f;
    f.source = z2_presentation();
    f.target = point_presentation();
    f.objects = {{"a", "a"}};
    f.vertical = {{"1", "1"}, {"-1", "1"}};
    f.cells1 = {{"id_a", "id_a"}};
    f.cells2 = {{"1", "1"}, {"-1", "1"}};
    return f;
  }
  if (name == "id-point") return identity_functor(point_presentation());
  if (name == "id-z2") return identity_functor(z2_presentation());
  throw EngineError(ViolationKind::UnknownName, "no bundled functor '" + name + "'");
}

std::vector<std::string> corpus_names() {
  return {"point", "z2", "z2-abelian", "collapse", "id-point", "id-z2"};
}

}  // namespace dblcat
