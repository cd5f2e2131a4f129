#include <doctest.h>

#include "dblcat/corpus.hpp"
#include "dblcat/fincat.hpp"

using namespace dblcat;

namespace {

FinCategory terminal() {
  FinCategory c;
  c.objects = {"a"};
  c.morphisms = {{"1", "a", "a"}};
  c.identities = {{"a", "1"}};
  c.compose_table = {{{"1", "1"}, "1"}};
  return c;
}

FinCategory z2_group() {
  FinCategory c;
  c.objects = {"a"};
  c.morphisms = {{"1", "a", "a"}, {"-1", "a", "a"}};
  c.identities = {{"a", "1"}};
  c.compose_table = {
      {{"1", "1"}, "1"}, {{"1", "-1"}, "-1"}, {{"-1", "1"}, "-1"}, {{"-1", "-1"}, "1"}};
  return c;
}

}  // namespace

TEST_CASE("terminal category validates") {
  CHECK(validate_category(terminal()).ok());
}

TEST_CASE("the two-element group table validates") {
  CHECK(validate_category(z2_group()).ok());
}

TEST_CASE("a broken identity row is reported with its witness") {
  FinCategory c = z2_group();
  c.compose_table[{"-1", "1"}] = "1";  // right identity law now fails at -1
  ValidationReport report = validate_category(c);
  CHECK_FALSE(report.ok());
  bool mentions = false;
  for (const auto& v : report.violations) {
    if (v.message.find("-1") != std::string::npos) mentions = true;
  }
  CHECK(mentions);
}

TEST_CASE("associativity violations carry the witnessing triple") {
  FinCategory c;
  c.objects = {"a"};
  c.morphisms = {{"1", "a", "a"}, {"x", "a", "a"}, {"y", "a", "a"}};
  c.identities = {{"a", "1"}};
  // x∘x = y but y absorbs everything except through x, breaking (x x) x vs x (x x)
  c.compose_table = {{{"1", "1"}, "1"},  {{"1", "x"}, "x"},  {{"x", "1"}, "x"},
                     {{"1", "y"}, "y"},  {{"y", "1"}, "y"},  {{"x", "x"}, "y"},
                     {{"x", "y"}, "1"},  {{"y", "x"}, "x"},  {{"y", "y"}, "y"}};
  ValidationReport report = validate_category(c);
  CHECK_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.kind == ViolationKind::LawViolation &&
        v.message.find("associativity") != std::string::npos) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("duplicate morphism names clash") {
  FinCategory c = terminal();
  c.morphisms.push_back({"1", "a", "a"});
  ValidationReport report = validate_category(c);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == ViolationKind::NameClash);
}

TEST_CASE("gaps in the composition table are MissingEntry") {
  FinCategory c = z2_group();
  c.compose_table.erase({"-1", "-1"});
  ValidationReport report = validate_category(c);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == ViolationKind::MissingEntry);
}

TEST_CASE("dangling dom/cod names are UnknownName") {
  FinCategory c = terminal();
  c.morphisms.push_back({"f", "a", "b"});
  ValidationReport report = validate_category(c);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == ViolationKind::UnknownName);
}
