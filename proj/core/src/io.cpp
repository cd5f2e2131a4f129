#include "dblcat/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dblcat/corpus.hpp"
#include "dblcat/expr.hpp"

namespace dblcat {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EngineError(ViolationKind::UnknownName, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

FinCategory category_from_json(const json& j, const std::string& which) {
  FinCategory cat;
  if (!j.is_object() || !j.contains("morphisms") || !j.contains("identities") ||
      !j.contains("compose")) {
    throw EngineError(ViolationKind::MissingEntry,
                      which + " block needs morphisms, identities and compose");
  }
  for (const auto& m : j.at("morphisms")) {
    cat.morphisms.push_back({m.at("name").get<std::string>(), m.at("dom").get<std::string>(),
                             m.at("cod").get<std::string>()});
  }
  for (const auto& [obj, id] : j.at("identities").items()) {
    cat.identities[obj] = id.get<std::string>();
  }
  for (const auto& row : j.at("compose")) {
    if (!row.is_array() || row.size() != 3) {
      throw EngineError(ViolationKind::IllTyped, which + " compose rows must be [g, f, result]");
    }
    cat.compose_table[{row[0].get<std::string>(), row[1].get<std::string>()}] =
        row[2].get<std::string>();
  }
  return cat;
}

json category_to_json(const FinCategory& cat) {
  json j;
  j["morphisms"] = json::array();
  for (const auto& m : cat.morphisms) {
    j["morphisms"].push_back({{"name", m.name}, {"dom", m.dom}, {"cod", m.cod}});
  }
  j["identities"] = json::object();
  for (const auto& [obj, id] : cat.identities) j["identities"][obj] = id;
  j["compose"] = json::array();
  for (const auto& [key, r] : cat.compose_table) {
    j["compose"].push_back({key.first, key.second, r});
  }
  return j;
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  if (!j.contains("objects") || !j.contains("decoration") || !j.contains("horizontal") ||
      !j.contains("globular") || !j.contains("mode")) {
    throw EngineError(ViolationKind::MissingEntry,
                      "presentation needs objects, decoration, horizontal, globular and mode");
  }
  for (const auto& o : j.at("objects")) p.objects.push_back(o.get<std::string>());
  p.decoration = category_from_json(j.at("decoration"), "decoration");
  p.decoration.objects = p.objects;
  p.horizontal = category_from_json(j.at("horizontal"), "horizontal");
  p.horizontal.objects = p.objects;

  const json& g = j.at("globular");
  for (const auto& c : g.at("cells")) {
    p.cells.push_back({c.at("name").get<std::string>(), c.at("dom").get<std::string>(),
                       c.at("cod").get<std::string>()});
  }
  for (const auto& [f, id] : g.at("identities").items()) p.identity2[f] = id.get<std::string>();
  for (const auto& row : g.at("vcompose")) {
    p.vcompose_table[{row[0].get<std::string>(), row[1].get<std::string>()}] =
        row[2].get<std::string>();
  }
  for (const auto& row : g.at("hcompose")) {
    p.hcompose_table[{row[0].get<std::string>(), row[1].get<std::string>()}] =
        row[2].get<std::string>();
  }

  std::string mode = j.at("mode").get<std::string>();
  if (mode == "strict") {
    p.mode = Mode::Strict;
  } else if (mode == "weak") {
    p.mode = Mode::Weak;
  } else {
    throw EngineError(ViolationKind::IllTyped, "mode must be 'strict' or 'weak'");
  }
  if (j.contains("coherence")) {
    Coherence coh;
    const json& cj = j.at("coherence");
    if (cj.contains("lambda")) {
      for (const auto& [f, c] : cj.at("lambda").items()) coh.lambda[f] = c.get<std::string>();
    }
    if (cj.contains("rho")) {
      for (const auto& [f, c] : cj.at("rho").items()) coh.rho[f] = c.get<std::string>();
    }
    if (cj.contains("associator")) {
      for (const auto& row : cj.at("associator")) {
        coh.associator[{row[0].get<std::string>(), row[1].get<std::string>(),
                        row[2].get<std::string>()}] = row[3].get<std::string>();
      }
    }
    p.coherence = std::move(coh);
  }
  return p;
}

json presentation_to_ordered_json(const Presentation& p) {
  json j;
  j["objects"] = p.objects;
  j["decoration"] = category_to_json(p.decoration);
  j["horizontal"] = category_to_json(p.horizontal);
  json g;
  g["cells"] = json::array();
  for (const auto& c : p.cells) {
    g["cells"].push_back({{"name", c.name}, {"dom", c.dom}, {"cod", c.cod}});
  }
  g["identities"] = json::object();
  for (const auto& [f, id] : p.identity2) g["identities"][f] = id;
  g["vcompose"] = json::array();
  for (const auto& [key, r] : p.vcompose_table) g["vcompose"].push_back({key.first, key.second, r});
  g["hcompose"] = json::array();
  for (const auto& [key, r] : p.hcompose_table) g["hcompose"].push_back({key.first, key.second, r});
  j["globular"] = std::move(g);
  j["mode"] = p.mode == Mode::Strict ? "strict" : "weak";
  if (p.coherence) {
    json cj;
    cj["lambda"] = json::object();
    for (const auto& [f, c] : p.coherence->lambda) cj["lambda"][f] = c;
    cj["rho"] = json::object();
    for (const auto& [f, c] : p.coherence->rho) cj["rho"][f] = c;
    cj["associator"] = json::array();
    for (const auto& [key, c] : p.coherence->associator) {
      cj["associator"].push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
    }
    j["coherence"] = std::move(cj);
  }
  return j;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw EngineError(ViolationKind::IllTyped, std::string("malformed JSON: ") + e.what());
  }
}

std::shared_ptr<const Presentation> resolve_presentation_ref(const json& ref,
                                                             const std::string& base_dir);

QuotientSpec quotient_from_json(const json& j, const std::string& base_dir) {
  if (!j.contains("base") || !j.contains("relations")) {
    throw EngineError(ViolationKind::MissingEntry, "quotient needs base and relations");
  }
  QuotientSpec q;
  q.base = resolve_presentation_ref(j.at("base"), base_dir);
  for (const auto& row : j.at("relations")) {
    if (!row.is_array() || row.size() != 2) {
      throw EngineError(ViolationKind::IllTyped, "relations rows must be [expr, expr]");
    }
    q.extra_relations.emplace_back(parse_expr(row[0].get<std::string>()),
                                   parse_expr(row[1].get<std::string>()));
  }
  return q;
}

DecoratedFunctorSpec functor_from_json(const json& j, const std::string& base_dir) {
  for (const char* key : {"source", "target", "objects", "vertical", "cells1", "cells2"}) {
    if (!j.contains(key)) {
      throw EngineError(ViolationKind::MissingEntry,
                        std::string("functor needs key '") + key + "'");
    }
  }
  DecoratedFunctorSpec f;
  f.source = resolve_presentation_ref(j.at("source"), base_dir);
  f.target = resolve_presentation_ref(j.at("target"), base_dir);
  auto read_map = [&](const char* key, std::map<std::string, std::string>& out) {
    for (const auto& [k, v] : j.at(key).items()) out[k] = v.get<std::string>();
  };
  read_map("objects", f.objects);
  read_map("vertical", f.vertical);
  read_map("cells1", f.cells1);
  read_map("cells2", f.cells2);
  return f;
}

std::shared_ptr<const Presentation> resolve_presentation_ref(const json& ref,
                                                             const std::string& base_dir) {
  if (ref.is_object()) {
    return std::make_shared<Presentation>(presentation_from_json(ref));
  }
  std::string name = ref.get<std::string>();
  std::filesystem::path p(name);
  if (p.is_relative() && !base_dir.empty()) {
    std::filesystem::path joined = std::filesystem::path(base_dir) / p;
    if (std::filesystem::exists(joined)) {
      return std::make_shared<Presentation>(load_presentation_file(joined.string()));
    }
  }
  if (std::filesystem::exists(p)) {
    return std::make_shared<Presentation>(load_presentation_file(name));
  }
  if (corpus_has_presentation(name)) return corpus_presentation(name);
  throw EngineError(ViolationKind::UnknownName,
                    "'" + name + "' is neither a file nor a bundled presentation");
}

}  // namespace

Presentation parse_presentation_json(const std::string& text) {
  return presentation_from_json(parse_json_text(text));
}

std::string presentation_to_json(const Presentation& p) {
  return presentation_to_ordered_json(p).dump(2) + "\n";
}

Presentation load_presentation_file(const std::string& path) {
  return parse_presentation_json(read_file(path));
}

QuotientSpec load_quotient_file(const std::string& path) {
  json j = parse_json_text(read_file(path));
  return quotient_from_json(j, std::filesystem::path(path).parent_path().string());
}

DecoratedFunctorSpec load_functor_file(const std::string& path) {
  json j = parse_json_text(read_file(path));
  return functor_from_json(j, std::filesystem::path(path).parent_path().string());
}

std::string quotient_to_json(const QuotientSpec& q) {
  json j;
  j["base"] = presentation_to_ordered_json(*q.base);
  j["relations"] = json::array();
  for (const auto& [l, r] : q.extra_relations) j["relations"].push_back({l.str(), r.str()});
  return j.dump(2) + "\n";
}

std::string functor_to_json(const DecoratedFunctorSpec& f) {
  json j;
  j["source"] = presentation_to_ordered_json(*f.source);
  j["target"] = presentation_to_ordered_json(*f.target);
  auto write_map = [&](const char* key, const std::map<std::string, std::string>& m) {
    j[key] = json::object();
    for (const auto& [k, v] : m) j[key][k] = v;
  };
  write_map("objects", f.objects);
  write_map("vertical", f.vertical);
  write_map("cells1", f.cells1);
  write_map("cells2", f.cells2);
  return j.dump(2) + "\n";
}

std::shared_ptr<const Presentation> resolve_presentation(const std::string& name_or_path) {
  if (std::filesystem::exists(name_or_path)) {
    return std::make_shared<Presentation>(load_presentation_file(name_or_path));
  }
  if (corpus_has_presentation(name_or_path)) return corpus_presentation(name_or_path);
  throw EngineError(ViolationKind::UnknownName,
                    "'" + name_or_path + "' is neither a file nor a bundled presentation");
}

QuotientSpec resolve_quotient(const std::string& name_or_path) {
  if (std::filesystem::exists(name_or_path)) return load_quotient_file(name_or_path);
  if (corpus_has_quotient(name_or_path)) return corpus_quotient(name_or_path);
  throw EngineError(ViolationKind::UnknownName,
                    "'" + name_or_path + "' is neither a file nor a bundled quotient");
}

DecoratedFunctorSpec resolve_functor(const std::string& name_or_path) {
  if (std::filesystem::exists(name_or_path)) return load_functor_file(name_or_path);
  if (corpus_has_functor(name_or_path)) return corpus_functor(name_or_path);
  throw EngineError(ViolationKind::UnknownName,
                    "'" + name_or_path + "' is neither a file nor a bundled functor");
}

}  // namespace dblcat
