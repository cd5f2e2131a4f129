// Command-line front end for the free globularily generated double category
// engine: validation, normalization, equality, enumeration, projections,
// free functors and the adjunction checks, over JSON presentation files or
// the bundled corpus.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dblcat/adjunction.hpp"
#include "dblcat/corpus.hpp"
#include "dblcat/expr.hpp"
#include "dblcat/freegg.hpp"
#include "dblcat/functor_map.hpp"
#include "dblcat/io.hpp"
#include "dblcat/projection.hpp"
#include "dblcat/quotient.hpp"

namespace {

using dblcat::CellExpr;
using dblcat::EqualOptions;
using dblcat::ValidationReport;
using dblcat::Verdict;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

struct Output {
  bool json = false;
  std::string command;
  ordered_json payload = ordered_json::object();
  std::string text;

  void emit(int budget) const {
    if (json) {
      ordered_json doc;
      doc["command"] = command;
      for (const auto& [k, v] : payload.items()) doc[k] = v;
      doc["budget"] = budget;
      if (!doc.contains("witness")) doc["witness"] = nullptr;
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << text;
    }
  }
};

int default_budget() {
  if (const char* env = std::getenv("DBLCAT_BUDGET")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      return 10;
    }
  }
  return 10;
}

int report_result(Output& out, const ValidationReport& report, int budget) {
  out.payload["result"] = report.ok() ? "pass" : "fail";
  ordered_json witness = ordered_json::array();
  for (const auto& v : report.violations) {
    witness.push_back({{"kind", dblcat::to_string(v.kind)}, {"message", v.message}});
  }
  out.payload["witness"] = witness;
  out.payload["incomplete"] = report.incomplete;
  out.text = report.str();
  out.emit(budget);
  return report.ok() ? kExitOk : kExitFail;
}

dblcat::Boundary parse_frame(const dblcat::Presentation& p, const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) {
    throw dblcat::EngineError(dblcat::ViolationKind::IllTyped,
                              "--frame expects d,c,s,t");
  }
  (void)p;
  return dblcat::Boundary{parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic engine for free globularily generated double categories"};
  app.require_subcommand(1);

  bool json_out = false;
  std::uint64_t seed = 0;
  int budget = default_budget();
  std::size_t max_nodes = EqualOptions{}.max_nodes;
  app.add_flag("--json", json_out, "emit one JSON object per invocation");
  app.add_option("--seed", seed, "seed for all sampling (default 0)");
  app.add_option("--budget", budget, "closure size budget (default DBLCAT_BUDGET or 10)");
  app.add_option("--max-nodes", max_nodes, "node cap before a verdict degrades to Unknown");

  std::string file_arg, pres_arg, quot_arg, fun_arg, expr1, expr2, frame_arg;
  int max_size = 6;
  int max_level = 1 << 20;
  int samples = 200;

  CLI::App* validate = app.add_subcommand("validate", "validate a presentation/quotient/functor file");
  validate->add_option("file", file_arg)->required();

  CLI::App* normalize = app.add_subcommand("normalize", "print the prenormal form of an expression");
  normalize->add_option("-p,--presentation", pres_arg)->required();
  normalize->add_option("expr", expr1)->required();

  CLI::App* equal_cmd = app.add_subcommand("equal", "decide congruence of two expressions");
  equal_cmd->add_option("-p,--presentation", pres_arg)->required();
  equal_cmd->add_option("e1", expr1)->required();
  equal_cmd->add_option("e2", expr2)->required();

  CLI::App* level_cmd = app.add_subcommand("level", "filtration level of an expression");
  level_cmd->add_option("-p,--presentation", pres_arg)->required();
  level_cmd->add_option("expr", expr1)->required();

  CLI::App* boundary_cmd = app.add_subcommand("boundary", "frame of an expression");
  boundary_cmd->add_option("-p,--presentation", pres_arg)->required();
  boundary_cmd->add_option("expr", expr1)->required();

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "congruence classes within a frame");
  enumerate_cmd->add_option("-p,--presentation", pres_arg)->required();
  enumerate_cmd->add_option("--frame", frame_arg, "d,c,s,t")->required();
  enumerate_cmd->add_option("--max-size", max_size)->required();
  enumerate_cmd->add_option("--max-level", max_level);

  CLI::App* project_cmd = app.add_subcommand("project", "canonical projection onto a quotient");
  project_cmd->add_option("-q,--quotient", quot_arg)->required();
  project_cmd->add_option("expr", expr1)->required();

  CLI::App* map_cmd = app.add_subcommand("map", "apply a free double functor to an expression");
  map_cmd->add_option("-f,--functor", fun_arg)->required();
  map_cmd->add_option("expr", expr1)->required();

  CLI::App* axioms_cmd = app.add_subcommand("check-axioms", "double-category laws on the free construction");
  axioms_cmd->add_option("-p,--presentation", pres_arg)->required();
  axioms_cmd->add_option("--samples", samples);

  CLI::App* adj_cmd = app.add_subcommand("check-adjunction", "triangle identities of the adjunction");
  adj_cmd->add_option("-p,--presentation", pres_arg);
  adj_cmd->add_option("-q,--quotient", quot_arg);
  adj_cmd->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output out;
  out.json = json_out;
  EqualOptions opt;
  opt.budget = budget;
  opt.max_nodes = max_nodes;

  try {
    if (*validate) {
      out.command = "validate";
      std::string text;
      {
        std::ifstream in(file_arg, std::ios::binary);
        if (!in) throw dblcat::EngineError(dblcat::ViolationKind::UnknownName,
                                           "cannot open '" + file_arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      auto doc = nlohmann::json::parse(text, nullptr, false);
      if (doc.is_discarded()) {
        throw dblcat::EngineError(dblcat::ViolationKind::IllTyped, "malformed JSON");
      }
      ValidationReport report;
      if (doc.contains("relations")) {
        report = dblcat::validate_quotient(dblcat::load_quotient_file(file_arg));
      } else if (doc.contains("cells2")) {
        report = dblcat::validate_functor(dblcat::load_functor_file(file_arg));
      } else {
        report = dblcat::validate_presentation(dblcat::load_presentation_file(file_arg));
      }
      return report_result(out, report, budget);
    }

    if (*normalize) {
      out.command = "normalize";
      auto p = dblcat::resolve_presentation(pres_arg);
      CellExpr e = dblcat::prenormalize(*p, dblcat::parse_expr(expr1));
      out.payload["result"] = e.str();
      out.text = e.str() + "\n";
      out.emit(budget);
      return kExitOk;
    }

    if (*equal_cmd) {
      out.command = "equal";
      auto p = dblcat::resolve_presentation(pres_arg);
      Verdict v = dblcat::equal(*p, dblcat::parse_expr(expr1), dblcat::parse_expr(expr2), opt);
      out.payload["verdict"] = v.str();
      out.payload["witness"] = v.trace;
      out.text = v.str() + "\n";
      for (const auto& step : v.trace) out.text += "  " + step + "\n";
      out.emit(budget);
      if (v.equal()) return kExitOk;
      if (v.distinct()) return kExitFail;
      return kExitUnknown;
    }

    if (*level_cmd) {
      out.command = "level";
      auto p = dblcat::resolve_presentation(pres_arg);
      int k = dblcat::level(*p, dblcat::parse_expr(expr1));
      out.payload["result"] = k;
      out.text = std::to_string(k) + "\n";
      out.emit(budget);
      return kExitOk;
    }

    if (*boundary_cmd) {
      out.command = "boundary";
      auto p = dblcat::resolve_presentation(pres_arg);
      dblcat::Boundary fr = dblcat::boundary(*p, dblcat::parse_expr(expr1));
      out.payload["result"] = {{"d", fr.d}, {"c", fr.c}, {"s", fr.s}, {"t", fr.t}};
      out.text = fr.str() + "\n";
      out.emit(budget);
      return kExitOk;
    }

    if (*enumerate_cmd) {
      out.command = "enumerate";
      auto p = dblcat::resolve_presentation(pres_arg);
      auto classes = dblcat::enumerate_cells(*p, parse_frame(*p, frame_arg), max_size,
                                             max_level, opt);
      ordered_json rows = ordered_json::array();
      for (const auto& c : classes) {
        rows.push_back({{"representative", c.representative.str()},
                        {"min_level", c.min_level},
                        {"min_size", c.min_size},
                        {"members", c.members.size()}});
        out.text += c.representative.str() + "  (level " + std::to_string(c.min_level) +
                    ", size " + std::to_string(c.min_size) + ", members " +
                    std::to_string(c.members.size()) + ")\n";
      }
      out.payload["result"] = rows;
      out.text += std::to_string(classes.size()) + " classes\n";
      out.emit(budget);
      return kExitOk;
    }

    if (*project_cmd) {
      out.command = "project";
      auto q = dblcat::resolve_quotient(quot_arg);
      auto handle = dblcat::make_projection(q, budget);
      auto projected = dblcat::project(handle, dblcat::parse_expr(expr1), opt);
      out.payload["result"] = projected.representative.str();
      out.text = projected.representative.str() + "\n";
      out.emit(budget);
      return kExitOk;
    }

    if (*map_cmd) {
      out.command = "map";
      auto f = dblcat::make_free_functor(dblcat::resolve_functor(fun_arg));
      CellExpr image = dblcat::map_cell(f, dblcat::parse_expr(expr1));
      out.payload["result"] = image.str();
      out.text = image.str() + "\n";
      out.emit(budget);
      return kExitOk;
    }

    if (*axioms_cmd) {
      out.command = "check-axioms";
      auto p = dblcat::resolve_presentation(pres_arg);
      dblcat::AxiomCheckOptions ao;
      ao.budget = budget;
      ao.interchange_samples = samples;
      ao.seed = seed;
      return report_result(out, dblcat::check_double_axioms(*p, ao), budget);
    }

    if (*adj_cmd) {
      out.command = "check-adjunction";
      if (pres_arg.empty() && quot_arg.empty()) {
        std::cerr << "check-adjunction needs -p or -q\n";
        return kExitUsage;
      }
      ValidationReport report;
      if (!pres_arg.empty()) {
        auto p = dblcat::resolve_presentation(pres_arg);
        report.merge(dblcat::check_triangle_Q(*p, budget, samples, seed));
      }
      if (!quot_arg.empty()) {
        auto q = dblcat::resolve_quotient(quot_arg);
        report.merge(dblcat::check_triangle_H(q, budget));
      }
      return report_result(out, report, budget);
    }
  } catch (const dblcat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dblcat::EngineError& e) {
    std::cerr << dblcat::to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
