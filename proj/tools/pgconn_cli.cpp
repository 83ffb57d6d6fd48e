#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pgconn/connectivity.hpp"
#include "pgconn/cyclic_structure.hpp"
#include "pgconn/errors.hpp"
#include "pgconn/group_spec.hpp"
#include "pgconn/harness.hpp"
#include "pgconn/report_io.hpp"

using namespace pgconn;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string group;
  std::string theorem;
  std::string suite;
  std::string remove;
  std::uint64_t max_order = 60;
  bool json_out = false;
  bool csv_out = false;
  bool all = false;
  bool strict = false;
  bool exceptional = false;
  unsigned jobs = 1;
  ResourceCaps caps;
};

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (auto i : to_indices(s)) out += (out.size() > 1 ? ", " : "") + std::to_string(i);
  return out + "}";
}

int exit_for(const std::vector<Verdict>& verdicts, bool strict) {
  int code = kExitOk;
  for (auto v : verdicts) {
    if (v == Verdict::mismatch) return kExitMismatch;
    if (v == Verdict::skipped_resource && strict) code = kExitResource;
  }
  return code;
}

int cmd_kappa(const Options& o) {
  const auto g = parse_group_spec(o.group);
  if (g.size() < 2) throw InvalidArgument("kappa needs a group of order at least 2");
  if (g.size() > o.caps.max_vertices)
    throw ResourceLimit("group exceeds the " + std::to_string(o.caps.max_vertices) + "-vertex cap");
  const auto graph = build_power_graph(g);
  const auto r = minimum_cut(graph);
  if (o.json_out) {
    json out{{"group", g.name()}, {"kappa", r.kappa}, {"cut", to_indices(r.cut)}};
    if (r.witness)
      out["witness"] = {{"side_a", to_indices(r.witness->side_a)},
                        {"side_b", to_indices(r.witness->side_b)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "group: " << g.name() << "\nkappa: " << r.kappa << "\ncut: " << set_text(r.cut)
              << "\n";
  }
  return kExitOk;
}

int cmd_cutsets(const Options& o) {
  const auto g = parse_group_spec(o.group);
  if (g.size() < 2) throw InvalidArgument("cutsets needs a group of order at least 2");
  if (g.size() > o.caps.max_vertices)
    throw ResourceLimit("group exceeds the " + std::to_string(o.caps.max_vertices) + "-vertex cap");
  const auto graph = build_power_graph(g);
  const auto kappa = vertex_connectivity(graph);
  std::vector<VertexSet> sets;
  bool partial = false;
  if (!o.all) {
    if (!graph.is_complete()) sets.push_back(minimum_cut(graph).cut);
  } else {
    try {
      sets = all_minimum_cutsets(graph, generator_classes(g), kappa, o.caps.max_combinations);
    } catch (const CutsetLimit& e) {
      sets = e.partial();
      partial = true;
      std::cerr << "warning: " << e.what() << "; listing is partial\n";
    }
  }
  const auto listing = canonical_listing(sets);
  if (o.json_out) {
    json out{{"group", g.name()}, {"kappa", kappa}, {"cutsets", listing}};
    if (partial) out["partial"] = true;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "group: " << g.name() << "\nkappa: " << kappa << "\n";
    if (graph.is_complete()) std::cout << "complete graph: no cut-sets\n";
    for (const auto& s : sets) std::cout << set_text(s) << "\n";
  }
  return partial && o.strict ? kExitResource : kExitOk;
}

int cmd_maximal_cyclics(const Options& o) {
  const auto g = parse_group_spec(o.group);
  const auto ms = maximal_cyclic_subgroups(g);
  json rows = json::array();
  for (const auto& m : ms) {
    json row{{"generator", m.generator.index}, {"order", m.order},
             {"nongenerators", nongenerators(m).count()}};
    if (!g.is_cyclic()) row["external_overlap"] = external_overlap(g, m).count();
    rows.push_back(std::move(row));
  }
  if (o.json_out) {
    std::cout << json{{"group", g.name()}, {"maximal_cyclic_subgroups", rows}}.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "group: " << g.name() << "\n";
  for (const auto& row : rows) {
    std::cout << "<" << row["generator"] << ">  order " << row["order"] << "  |M~| "
              << row["nongenerators"];
    if (row.contains("external_overlap")) std::cout << "  |M-| " << row["external_overlap"];
    std::cout << "\n";
  }
  return kExitOk;
}

void print_csv(const std::vector<VerificationReport>& reports) {
  std::cout << "group,theorem,applicable,case,predicted_kappa,observed_kappa,cutsets,verdict\n";
  for (const auto& r : reports) {
    std::cout << r.group_label << "," << r.theorem_id << "," << (r.predicted.applicable ? 1 : 0)
              << "," << r.predicted.case_tag << ","
              << (r.predicted.kappa ? std::to_string(*r.predicted.kappa) : "") << ","
              << (r.observed_kappa ? std::to_string(*r.observed_kappa) : "") << ","
              << (r.observed_cutsets ? std::to_string(r.observed_cutsets->size()) : "") << ","
              << to_string(r.verdict) << "\n";
  }
}

int cmd_verify(const Options& o) {
  const auto g = parse_group_spec(o.group);
  const auto r = verify_corpus(o.theorem, {g}, o.caps, 1).front();
  if (o.csv_out)
    print_csv({r});
  else
    std::cout << to_json(r).dump(2) << "\n";
  return exit_for({r.verdict}, o.strict);
}

std::vector<Group> corpus_for(const Options& o) {
  std::vector<Group> corpus;
  for (const auto& spec : generate_abelian_corpus(o.max_order)) corpus.push_back(make_abelian(spec));
  if (o.exceptional)
    for (auto& g : exceptional_corpus()) corpus.push_back(std::move(g));
  return corpus;
}

int cmd_survey(const Options& o) {
  const auto reports = verify_corpus(o.theorem, corpus_for(o), o.caps, o.jobs);
  if (o.csv_out) {
    print_csv(reports);
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::cout << arr.dump(2) << "\n";
  }
  std::vector<Verdict> verdicts;
  for (const auto& r : reports) verdicts.push_back(r.verdict);
  return exit_for(verdicts, o.strict);
}

int cmd_properties(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite.empty() || o.suite == "all")
    suites = property_suite_ids();
  else
    suites.push_back(o.suite);
  const auto corpus = corpus_for(o);
  json arr = json::array();
  bool failed = false, resource = false;
  for (const auto& id : suites) {
    const auto s = run_property_suite(id, corpus, o.caps);
    failed |= !s.all_passed();
    resource |= s.count(PropertyOutcome::Status::skipped_resource) > 0;
    if (o.json_out) {
      arr.push_back(to_json(s));
    } else {
      std::cout << (s.all_passed() ? "PASS " : "FAIL ") << id
                << "  pass=" << s.count(PropertyOutcome::Status::pass)
                << " skipped=" << s.count(PropertyOutcome::Status::skipped)
                << " resource=" << s.count(PropertyOutcome::Status::skipped_resource)
                << " fail=" << s.count(PropertyOutcome::Status::fail) << "\n";
      for (const auto& out : s.outcomes)
        if (out.status == PropertyOutcome::Status::fail)
          std::cout << "  " << out.group_label << ": " << out.detail << "\n";
    }
  }
  if (o.json_out) std::cout << arr.dump(2) << "\n";
  if (failed) return kExitMismatch;
  return resource && o.strict ? kExitResource : kExitOk;
}

VertexSet parse_index_list(const std::string& text, std::size_t universe) {
  std::vector<std::size_t> idx;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw InvalidArgument("bad vertex index '" + item + "'");
    idx.push_back(v);
  }
  return from_indices(universe, idx);
}

int cmd_export_dot(const Options& o) {
  const auto g = parse_group_spec(o.group);
  if (g.size() > o.caps.max_vertices)
    throw ResourceLimit("group exceeds the " + std::to_string(o.caps.max_vertices) + "-vertex cap");
  const auto graph = build_power_graph(g);
  std::cout << export_dot(g, graph, parse_index_list(o.remove, g.size()));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power graphs of finite groups: vertex connectivity and minimum cut-sets"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-vertices", o.caps.max_vertices, "Largest graph to analyse")
      ->capture_default_str();
  app.add_option("--max-combinations", o.caps.max_combinations,
                 "Search-node cap for cut-set enumeration")
      ->capture_default_str();
  app.add_flag("--strict", o.strict, "Exit with code 3 when a resource cap is hit");

  auto* kappa = app.add_subcommand("kappa", "Vertex connectivity and one minimum cut-set");
  kappa->add_option("--group", o.group, "Group spec")->required();
  kappa->add_flag("--json", o.json_out);

  auto* cutsets = app.add_subcommand("cutsets", "Minimum cut-sets");
  cutsets->add_option("--group", o.group, "Group spec")->required();
  cutsets->add_flag("--all", o.all, "Enumerate every minimum cut-set");
  cutsets->add_flag("--json", o.json_out);

  auto* maxcyc = app.add_subcommand("maximal-cyclics", "Maximal cyclic subgroups");
  maxcyc->add_option("--group", o.group, "Group spec")->required();
  maxcyc->add_flag("--json", o.json_out);

  const auto theorem_check = CLI::IsMember(theorem_ids());
  auto* verify = app.add_subcommand("verify", "Check one closed form against brute force");
  verify->add_option("--theorem", o.theorem)->required()->check(theorem_check);
  verify->add_option("--group", o.group, "Group spec")->required();
  verify->add_flag("--csv", o.csv_out);

  auto* survey = app.add_subcommand("survey", "Verify over the abelian corpus");
  survey->add_option("--max-order", o.max_order)->required()->check(CLI::Range(2, 100000));
  survey->add_option("--theorem", o.theorem)->required()->check(theorem_check);
  survey->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  survey->add_flag("--exceptional", o.exceptional, "Append quaternion and dihedral groups");
  survey->add_flag("--csv", o.csv_out);

  auto* props = app.add_subcommand("properties", "Run property suites over the corpus");
  props->add_option("--suite", o.suite, "Suite id or 'all'");
  props->add_option("--max-order", o.max_order)->check(CLI::Range(2, 100000));
  props->add_flag("--exceptional", o.exceptional, "Append quaternion and dihedral groups");
  props->add_flag("--json", o.json_out);

  auto* dot = app.add_subcommand("export-dot", "Power graph in DOT format");
  dot->add_option("--group", o.group, "Group spec")->required();
  dot->add_option("--remove", o.remove, "Comma-separated vertices to omit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*kappa) return cmd_kappa(o);
    if (*cutsets) return cmd_cutsets(o);
    if (*maxcyc) return cmd_maximal_cyclics(o);
    if (*verify) return cmd_verify(o);
    if (*survey) return cmd_survey(o);
    if (*props) return cmd_properties(o);
    if (*dot) return cmd_export_dot(o);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const UnsupportedStructure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitInvalid;
}
