#include "hall/cli.hpp"

#include <sstream>

#include "CLI11.hpp"

#include "hall/classical_hall.hpp"
#include "hall/derived_hall.hpp"
#include "hall/error.hpp"
#include "hall/io.hpp"
#include "hall/verify.hpp"

namespace hall::cli {

namespace {

using json = nlohmann::json;

struct RunConfig {
  std::string quiver;
  fq::Elem p = 2;
  std::string bound;
  std::string mode = "classical";
  std::string window = "-1,1";
  std::uint64_t max_candidates = EnumerationLimits{}.max_candidates;
  std::size_t max_hom_dim = EnumerationLimits{}.max_hom_dim;
  unsigned workers = 1;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string checks = "all";
  std::size_t homotopy_trials = 50;
  std::string map, fn, square;
  std::string direction = "push";
};

void add_context_options(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--quiver", c.quiver, "Quiver JSON file")->required();
  cmd->add_option("-p", c.p, "Prime modulus")->default_val(2);
  cmd->add_option("--bound", c.bound, "Dimension vector bound, e.g. 2,2")->required();
  cmd->add_option("--max-candidates", c.max_candidates, "Cap on exhaustive enumerations")
      ->check(CLI::PositiveNumber)
      ->default_val(c.max_candidates);
  cmd->add_option("--max-hom-dim", c.max_hom_dim, "Cap on enumerated Hom dimensions")
      ->check(CLI::PositiveNumber)
      ->default_val(c.max_hom_dim);
  cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber)->default_val(1);
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->default_val("json");
}

void add_window_option(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--window", c.window, "Shift window lo,hi (write --window=-1,1)")->default_val("-1,1");
}

Catalog build_catalog(const RunConfig& c) {
  auto quiver = io::quiver_from_json(io::read_json_file(c.quiver));
  return Catalog::build(quiver, c.p, io::parse_dims(c.bound), EnumerationLimits{c.max_candidates, c.max_hom_dim});
}

void require_acyclic(const Catalog& cat) {
  if (!cat.quiver()->is_acyclic()) throw InvalidInput("derived mode needs an acyclic quiver");
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

template <class Basis>
void emit_table(std::ostream& out, const StructureTable<Basis>& table, const std::string& format) {
  if (format == "csv") {
    out << io::table_to_csv(table);
  } else if (format == "pretty") {
    out << io::table_to_text(table);
  } else {
    emit_json(out, io::table_to_json(table));
  }
}

int cmd_catalog(const RunConfig& c, std::ostream& out) {
  const auto cat = build_catalog(c);
  const auto doc = io::catalog_to_json(cat);
  if (c.format == "json") {
    emit_json(out, doc);
    return 0;
  }
  if (c.format == "csv") out << "id,dim_vector,aut_order,indecomposable\n";
  for (const auto& e : doc["classes"]) {
    std::string dims;
    for (const auto& d : e["dim_vector"]) dims += (dims.empty() ? "" : c.format == "csv" ? ";" : ",") + d.dump();
    if (c.format == "csv") {
      out << e["id"].dump() << "," << dims << "," << e["aut_order"].dump() << "," << e["indecomposable"].dump() << "\n";
    } else {
      out << "c" << e["id"].dump() << "  dims (" << dims << ")  |Aut| = " << e["aut_order"].dump()
          << (e["indecomposable"].get<bool>() ? "  indecomposable" : "") << "\n";
    }
  }
  return 0;
}

int cmd_hall_table(const RunConfig& c, std::ostream& out) {
  const auto cat = build_catalog(c);
  emit_table(out, classical_table(ClassicalHall(cat), c.workers), c.format);
  return 0;
}

int cmd_derived_table(const RunConfig& c, std::ostream& out) {
  const auto cat = build_catalog(c);
  require_acyclic(cat);
  emit_table(out, derived_table(DerivedHall(cat, io::parse_window(c.window)), c.workers), c.format);
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (c.format == "csv") throw InvalidInput("verify reports are JSON or pretty");
  const auto cat = build_catalog(c);
  VerifyConfig vc;
  vc.workers = c.workers;
  vc.seed = c.seed;
  vc.homotopy_trials = c.homotopy_trials;
  if (c.checks != "all") {
    std::istringstream in(c.checks);
    for (std::string name; std::getline(in, name, ',');) vc.checks.insert(name);
  }
  json report;
  if (c.mode == "derived") {
    require_acyclic(cat);
    report = verify_derived(DerivedHall(cat, io::parse_window(c.window)), vc);
  } else {
    report = verify_classical(ClassicalHall(cat), vc);
  }
  if (c.format == "pretty") {
    for (const auto& [name, check] : report["checks"].items()) {
      out << name << ": " << check["status"].get<std::string>() << " (" << check["cases"].dump() << " cases, "
          << check["failures"].size() << " failures)\n";
    }
    out << "status: " << report["status"].get<std::string>() << "\n";
  } else {
    emit_json(out, report);
  }
  return report["failures"].get<std::size_t>() == 0 ? 0 : 1;
}

int cmd_lf_eval(const RunConfig& c, std::ostream& out) {
  const auto map = io::map_from_json(io::read_json_file(c.map));
  const auto doc = io::read_json_file(c.fn);
  const auto result = c.direction == "pull" ? lf::pullback(map, io::fn_from_json(doc, map.target))
                                            : lf::pushforward(map, io::fn_from_json(doc, map.source));
  if (c.format == "pretty") {
    for (const auto& [id, v] : result.values()) out << id << " " << format_rational(v) << "\n";
  } else {
    emit_json(out, io::fn_to_json(result));
  }
  return 0;
}

int cmd_base_change(const RunConfig& c, std::ostream& out) {
  const auto report = lf::check_base_change(io::square_from_json(io::read_json_file(c.square)));
  emit_json(out, {{"schema", 1},
                  {"equal", report.equal},
                  {"max_deviation", format_rational(report.max_deviation)},
                  {"checked", report.checked}});
  return report.equal ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hall algebras of quiver representations over prime fields"};
  app.name("hall");
  app.require_subcommand(1);
  RunConfig c;

  auto* catalog = app.add_subcommand("catalog", "List the isomorphism classes inside the bound");
  add_context_options(catalog, c);
  auto* hall_table = app.add_subcommand("hall-table", "Classical multiplication table");
  add_context_options(hall_table, c);
  auto* derived_table_cmd = app.add_subcommand("derived-table", "Derived multiplication table");
  add_context_options(derived_table_cmd, c);
  add_window_option(derived_table_cmd, c);
  auto* verify = app.add_subcommand("verify", "Run the verification sweep");
  add_context_options(verify, c);
  add_window_option(verify, c);
  verify->add_option("--mode", c.mode, "classical or derived")
      ->check(CLI::IsMember({"classical", "derived"}))
      ->default_val("classical");
  verify->add_option("--checks", c.checks, "Comma-separated checks, or all")->default_val("all");
  verify->add_option("--seed", c.seed, "Seed for randomized checks")->default_val(1);
  verify->add_option("--homotopy-trials", c.homotopy_trials, "Random null-homotopy perturbations")->default_val(50);
  auto* lf_eval = app.add_subcommand("lf-eval", "Push a function forward (or pull it back) along a proper map");
  lf_eval->add_option("--map", c.map, "Proper map JSON file")->required();
  lf_eval->add_option("--fn", c.fn, "Function JSON file")->required();
  lf_eval->add_option("--direction", c.direction, "push or pull")
      ->check(CLI::IsMember({"push", "pull"}))
      ->default_val("push");
  lf_eval->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "pretty"}))->default_val("json");
  auto* base_change = app.add_subcommand("base-change", "Check u^* f_! = g_! v^* on a square");
  base_change->add_option("--square", c.square, "Square JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(c, out);
    if (hall_table->parsed()) return cmd_hall_table(c, out);
    if (derived_table_cmd->parsed()) return cmd_derived_table(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (lf_eval->parsed()) return cmd_lf_eval(c, out);
    if (base_change->parsed()) return cmd_base_change(c, out);
  } catch (const ResourceLimit& e) {
    err << "hall: resource limit: " << e.what() << "\n";
    return 3;
  } catch (const OutOfUniverse& e) {
    err << "hall: outside the universe: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    err << "hall: invalid input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace hall::cli
