// Command-line front end: datum ingestion and verification, module
// construction, Gram/radical/character reports, level scans, and the bundled
// identity verifiers. Exit codes: 0 success and all residuals zero, 1 when a
// verifier reports violations or nonzero residuals, 2 on input errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "superloop/datum_io.hpp"
#include "superloop/error.hpp"
#include "superloop/form.hpp"
#include "superloop/report_io.hpp"
#include "superloop/vertex.hpp"

namespace {

using namespace superloop;
using ordered_json = nlohmann::ordered_json;

struct CommonArgs {
  std::string datum_path;
  std::string ell = "1";
  std::string lambda;
  std::string max_degree = "6";
  std::string kind = "vacuum";
  int window = 4;
  std::string format = "json";
  std::string out_path;
  int jobs = 1;
};

void emit(const CommonArgs& args, const std::string& text) {
  if (args.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(args.out_path);
  if (!out) throw error(errc::parse_error, "cannot write '" + args.out_path + "'");
  out << text;
}

RatVec parse_lambda(const std::string& text, int dim_a) {
  RatVec lambda(static_cast<std::size_t>(dim_a), Rational(0));
  if (text.empty()) return lambda;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= lambda.size())
      throw error(errc::dimension_mismatch, "lambda has too many entries");
    lambda[i++] = parse_rational(item);
  }
  if (i != lambda.size())
    throw error(errc::dimension_mismatch, "lambda needs dim_a entries");
  return lambda;
}

ModuleConfig make_config(const CommonArgs& args) {
  AlgebraDatum d = load_datum(args.datum_path);
  ModuleConfig cfg;
  cfg.datum = std::move(d);
  cfg.ell = parse_rational(args.ell);
  cfg.kind = args.kind == "verma" ? VacuumKind::VermaM : VacuumKind::VacuumV;
  cfg.lambda = parse_lambda(args.lambda, cfg.datum.dim_a);
  cfg.max_degree = HalfInt::parse(args.max_degree);
  if (!cfg.datum.identity_a) find_identity(cfg.datum);
  cfg.validate();
  return cfg;
}

int run_verify(const CommonArgs& args) {
  const AlgebraDatum d = load_datum(args.datum_path);
  const DatumReport report = verify_datum(d);
  emit(args, datum_report_to_json(report));
  return report.ok() ? 0 : 1;
}

int run_jacobi(const CommonArgs& args) {
  const AlgebraDatum d = load_datum(args.datum_path);
  const auto witnesses = jacobi_scan(d, args.window);
  emit(args, jacobi_witnesses_to_json(witnesses));
  return witnesses.empty() ? 0 : 1;
}

int run_build(const CommonArgs& args) {
  InducedModule mod(make_config(args));
  const HalfInt cap = mod.config().max_degree;
  if (args.format == "csv" || args.format == "text") {
    std::ostringstream out;
    out << "degree,dim\n";
    for (long t = 0; t <= cap.twice(); ++t) {
      const HalfInt d = HalfInt::from_twice(t);
      out << d.str() << ',' << mod.graded_dimension(d) << '\n';
    }
    emit(args, out.str());
  } else {
    ordered_json j = ordered_json::array();
    for (long t = 0; t <= cap.twice(); ++t) {
      const HalfInt d = HalfInt::from_twice(t);
      j.push_back({{"degree", d.str()}, {"dim", mod.graded_dimension(d)}});
    }
    emit(args, j.dump(2) + "\n");
  }
  return 0;
}

int run_gram(const CommonArgs& args, const std::string& degree) {
  InducedModule mod(make_config(args));
  const HalfInt d =
      degree.empty() ? mod.config().max_degree : HalfInt::parse(degree);
  const GramMatrix g = gram(mod, d);
  emit(args, args.format == "csv" ? gram_to_csv(g) : gram_to_json(g));
  return 0;
}

int run_radical(const CommonArgs& args, const std::string& degree) {
  InducedModule mod(make_config(args));
  const HalfInt d =
      degree.empty() ? mod.config().max_degree : HalfInt::parse(degree);
  emit(args, radical_to_json(radical_basis(mod, d)));
  return 0;
}

int run_character(const CommonArgs& args) {
  const ModuleConfig cfg = make_config(args);
  const HalfInt cap = cfg.max_degree;
  CharacterSeries rows(static_cast<std::size_t>(cap.twice()) + 1);

  const int jobs = std::max(1, args.jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      InducedModule mod(cfg);  // private instance per worker
      for (long t = w; t <= cap.twice(); t += jobs) {
        const HalfInt d = HalfInt::from_twice(t);
        const long dim = mod.graded_dimension(d);
        const long rad = radical_basis(mod, d).dim();
        rows[static_cast<std::size_t>(t)] = {d, dim, rad, dim - rad};
      }
    });
  }
  for (auto& w : workers) w.join();

  emit(args, args.format == "csv" || args.format == "text"
                 ? character_to_csv(rows)
                 : character_to_json(rows));
  return 0;
}

int run_scan(const CommonArgs& args, const std::string& degree,
             const std::string& ells_text) {
  const ModuleConfig cfg = make_config(args);
  const HalfInt d =
      degree.empty() ? cfg.max_degree : HalfInt::parse(degree);
  std::vector<Rational> ells;
  std::stringstream ss(ells_text);
  std::string item;
  while (std::getline(ss, item, ',')) ells.push_back(parse_rational(item));
  const auto result = ell_scan(cfg, d, ells);
  emit(args, args.format == "csv" ? ell_scan_to_csv(result)
                                  : ell_scan_to_json(result));
  return 0;
}

int run_builders(const CommonArgs& args, const std::string& name, int n,
                 const std::string& f_text, const std::string& base_path) {
  AlgebraDatum d;
  if (name == "ns") {
    d = build_ns();
  } else if (name == "trunc-poly") {
    RatVec f;
    std::stringstream ss(f_text);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(parse_rational(item));
    if (f.empty()) f.assign(static_cast<std::size_t>(n) + 1, Rational(1));
    d = build_trunc_poly(n, f);
  } else if (name == "ideal") {
    if (base_path.empty())
      throw error(errc::parse_error, "ideal builder needs --base datum");
    d = build_ideal_module(load_datum(base_path));
  } else {
    throw error(errc::parse_error, "unknown builder '" + name + "'");
  }
  emit(args, datum_to_json_text(d));
  return 0;
}

int run_identities(const CommonArgs& args) {
  InducedModule mod(make_config(args));
  // safe default grids: virasoro window 3, bracket/skew window 2, states
  // sampled through degree 2; unsafe combinations near the truncation bound
  // are skipped by the verifiers themselves
  const HalfInt cap = HalfInt::whole(2);
  VerifyReport all;
  auto absorb = [&all](VerifyReport r) {
    for (auto& c : r.checks) all.checks.push_back(std::move(c));
  };
  absorb(verify_structure_identities(mod));
  absorb(verify_virasoro(mod, 3, cap));
  absorb(verify_commutator_skew_grids(mod, 2, cap));
  emit(args, verify_report_to_json(all));
  return all.all_zero() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact loop-superalgebra module calculator"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string degree;
  std::string ells = "0,1,2";
  std::string builder_name = "ns";
  std::string f_text;
  std::string base_path;
  int trunc_n = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_datum = true) {
    if (needs_datum)
      cmd->add_option("--datum", args.datum_path, "datum JSON file")
          ->required();
    cmd->add_option("--ell", args.ell, "level (rational)");
    cmd->add_option("--lambda", args.lambda,
                    "comma-separated rationals, one per A-basis element");
    cmd->add_option("--max-degree", args.max_degree,
                    "truncation degree, e.g. 6 or 9/2");
    cmd->add_option("--kind", args.kind, "vacuum | verma")
        ->check(CLI::IsMember({"vacuum", "verma"}));
    cmd->add_option("--window", args.window, "mode window");
    cmd->add_option("--format", args.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", args.out_path, "output file (default stdout)");
    cmd->add_option("--jobs", args.jobs, "worker count for per-degree work");
  };

  auto* verify = app.add_subcommand("verify", "check the datum conditions");
  add_common(verify);
  auto* jacobi =
      app.add_subcommand("jacobi", "scan the super Jacobi identity");
  add_common(jacobi);
  auto* build = app.add_subcommand("build", "graded dimensions of the module");
  add_common(build);
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix at a degree");
  add_common(gram_cmd);
  gram_cmd->add_option("--degree", degree, "degree, e.g. 7/2");
  auto* radical = app.add_subcommand("radical", "radical basis at a degree");
  add_common(radical);
  radical->add_option("--degree", degree, "degree, e.g. 7/2");
  auto* character_cmd =
      app.add_subcommand("character", "graded dims of module/radical/simple");
  add_common(character_cmd);
  auto* scan = app.add_subcommand("scan", "Gram rank per level");
  add_common(scan);
  scan->add_option("--degree", degree, "degree, e.g. 2");
  scan->add_option("--ells", ells, "comma-separated levels");
  auto* builders = app.add_subcommand("builders", "write a built-in datum");
  add_common(builders, /*needs_datum=*/false);
  builders->add_option("--name", builder_name, "ns | trunc-poly | ideal");
  builders->add_option("--n", trunc_n, "truncation order for trunc-poly");
  builders->add_option("--f", f_text,
                       "functional values f(1),f(x),...,f(x^n)");
  builders->add_option("--base", base_path, "base datum for the ideal builder");
  auto* identities =
      app.add_subcommand("identities", "bundled structure verifiers");
  add_common(identities);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(args);
    if (jacobi->parsed()) return run_jacobi(args);
    if (build->parsed()) return run_build(args);
    if (gram_cmd->parsed()) return run_gram(args, degree);
    if (radical->parsed()) return run_radical(args, degree);
    if (character_cmd->parsed()) return run_character(args);
    if (scan->parsed()) return run_scan(args, degree, ells);
    if (builders->parsed())
      return run_builders(args, builder_name, trunc_n, f_text, base_path);
    if (identities->parsed()) return run_identities(args);
  } catch (const error& e) {
    nlohmann::ordered_json j;
    j["error"] = errc_name(e.code());
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    nlohmann::ordered_json j;
    j["error"] = "INTERNAL";
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return 2;
  }
  return 2;
}
