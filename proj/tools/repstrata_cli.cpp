// Command-line entry point: solving for flat representations, cohomology
// reports, bracket tables, stratum summaries, and the verification suite.
//
// Exit codes: 0 ok, 1 verification failure, 2 solver failure, 3 invalid
// input.

#include <exception>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "repstrata/cohomology.hpp"
#include "repstrata/local_models.hpp"
#include "repstrata/serialization.hpp"
#include "repstrata/surface_group.hpp"
#include "repstrata/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitSolverFailure = 2;
constexpr int kExitInvalidInput = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

int cmd_solve(int genus, const std::string& stratum, std::uint64_t seed,
              double tol, const std::string& out_path) {
  repstrata::SolveOptions opts;
  if (tol > 0) opts.residual_tol = tol;
  const auto target = repstrata::stratum_from_string(stratum);
  if (genus < 2 && target != repstrata::Stratum::G) {
    std::cerr << "solver failure: targets T and Z require genus >= 2\n";
    return kExitSolverFailure;
  }
  const auto rep = repstrata::solve_flat(genus, target, seed, opts);
  emit(repstrata::representation_to_json(rep), out_path);
  return kExitOk;
}

int cmd_cohomology(const std::string& rep_path, double tol,
                   const std::string& out_path) {
  std::ifstream in(rep_path);
  if (!in) throw std::invalid_argument("cannot open file: " + rep_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto rep = repstrata::representation_from_json(buf.str());
  const auto data = repstrata::compute_cohomology(rep, tol);
  const auto lambda = repstrata::lambda_analysis(rep, data, tol);
  const auto pairing = repstrata::pairing_matrix(rep, data);
  const int rank = data.h1_dim == 0
                       ? 0
                       : repstrata::numeric_rank(pairing, tol).rank;
  emit(repstrata::cohomology_to_json(rep, data, lambda, rank), out_path);
  return kExitOk;
}

int cmd_bracket_table(const std::string& model, const std::string& format,
                      const std::string& out_path) {
  using namespace repstrata;
  std::ostringstream text;
  if (model == "cone" || model == "planar") {
    InvariantSet inv = planar_invariants(1);
    if (model == "planar") {
      inv.names.push_back(inv.momentum_names[0]);
      inv.generators.push_back(inv.momentum[0]);
    }
    const BracketTable t = bracket_table(inv);
    if (format == "text") {
      text << bracket_table_to_text(t);
      if (model == "cone") {
        auto gv = std::make_shared<const VarSet>(
            std::vector<std::string>{"x1", "x2", "rho"});
        std::vector<Poly> ours;
        for (const auto& [i, j] :
             std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}) {
          Poly e(gv);
          for (const auto& [exp, c] : t.in_generators[i][j]->terms())
            e.set_coefficient(exp, c);
          ours.push_back(e);
        }
        const auto constant =
            proportionality_constant(ours, cone_reference_table(gv));
        text << "reference-normalization constant: "
             << (constant ? to_string(*constant) : std::string("none")) << "\n";
      }
    } else {
      text << bracket_table_to_json(t);
    }
  } else if (model == "spatial") {
    const InvariantSet inv = spatial_invariants(2);
    if (format == "text") {
      text << bracket_table_to_text(bracket_table(inv));
    } else {
      text << structure_constants_to_json(closure_to_lie_algebra(inv));
    }
  } else {
    throw std::invalid_argument("unknown model: " + model);
  }
  emit(text.str(), out_path);
  return kExitOk;
}

int cmd_report(int genus, const std::string& format, std::uint64_t seed,
               double tol, int jobs, const std::string& out_path) {
  std::vector<int> genera;
  if (genus == 0)
    genera = {2, 3, 4};
  else
    genera = {genus};
  std::vector<repstrata::StratumRow> rows;
  if (jobs > 1 && genera.size() > 1) {
    std::vector<std::future<std::vector<repstrata::StratumRow>>> futures;
    for (int g : genera)
      futures.push_back(std::async(std::launch::async, [=] {
        return repstrata::stratum_report(g, seed, tol);
      }));
    for (auto& f : futures)
      for (const auto& r : f.get()) rows.push_back(r);
  } else {
    for (int g : genera)
      for (const auto& r : repstrata::stratum_report(g, seed, tol))
        rows.push_back(r);
  }
  emit(format == "csv" ? repstrata::stratum_rows_to_csv(rows)
                       : repstrata::stratum_rows_to_json(rows),
       out_path);
  return kExitOk;
}

int cmd_verify(const std::string& only, int jobs, const std::string& out_path) {
  repstrata::VerifyOptions opts;
  opts.only = only;
  opts.jobs = jobs;
  const auto results = repstrata::run_verification(opts);
  for (const auto& r : results)
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.details
              << "\n";
  emit(repstrata::manifest_json(results), out_path);
  return repstrata::all_passed(results) ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local models of SU(2) surface-group representation spaces"};
  app.require_subcommand(1);

  int genus = 2;
  int report_genus = 0;
  std::string stratum = "Z";
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double solver_tol = 0.0;
  std::string out_path;
  std::string format = "json";
  std::string rep_path;
  std::string model = "cone";
  std::string only;
  int jobs = 1;

  auto* solve = app.add_subcommand("solve", "solve the relator equation");
  solve->add_option("--genus", genus, "surface genus")->required();
  solve->add_option("--stratum", stratum, "target orbit type: Z, T, or G");
  solve->add_option("--seed", seed, "random seed");
  solve->add_option("--tolerance", solver_tol, "residual tolerance");
  solve->add_option("--out", out_path, "output file (default stdout)");

  auto* coh = app.add_subcommand("cohomology", "group cohomology report");
  coh->add_option("--rep-file", rep_path, "representation JSON file")
      ->required();
  coh->add_option("--tolerance", tol, "rank tolerance");
  coh->add_option("--out", out_path, "output file (default stdout)");

  auto* table = app.add_subcommand("bracket-table", "exact bracket tables");
  table->add_option("--model", model, "cone, planar, or spatial");
  table->add_option("--format", format, "json or text");
  table->add_option("--out", out_path, "output file (default stdout)");

  auto* report = app.add_subcommand("report", "per-stratum summary table");
  report->add_option("--genus", report_genus, "genus (0 = all of 2..4)");
  report->add_option("--format", format, "json or csv");
  report->add_option("--seed", seed, "witness solver seed");
  report->add_option("--tolerance", tol, "rank tolerance");
  report->add_option("--jobs", jobs, "parallel sub-tasks");
  report->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--only", only, "filter criteria by id substring");
  verify->add_option("--jobs", jobs, "parallel sub-tasks");
  verify->add_option("--out", out_path, "manifest file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(genus, stratum, seed, solver_tol, out_path);
    if (coh->parsed()) return cmd_cohomology(rep_path, tol, out_path);
    if (table->parsed()) return cmd_bracket_table(model, format, out_path);
    if (report->parsed())
      return cmd_report(report_genus, format, seed, tol, jobs, out_path);
    if (verify->parsed()) return cmd_verify(only, jobs, out_path);
  } catch (const repstrata::SolverFailure& e) {
    std::cerr << "solver failure: " << e.what()
              << " (final residual " << e.final_residual << ")\n";
    return kExitSolverFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
