#include "springer/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace springer::cli;

  CLI::App app{"Exact lattice, toric and multiplicity data for simple root systems"};
  CommandRequest req;
  std::string format = "json";
  std::string out_path;
  long bound = 0, d = 0;
  std::string J, weight;

  app.add_option("command", req.command, "info | cosets | zgroup | zgroup-sweep | decompose | smooth | resolve | "
                                         "canonical | mult | normality | conformance")
      ->required();
  app.add_option("type", req.type_rank, "Root system such as A3, or a range like A1-A6,E6 for conformance")
      ->required();
  auto* j_opt = app.add_option("--J", J, "Face index set, e.g. 1,3");
  auto* w_opt = app.add_option("--weight", weight, "Weight in simple-root coordinates, e.g. 1/2,0,1/2");
  auto* b_opt = app.add_option("--bound", bound, "Bound for enumerations");
  auto* d_opt = app.add_option("--d", d, "Orbifold chart parameter");
  app.add_flag("--fundamental", req.fundamental, "Also print fundamental-weight coordinates");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write the report to this path instead of stdout");
  app.add_option("--threads", req.threads, "Worker threads for sweeps");
  app.add_option("--max-classical-rank", req.max_classical_rank, "Largest accepted rank for A, B, C, D");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(Status::input_error);
  }
  if (*j_opt) req.J = J;
  if (*w_opt) req.weight = weight;
  if (*b_opt) req.bound = bound;
  if (*d_opt) req.d = d;

  ReportDocument doc = run(req);
  const std::string rendered = format == "text" ? render_text(doc) : render_json(doc);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return exit_code(Status::input_error);
    }
    f << rendered;
  }
  if (doc.status != Status::ok) std::cerr << status_name(doc.status) << ": " << doc.message << "\n";
  return exit_code(doc.status);
}
