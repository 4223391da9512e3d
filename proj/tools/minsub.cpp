#include <iostream>

#include <CLI11.hpp>

#include "minsub/cli.hpp"

int main(int argc, char** argv) {
  using minsub::cli::CommandRequest;
  using minsub::cli::Format;

  CLI::App app{"Exact polar duality, gauges and minimal sublinear functions of polyhedra"};
  app.require_subcommand(1);

  CommandRequest request;
  std::string format = "json";

  struct Spec {
    const char* name;
    const char* help;
    bool input_required;
  };
  const Spec specs[] = {
      {"polar", "Print K* = conv({0} ∪ rows) for an H-polyhedron", true},
      {"gauge", "Evaluate the gauge of K at the listed points", true},
      {"rho", "Evaluate the minimal sublinear function of K at the listed points", true},
      {"verify", "Run the property suite on an instance or on random instances", false},
      {"cut", "Generate the cut psi_B(r^j) from an S-free body", true},
      {"check-cut", "Check a cut against every lattice point of the search region", true},
      {"sfree", "Search the region for a point of S inside the body", true},
      {"maximal", "Certify maximality by lattice points on every facet", true},
  };
  for (const auto& spec : specs) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    auto* in = sub->add_option("input", request.input_path, "JSON input file");
    if (spec.input_required) in->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    if (std::string(spec.name) == "verify") {
      sub->add_option("--random", request.random_instances, "Number of random instances");
      sub->add_option("--seed", request.seed, "Random seed");
      sub->add_option("--samples", request.samples, "Sample points per instance");
      sub->add_option("--candidates", request.candidates, "Candidate support functions per instance");
    } else {
      sub->add_option("--radius", request.radius, "Lattice search radius (infinity norm)")
          ->check(CLI::PositiveNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(minsub::cli::ExitCode::input_error);
  }
  request.subcommand = app.get_subcommands().front()->get_name();
  request.format = format == "text" ? Format::text : Format::json;
  return static_cast<int>(minsub::cli::run(request, std::cout, std::cerr));
}
