#include "minsub/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "minsub/cuts.hpp"
#include "minsub/random.hpp"
#include "minsub/sublinear.hpp"

namespace minsub::cli {

namespace {

using io::Json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(path + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": malformed JSON: " + e.what());
  }
}

Json evaluate(const Json& input, bool gauge) {
  const HPolyhedron h = io::hpolyhedron_from_json(input);
  const auto points = io::vectors_from_json(io::require(input, "points"), "points", h.dim());
  Json out;
  out["function"] = gauge ? "gauge" : "rho";
  Json values = Json::array();
  for (const auto& x : points) {
    Json item;
    item["x"] = io::to_json(x);
    item["value"] = (gauge ? gauge_eval(h, x) : rho_eval(h, x)).str();
    values.push_back(std::move(item));
  }
  out["values"] = std::move(values);
  return out;
}

std::vector<Vector> non_recession_samples(const HPolyhedron& h, std::uint64_t seed, std::size_t count) {
  std::vector<Vector> out;
  for (std::uint64_t round = 0; out.size() < count && round < 64; ++round) {
    for (auto& x : sample_points(h, seed + 7919 * round, count)) {
      if (!in_recession(h, x)) out.push_back(std::move(x));
      if (out.size() == count) break;
    }
  }
  return out;
}

Json verify_command(const CommandRequest& req) {
  std::vector<HPolyhedron> instances;
  if (req.random_instances > 0) {
    Rng rng(req.seed);
    while (instances.size() < req.random_instances) {
      const auto dim = static_cast<std::size_t>(rng.uniform(1, 4));
      const auto rows = static_cast<std::size_t>(rng.uniform(3, 10));
      instances.push_back(random_hpolyhedron(rng, dim, rows));
    }
  } else {
    if (req.input_path.empty()) throw InputError("verify needs an input file or --random N");
    instances.push_back(io::hpolyhedron_from_json(read_json(req.input_path)));
  }

  const SuiteOptions options{req.samples, req.candidates};
  Json out;
  out["seed"] = req.seed;
  out["instances"] = instances.size();
  out["samples"] = req.samples;
  std::size_t total = 0;
  Json failing = Json::array();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    Json r = verify_instance(instances[i], req.seed * 1000003ULL + i, options);
    const auto v = r["violations"].get<std::size_t>();
    total += v;
    if (v > 0) {
      r["instance"] = io::to_json(instances[i]);
      failing.push_back(std::move(r));
    }
  }
  out["failing_instances"] = std::move(failing);
  out["passed"] = total == 0;
  out["violations"] = total;
  return out;
}

struct CutInput {
  CornerInstance instance;
  Json root;
};

CutInput read_instance(const std::string& path) {
  CutInput in{{}, read_json(path)};
  in.instance = io::instance_from_json(io::require(in.root, "instance"));
  return in;
}

}  // namespace

Json verify_instance(const HPolyhedron& h, std::uint64_t seed, const SuiteOptions& options) {
  std::size_t sandwich_checked = 0;
  std::size_t sandwich_violations = 0;
  Json details = Json::array();
  const auto samples = sample_points(h, seed, options.samples);
  for (std::size_t c = 0; c < options.candidates; ++c) {
    const auto candidate = random_valid_C(h, seed + 31 * (c + 1), c % 6);
    const auto report = sandwich_check(h, candidate, samples);
    sandwich_checked += report.samples_checked;
    sandwich_violations += report.violations.size();
    if (!report.passed() && details.size() < 10) details.push_back(io::to_json(report));
  }

  std::size_t reconstruct_failures = 0;
  for (const auto& x : samples)
    if (!reconstruct_check(h, {x})) ++reconstruct_failures;

  std::size_t notrec_failures = 0;
  const auto off_cone = non_recession_samples(h, seed + 17, options.samples);
  for (const auto& x : off_cone)
    if (!lemma_notrec_check(h, x)) ++notrec_failures;

  std::size_t exposed_failures = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    try {
      const auto w = exposed_witness(h, i);
      if (w.margin.sign() <= 0) ++exposed_failures;
    } catch (const InternalConsistencyError&) {
      ++exposed_failures;
    }
  }

  Json out;
  out["dim"] = h.dim();
  out["rows"] = h.size();
  Json sandwich;
  sandwich["samples_checked"] = sandwich_checked;
  sandwich["violations"] = sandwich_violations;
  if (!details.empty()) sandwich["details"] = std::move(details);
  out["sandwich"] = std::move(sandwich);
  out["reconstruct"] = {{"samples_checked", samples.size()}, {"violations", reconstruct_failures}};
  out["lemma_notrec"] = {{"samples_checked", off_cone.size()}, {"violations", notrec_failures}};
  out["exposed"] = {{"rows_checked", h.size()}, {"violations", exposed_failures}};
  const std::size_t total = sandwich_violations + reconstruct_failures + notrec_failures + exposed_failures;
  out["passed"] = total == 0;
  out["violations"] = total;
  return out;
}

std::string emit_report(const Json& report, Format format) {
  if (format == Format::text) return io::to_text(report);
  return report.dump(2) + "\n";
}

ExitCode run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.radius < 1) throw InputError("--radius must be at least 1");
    const std::string& cmd = req.subcommand;
    Json report;
    ExitCode code = ExitCode::ok;

    if (cmd == "polar") {
      report = io::to_json(polar(io::hpolyhedron_from_json(read_json(req.input_path))));
    } else if (cmd == "gauge" || cmd == "rho") {
      report = evaluate(read_json(req.input_path), cmd == "gauge");
    } else if (cmd == "verify") {
      report = verify_command(req);
      if (!report["passed"].get<bool>()) code = ExitCode::violation;
    } else if (cmd == "cut") {
      const auto in = read_instance(req.input_path);
      const auto body = io::body_from_json(io::require(in.root, "body"), in.instance);
      try {
        report = io::to_json(generate_cut(in.instance, body, req.radius));
      } catch (const NotSFreeError& e) {
        report["refused"] = true;
        report["reason"] = "body is not S-free on the search region";
        report["z"] = io::to_json(e.witness());
        code = ExitCode::violation;
      }
    } else if (cmd == "check-cut") {
      const auto in = read_instance(req.input_path);
      const auto cut = io::cut_from_json(io::require(in.root, "cut"), in.instance.rays.size());
      const auto validity = check_cut_validity(in.instance, cut, req.radius);
      report = io::to_json(validity);
      if (!validity.valid_on_region) code = ExitCode::violation;
    } else if (cmd == "sfree") {
      const auto in = read_instance(req.input_path);
      const auto body = io::body_from_json(io::require(in.root, "body"), in.instance);
      const auto verdict = is_S_free(body, in.instance, req.radius);
      report = io::to_json(verdict);
      if (!verdict.free_on_region) code = ExitCode::violation;
    } else if (cmd == "maximal") {
      const auto in = read_instance(req.input_path);
      const auto body = io::body_from_json(io::require(in.root, "body"), in.instance);
      const auto verdict = is_S_free(body, in.instance, req.radius);
      if (!verdict.free_on_region) {
        report["refused"] = true;
        report["reason"] = "body is not S-free on the search region";
        report["z"] = io::to_json(*verdict.witness);
        code = ExitCode::violation;
      } else {
        const auto cert = maximality_certificate(body, in.instance, req.radius);
        report = io::to_json(cert);
        if (!cert.certified) code = ExitCode::violation;
      }
    } else {
      throw InputError("unknown subcommand '" + cmd + "'");
    }
    out << emit_report(report, req.format);
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const io::SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
  } catch (const GeometryError& e) {
    err << "invalid geometry: " << e.what() << '\n';
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return ExitCode::violation;
  }
  return ExitCode::input_error;
}

}  // namespace minsub::cli
