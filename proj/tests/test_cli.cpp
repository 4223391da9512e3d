#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "minsub/cli.hpp"

using namespace minsub;
using namespace minsub::cli;

namespace {

const std::string kData = MINSUB_DATA_DIR;

struct Result {
  ExitCode code;
  std::string out;
  std::string err;
};

Result run_in_process(CommandRequest req) {
  std::ostringstream out;
  std::ostringstream err;
  const ExitCode code = run(req, out, err);
  return {code, out.str(), err.str()};
}

CommandRequest request(const std::string& sub, const std::string& file) {
  CommandRequest r;
  r.subcommand = sub;
  r.input_path = file.empty() ? "" : kData + "/" + file;
  return r;
}

int exit_status(const std::string& args) {
  const std::string cmd = std::string(MINSUB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_CASE("polar of the quadrant") {
  const auto r = run_in_process(request("polar", "quadrant.json"));
  CHECK(r.code == ExitCode::ok);
  const auto j = io::Json::parse(r.out);
  CHECK(j["points"] == io::Json::parse(R"([["0","0"],["1","0"],["0","1"]])"));
}

TEST_CASE("rho and gauge at listed points") {
  const auto rho = io::Json::parse(run_in_process(request("rho", "quadrant.json")).out);
  CHECK(rho["values"][0]["value"] == "-1");
  CHECK(rho["values"][1]["value"] == "3");
  const auto gauge = io::Json::parse(run_in_process(request("gauge", "quadrant.json")).out);
  CHECK(gauge["values"][0]["value"] == "0");
  CHECK(gauge["values"][1]["value"] == "3");
}

TEST_CASE("verify on random instances") {
  auto req = request("verify", "");
  req.random_instances = 5;
  req.seed = 7;
  req.samples = 50;
  req.format = Format::text;
  const auto r = run_in_process(req);
  CHECK(r.code == ExitCode::ok);
  CHECK(r.out.find("violations: 0") != std::string::npos);
  CHECK(run_in_process(req).out == r.out);  // byte-identical

  const auto single = run_in_process(request("verify", "quadrant.json"));
  CHECK(single.code == ExitCode::ok);
  CHECK(io::Json::parse(single.out)["violations"] == 0);
}

TEST_CASE("cut, refusal, check-cut, sfree, maximal") {
  const auto cut = run_in_process(request("cut", "split_cut.json"));
  CHECK(cut.code == ExitCode::ok);
  CHECK(io::Json::parse(cut.out)["alpha"] == io::Json::parse(R"(["2","2"])"));

  const auto refused = run_in_process(request("cut", "wide_body.json"));
  CHECK(refused.code == ExitCode::violation);
  CHECK(io::Json::parse(refused.out)["z"] == io::Json::parse(R"(["0"])"));

  const auto valid = run_in_process(request("check-cut", "split_check.json"));
  CHECK(valid.code == ExitCode::ok);
  CHECK(io::Json::parse(valid.out)["valid_on_region"] == true);

  const auto violated = run_in_process(request("check-cut", "zero_cut.json"));
  CHECK(violated.code == ExitCode::violation);
  const auto vj = io::Json::parse(violated.out);
  CHECK(vj["violations"][0].contains("x"));
  CHECK(vj["violations"][0].contains("s"));

  CHECK(run_in_process(request("sfree", "split_cut.json")).code == ExitCode::ok);
  const auto witness = run_in_process(request("sfree", "wide_body.json"));
  CHECK(witness.code == ExitCode::violation);
  CHECK(io::Json::parse(witness.out)["z"] == io::Json::parse(R"(["0"])"));

  CHECK(run_in_process(request("maximal", "split_cut.json")).code == ExitCode::ok);
  const auto short_body = run_in_process(request("maximal", "short_interval.json"));
  CHECK(short_body.code == ExitCode::violation);
  CHECK(io::Json::parse(short_body.out)["uncertified_facets"] == io::Json::parse("[0]"));
}

TEST_CASE("input errors exit with 2 and a diagnostic") {
  const auto malformed = run_in_process(request("polar", "malformed.json"));
  CHECK(malformed.code == ExitCode::input_error);
  CHECK(malformed.err.find("malformed.json:3:") != std::string::npos);

  const auto field = run_in_process(request("polar", "bad_field.json"));
  CHECK(field.code == ExitCode::input_error);
  CHECK(field.err.find("rhs[1]") != std::string::npos);

  CHECK(run_in_process(request("polar", "origin_on_boundary.json")).code == ExitCode::input_error);
  CHECK(run_in_process(request("polar", "missing.json")).code == ExitCode::input_error);
  CHECK(run_in_process(request("verify", "")).code == ExitCode::input_error);
  CHECK(run_in_process(request("rho", "split_cut.json")).code == ExitCode::input_error);
}

TEST_CASE("exit codes of the installed binary") {
  CHECK(exit_status("polar " + kData + "/quadrant.json") == 0);
  CHECK(exit_status("rho " + kData + "/quadrant.json --format text") == 0);
  CHECK(exit_status("verify --random 3 --seed 7 --samples 20") == 0);
  CHECK(exit_status("cut " + kData + "/split_cut.json --radius 5") == 0);
  CHECK(exit_status("cut " + kData + "/wide_body.json") == 1);
  CHECK(exit_status("check-cut " + kData + "/zero_cut.json") == 1);
  CHECK(exit_status("polar " + kData + "/malformed.json") == 2);
  CHECK(exit_status("polar " + kData + "/bad_field.json") == 2);
  CHECK(exit_status("cut " + kData + "/split_cut.json --radius 0") == 2);
  CHECK(exit_status("nonsense") == 2);
  CHECK(exit_status("") == 2);
}
