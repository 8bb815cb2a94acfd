// End-to-end checks of the command-line surface: exit codes, diagnostics and
// printed output, driven through the real binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exitCode = -1;
  std::string out;
  std::string err;
};

fs::path tmpDir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "fuzzscore_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path outFile = tmpDir() / ("out_" + std::to_string(counter) + ".txt");
  const fs::path errFile = tmpDir() / ("err_" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string(FUZZSCORE_CLI_PATH) + " " + args + " >" +
                          outFile.string() + " 2>" + errFile.string();
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(outFile);
  result.err = slurp(errFile);
  return result;
}

fs::path writeCsv(const std::string& name, const std::string& body) {
  const fs::path path = tmpDir() / name;
  std::ofstream out(path);
  out << "id";
  for (int i = 1; i <= 14; ++i)
    out << ",item_" << (i < 10 ? "0" : "") << i;
  out << "\n" << body;
  return path;
}

}  // namespace

TEST_CASE("validate prints the rule counts and exits cleanly") {
  const RunResult r = run("validate");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("rules: 243+243+81+27") != std::string::npos);
  CHECK(r.out.find("calibration:") != std::string::npos);
  CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("score on a missing input file is a data error") {
  const RunResult r = run("score --input /nonexistent/data.csv --output -");
  CHECK(r.exitCode == 2);
  CHECK(r.err.find("no such file") != std::string::npos);
}

TEST_CASE("score writes the requested format and reports rejected rows") {
  const fs::path input = writeCsv("scores.csv",
                                  "good,3,3,3,3,3,3,3,3,3,3,3,3,3,3\n"
                                  "bad,9,3,3,3,3,3,3,3,3,3,3,3,3,3\n");
  const fs::path output = tmpDir() / "scores_out.csv";
  const RunResult r =
      run("score --input " + input.string() + " --output " + output.string() + " --format csv");
  CHECK(r.exitCode == 0);
  CHECK(r.err.find("out of range") != std::string::npos);
  const std::string csv = slurp(output);
  CHECK(csv.find("good,") != std::string::npos);
  CHECK(csv.find("3.000000") != std::string::npos);
  CHECK(csv.find("bad,") == std::string::npos);
}

TEST_CASE("strict scoring aborts on the bad row") {
  const fs::path input = writeCsv("strict.csv", "bad,9,3,3,3,3,3,3,3,3,3,3,3,3,3\n");
  const RunResult r =
      run("score --strict --input " + input.string() + " --output - --format csv");
  CHECK(r.exitCode == 2);
}

TEST_CASE("explain shows the neutral rules at full strength for an all-3 response") {
  const RunResult r = run("explain --response 3,3,3,3,3,3,3,3,3,3,3,3,3,3");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("overall_success: 3") != std::string::npos);
  CHECK(r.out.find("[1] IF") != std::string::npos);
  CHECK(r.out.find("neutral") != std::string::npos);
  CHECK(r.out.find("baseline_mean: 3") != std::string::npos);
}

TEST_CASE("explain rejects a short response vector") {
  const RunResult r = run("explain --response 1,2,3");
  CHECK(r.exitCode == 2);
  CHECK(r.err.find("14") != std::string::npos);
}

TEST_CASE("plot-data writes the variable and worked-example files") {
  const fs::path dir = tmpDir() / "plots";
  const RunResult r = run("plot-data --out " + dir.string());
  CHECK(r.exitCode == 0);
  int count = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    (void)entry;
    ++count;
  }
  CHECK(count == 22);
  CHECK(fs::exists(dir / "item_09.csv"));
  CHECK(fs::exists(dir / "stakeholder_satisfaction.csv"));
  CHECK(fs::exists(dir / "worked_example_overall.csv"));
}

TEST_CASE("plot-data works under the seven-point profile") {
  const fs::path dir = tmpDir() / "plots7";
  const RunResult r = run("plot-data --scale seven_point --out " + dir.string());
  CHECK(r.exitCode == 0);
  std::ifstream in(dir / "item_01.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,failure,neutral,success");
  std::ifstream out(dir / "overall_success.csv");
  std::getline(out, header);
  CHECK(std::count(header.begin(), header.end(), ',') == 7);  // x + 7 levels
}

TEST_CASE("rules generate emits parseable files that rules check accepts") {
  const fs::path dir = tmpDir() / "rules";
  const RunResult gen = run("rules generate --out " + dir.string());
  CHECK(gen.exitCode == 0);
  CHECK(fs::exists(dir / "project_impact_success.rules"));
  CHECK(fs::exists(dir / "top.rules"));

  const RunResult check =
      run("rules check --fis top " + (dir / "top.rules").string());
  CHECK(check.exitCode == 0);
  CHECK(check.out.find("ok: 27 rules") != std::string::npos);

  const RunResult single = run("rules generate --fis stakeholder_satisfaction");
  CHECK(single.exitCode == 0);
  CHECK(std::count(single.out.begin(), single.out.end(), '\n') == 81);
}

TEST_CASE("rules check reports positioned diagnostics and config exit code") {
  const fs::path bad = tmpDir() / "bad.rules";
  {
    std::ofstream out(bad);
    out << "IF project_impact_success BE success THEN overall_success IS high\n";
  }
  const RunResult r = run("rules check --fis top " + bad.string());
  CHECK(r.exitCode == 3);
  CHECK(r.err.find("line 1:27") != std::string::npos);
  CHECK(r.err.find("BE") != std::string::npos);
}

TEST_CASE("a broken config file is a config error") {
  const fs::path cfg = tmpDir() / "broken.cfg";
  {
    std::ofstream out(cfg);
    out << "scale = six_point\n";
  }
  const RunResult r = run("validate --config " + cfg.string());
  CHECK(r.exitCode == 3);
  CHECK(r.err.find("six_point") != std::string::npos);
}

TEST_CASE("a config written by the library loads back through the CLI") {
  const fs::path cfg = tmpDir() / "default.cfg";
  {
    const RunResult gen = run("rules generate --fis top");
    REQUIRE(gen.exitCode == 0);
    std::ofstream out(cfg);
    out << "scale = five_point\n\n"
        << "[dimension project_management_success]\nitems = 1, 2, 3, 4, 5\n\n"
        << "[dimension project_impact_success]\nitems = 6, 7, 8, 9, 10\n\n"
        << "[dimension stakeholder_satisfaction]\nitems = 11, 12, 13, 14\n\n"
        << "[top]\nrules = inline\n\n"
        << "[rules top]\n"
        << gen.out;
  }
  const RunResult r = run("validate --config " + cfg.string());
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("rules: 243+243+81+27") != std::string::npos);
}

TEST_CASE("unknown flags are usage errors") {
  const RunResult r = run("score --nope");
  CHECK(r.exitCode == 1);
}
