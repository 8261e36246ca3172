#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SUPERLOOP_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "superloop-cli-test";
    fs::create_directories(path);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("builders round-trip through verify with exit 0") {
  TempDir tmp;
  const std::string ns = tmp.file("ns.json");
  auto r = run_cli("builders --name ns --out " + ns);
  CHECK(r.exit_code == 0);

  r = run_cli("verify --datum " + ns);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"ok\": true") != std::string::npos);

  const std::string tp = tmp.file("tp.json");
  r = run_cli("builders --name trunc-poly --n 1 --f 1,1 --out " + tp);
  CHECK(r.exit_code == 0);
  CHECK(run_cli("verify --datum " + tp).exit_code == 0);

  const std::string ideal = tmp.file("ideal.json");
  r = run_cli("builders --name ideal --base " + ns + " --out " + ideal);
  CHECK(r.exit_code == 0);
  CHECK(run_cli("verify --datum " + ideal).exit_code == 0);
}

TEST_CASE("rerun determinism: byte-identical outputs") {
  TempDir tmp;
  const std::string ns = tmp.file("ns2.json");
  run_cli("builders --name ns --out " + ns);

  const std::string args =
      "character --datum " + ns + " --ell 2 --max-degree 5";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  const std::string out1 = tmp.file("c1.json");
  const std::string out2 = tmp.file("c2.json");
  CHECK(run_cli(args + " --out " + out1).exit_code == 0);
  CHECK(run_cli(args + " --out " + out2 + " --jobs 3").exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("character table matches the counting sequence") {
  TempDir tmp;
  const std::string ns = tmp.file("ns3.json");
  run_cli("builders --name ns --out " + ns);
  const RunResult r = run_cli("character --datum " + ns +
                              " --ell 2 --max-degree 5 --format csv");
  CHECK(r.exit_code == 0);
  const std::string want =
      "degree,dim,dim_radical,dim_simple\n"
      "0,1,0,1\n"
      "1/2,0,0,0\n"
      "1,0,0,0\n"
      "3/2,1,0,1\n"
      "2,1,0,1\n"
      "5/2,1,0,1\n"
      "3,1,0,1\n"
      "7/2,2,0,2\n"
      "4,3,0,3\n"
      "9/2,3,0,3\n"
      "5,3,0,3\n";
  CHECK(r.output == want);
}

TEST_CASE("jacobi subcommand flags broken data with exit 1") {
  TempDir tmp;
  const std::string ns = tmp.file("ns4.json");
  run_cli("builders --name ns --out " + ns);

  // corrupt the odd form
  std::string text = slurp(ns);
  const auto pos = text.find("2/3");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 3, "1");
  const std::string bad = tmp.file("bad.json");
  std::ofstream(bad) << text;

  CHECK(run_cli("jacobi --datum " + ns + " --window 4").exit_code == 0);
  const RunResult r = run_cli("jacobi --datum " + bad + " --window 4");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("witnesses") != std::string::npos);
  CHECK(run_cli("verify --datum " + bad).exit_code == 1);
}

TEST_CASE("malformed input exits 2 with a structured error") {
  TempDir tmp;
  const std::string bad = tmp.file("malformed.json");
  std::ofstream(bad) << "{ not json";
  RunResult r = run_cli("verify --datum " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("PARSE_ERROR") != std::string::npos);

  r = run_cli("verify --datum " + tmp.file("missing.json"));
  CHECK(r.exit_code == 2);

  const std::string ns = tmp.file("ns5.json");
  run_cli("builders --name ns --out " + ns);
  r = run_cli("gram --datum " + ns + " --ell nonsense --degree 2");
  CHECK(r.exit_code == 2);
}

TEST_CASE("gram, radical, scan and identities subcommands") {
  TempDir tmp;
  const std::string ns = tmp.file("ns6.json");
  run_cli("builders --name ns --out " + ns);

  RunResult r = run_cli("gram --datum " + ns +
                        " --ell 2 --max-degree 2 --degree 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1\n");  // ell/2 at ell = 2

  r = run_cli("radical --datum " + ns + " --ell 0 --max-degree 2 --degree 3/2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"dim\": 1") != std::string::npos);

  r = run_cli("scan --datum " + ns +
              " --max-degree 2 --degree 2 --ells 0,1,2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "ell,rank\n0,0\n1,1\n2,1\n");

  r = run_cli("build --datum " + ns + " --ell 1 --max-degree 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "degree,dim\n0,1\n1/2,0\n1,0\n3/2,1\n2,1\n");

  r = run_cli("identities --datum " + ns + " --ell 3/2 --max-degree 9");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"ok\": true") != std::string::npos);
}
