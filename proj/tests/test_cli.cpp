// Drives the installed command-line binary through a pipe and checks the
// wire-level contracts: exact JSON bytes, exit codes, determinism, CSV
// shape, and cache behaviour.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string g_binary;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int rc = pclose(pipe);
  r.status = WEXITSTATUS(rc);
  return r;
}

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
  if (!ok) ++g_failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-binary>\n";
    return 2;
  }
  g_binary = argv[1];

  {
    RunResult r = run("compute --family pruned-simple --g 1 --mu 2");
    expect(r.status == 0 && r.out == "{\"value\":\"1/6\",\"m\":\"3\",\"K\":\"1\"}\n",
           "compute pruned-simple emits the documented record");
  }
  {
    RunResult r = run("intersect --g 2 --d 4");
    expect(r.status == 0 &&
               r.out == "{\"g\":2,\"d\":[4],\"lambda\":0,\"value\":\"1/1152\"}\n",
           "intersect emits the documented record");
  }
  {
    RunResult a = run("poly --family pruned-simple --g 1 --n 2");
    RunResult b = run("poly --family pruned-simple --g 1 --n 2");
    expect(a.status == 0 && a.out == b.out && !a.out.empty(),
           "identical requests produce byte-identical output");
  }
  {
    RunResult r = run("compute --family cycle --g 0 --mu 3,2,2 --format csv");
    expect(r.status == 0 && r.out == "mu1,mu2,mu3,value\n3,2,2,1\n",
           "csv mode flattens the profile into columns");
  }
  {
    RunResult r = run("compute --family gw --g 0 --mu 1,1,2,2");
    expect(r.status == 0 && r.out == "{\"value\":\"2\"}\n",
           "gw table evaluation");
  }
  {
    RunResult r = run("compute --family belyi --g 1 --mu 4");
    expect(r.status == 0 &&
               r.out ==
                   "{\"value\":\"1/4\",\"value_mu_weighted\":\"1\"}\n",
           "belyi output exposes both normalisations");
  }
  {
    RunResult r = run("compute --family simple --g 0 --mu 4,3 --budget 100");
    expect(r.status == 2, "budget refusal exits with status 2");
  }
  {
    RunResult r = run("compute --family pruned-simple --g 1 --mu 0");
    expect(r.status == 1, "malformed profile exits with status 1");
  }
  {
    RunResult r = run("compute --family gw --g 3 --mu 1");
    expect(r.status == 1, "unsupported table request exits with status 1");
  }
  {
    RunResult r = run("transform --family simple --direction pruned-to-full "
                      "--g 0 --mu 2,1,1");
    expect(r.status == 0 && r.out == "{\"value\":\"4\"}\n",
           "transform emits the transported value");
  }
  {
    namespace fs = std::filesystem;
    fs::path cache = fs::temp_directory_path() / "hurwitz-cli-cache.jsonl";
    fs::remove(cache);
    RunResult first = run("compute --family pruned-simple --g 2 --mu 2 --cache " +
                          cache.string());
    bool created = fs::exists(cache);
    RunResult second = run("compute --family pruned-simple --g 2 --mu 2 "
                           "--verify-cache --cache " +
                           cache.string());
    expect(first.status == 0 && created && second.status == 0 &&
               first.out == second.out,
           "cache file round-trips through --cache/--verify-cache");
    fs::remove(cache);
  }
  {
    RunResult r = run("table --which q");
    expect(r.status == 0, "q reference table matches recomputation");
  }
  {
    RunResult r = run("verify --suite q-apparatus");
    expect(r.status == 0 && r.out.find("[PASS]") != std::string::npos,
           "verify subcommand reports suite results");
  }
  {
    RunResult r = run("verify --suite no-such-suite");
    expect(r.status == 1, "unknown suite exits with status 1");
  }

  std::cout << (g_failures == 0 ? "cli: all checks passed"
                                : "cli: FAILURES present")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
