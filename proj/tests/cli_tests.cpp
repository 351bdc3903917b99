// End-to-end checks of the command-line tool.  Run as: cli_tests <cli-path>.

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(1);
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-cli>\n";
    return 1;
  }
  std::string cli = argv[1];

  {
    RunResult r = run(cli + " meet --delta ubndd --left 2-3,2-4,2-5,3-4 "
                            "--right 1-2,1-4,1-5,2-4,2-5,3-4,3-5,4-5");
    expect(r.exit_code == 0, "meet exit code");
    expect(r.out == "2-4,3-4\n", "meet prints 2-4,3-4 (got '" + r.out + "')");
  }
  {
    RunResult r = run(cli + " join --delta nbun --left 2-4,3-4 --right 1-2,3-4");
    expect(r.exit_code == 0, "join exit code");
    expect(r.out == "1-2,1-4,2-4,3-4\n", "join output (got '" + r.out + "')");
  }
  {
    RunResult r1 = run(cli + " enumerate --delta nbn --format json");
    RunResult r2 = run(cli + " enumerate --delta nbn --format json");
    expect(r1.exit_code == 0, "enumerate exit code");
    expect(r1.out == r2.out, "enumerate output is byte-reproducible");
    expect(r1.out.find("\"nodes\"") != std::string::npos, "enumerate json has nodes");
    expect(r1.out.find("\"normalized\": false") != std::string::npos,
           "enumerate json reports normalization");
  }
  {
    RunResult r = run(cli + " enumerate --delta nxun");
    expect(r.exit_code == 2, "invalid letter gives exit 2");
  }
  {
    RunResult r = run(cli + " enumerate --delta nnnnnnnnnnnn");
    expect(r.exit_code == 3, "size guard gives exit 3 (got " + std::to_string(r.exit_code) + ")");
  }
  {
    RunResult r = run(cli + " verify --delta nbun");
    expect(r.exit_code == 0, "verify passes on nbun");
    expect(r.out.find("\"pass\": true") != std::string::npos, "verify report says pass");
  }
  {
    RunResult r = run(cli + " verify --delta all --n 3");
    expect(r.exit_code == 0, "verify sweep at n=3 passes");
  }
  {
    RunResult r = run(cli + " verify --delta all --n 4");
    expect(r.exit_code == 0, "verify sweep over all 16 interior decorations at n=4 passes");
  }
  {
    RunResult r = run(cli + " verify --delta all --n 5");
    expect(r.exit_code == 0, "verify sweep over all 64 interior decorations at n=5 passes");
  }
  {
    RunResult r = run(cli + " enumerate --delta ndn --format dot");
    expect(r.exit_code == 0 && r.out.find("rankdir=BT") != std::string::npos,
           "dot output draws bottom-to-top");
  }
  {
    RunResult r = run(cli + " geometry --delta ndddn --format off");
    expect(r.exit_code == 2, "off export rejects meshes above three dimensions");
  }
  {
    RunResult r = run(cli + " meet --delta nnn --left 1-3 --right 1-2");
    expect(r.exit_code == 2, "meet rejects an invalid inversion set");
  }
  {
    RunResult r = run(cli + " enumerate --delta n --format json");
    expect(r.exit_code == 0, "single-vertex lattice enumerates");
    RunResult r2 = run(cli + " corners --delta nn --format csv");
    expect(r2.exit_code == 0 && r2.out == "r1,id\n0,0\n1,1\n",
           "two-vertex corner table (got '" + r2.out + "')");
  }
  {
    std::string tmp = "cli_test_lattice.json";
    RunResult saved = run(cli + " enumerate --delta nbn --format json -o " + tmp);
    expect(saved.exit_code == 0, "enumerate to file");
    RunResult direct = run(cli + " geometry --delta nbn --format json");
    RunResult from_file = run(cli + " geometry --from-lattice " + tmp + " --format json");
    expect(direct.exit_code == 0 && from_file.exit_code == 0, "geometry exit codes");
    expect(direct.out == from_file.out, "geometry --from-lattice reproduces identical bytes");
    std::remove(tmp.c_str());
  }
  {
    RunResult r = run(cli + " geometry --delta nnnn --format off");
    expect(r.exit_code == 0, "off export exit code");
    expect(r.out.rfind("OFF\n24 14 0\n", 0) == 0,
           "off header for nnnn (got '" + r.out.substr(0, 16) + "')");
  }
  {
    RunResult r = run(cli + " vectors --delta nbn");
    expect(r.exit_code == 0, "vectors exit code");
    expect(r.out.rfind("id,b1,b2,c1,c2,a1,a2,a3\n", 0) == 0, "vectors csv header");
  }
  {
    RunResult r = run(cli + " corners --delta nbun --format csv");
    expect(r.exit_code == 0, "corners exit code");
    expect(r.out.rfind("r1,r2,r3,id\n", 0) == 0, "corners csv header");
    expect(std::count(r.out.begin(), r.out.end(), '\n') == 9, "corners csv has 8 rows");
  }
  {
    // normalization note goes to stderr, machine output carries the flag
    RunResult r = run(cli + " enumerate --delta ubndd --format json");
    expect(r.exit_code == 0, "normalized enumerate exit code");
    expect(r.out.find("\"delta\": \"nbndn\"") != std::string::npos, "delta normalized in json");
    expect(r.out.find("\"normalized\": true") != std::string::npos, "normalized flag set");
  }

  if (failures == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cerr << failures << " cli test(s) failed\n";
  return 1;
}
