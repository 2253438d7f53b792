#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "legtorus/search.hpp"
#include "legtorus/textio.hpp"

using namespace legtorus;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LEGTORUS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("legtorus_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli decisions") {
  CHECK(run("isotopic --ambient s1s2 --class 1,2,-1,0 --class -1,2,-1,0").code == 0);
  CHECK(run("isotopic --ambient s1s2 --class -1,2,0,-1 --class -1,2,0,1").code == 1);
  CHECK(run("topiso --ambient s1s2 --type 1,4 --type 3,4").code == 1);
  CHECK(run("topiso --ambient s1s2 --type 2,3 --type 4,3").code == 0);
  CHECK(run("isotopic --ambient s1s2 --class 1,2,-1,0 --class -1,2,-1,0 --json").out ==
        "{\"result\":true}\n");
}

TEST_CASE("cli errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("topiso --ambient s1s2 --type 1,0 --type 1,2").code == 2);
  CHECK(run("isotopic --ambient jet --class 2,3,5,0 --class 2,3,4,0").code == 2);
  CHECK(run("topiso --ambient nowhere --type 1,2 --type 1,2").code == 2);
  CHECK(run("invariants /nonexistent.lfront").code == 2);
  CHECK(run("generate --kind braid --p 2 --q 4").code == 2);

  const std::string cmd = std::string(LEGTORUS_CLI_PATH) +
                          " topiso --ambient s1s2 --type 1,0 --type 1,2 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string text;
  std::array<char, 512> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
  pclose(pipe);
  CHECK(text.find("out of scope (Eliashberg–Fraser)") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1);
}

TEST_CASE("cli fronts agree with the library") {
  TempDir tmp;
  const std::string braid = tmp / "braid23.lfront";
  REQUIRE(run("generate --kind braid --p 2 --q 3 -o " + braid).code == 0);
  CHECK(parse_lfront(slurp(braid)) == positive_braid(2, 3));

  const Run inv = run("invariants " + braid + " --json");
  CHECK(inv.code == 0);
  CHECK(inv.out == invariants_json(front_invariants(positive_braid(2, 3)),
                                   to_class(positive_braid(2, 3))) + "\n");
  CHECK(inv.out.find("\"tb\":4") != std::string::npos);
  CHECK(inv.out.find("\"winding\":3") != std::string::npos);
  CHECK(run("--json invariants " + braid).out == inv.out);

  const std::string svg = tmp / "braid.svg";
  CHECK(run("invariants " + braid + " --svg " + svg).code == 0);
  CHECK(slurp(svg) == render_front_svg(positive_braid(2, 3)));

  const std::string peak = tmp / "peak.lfront";
  REQUIRE(run("generate --kind negpeak --p -1 --q 2 --variant up -o " + peak).code == 0);
  CHECK(parse_lfront(slurp(peak)) == negative_peak(-1, 2, PeakVariant::Up));

  const std::string stab = tmp / "stab.lfront";
  REQUIRE(run("stabilize " + peak + " --sign + -o " + stab).code == 0);
  CHECK(parse_lfront(slurp(stab)) ==
        stabilize_front(negative_peak(-1, 2, PeakVariant::Up), Sign::Plus, 1, 0));
  CHECK(run("stabilize " + peak + " --sign x").code == 2);

  const std::string moved = tmp / "moved.lfront";
  REQUIRE(run("move " + braid + " --apply rotl@0 -o " + moved).code == 0);
  CHECK(parse_lfront(slurp(moved)) == apply_move(positive_braid(2, 3), {Rule::RotL, 0, 0}));
  CHECK(run("move " + braid + " --apply r1a-@0").code == 2);
  const Run listed = run("move " + braid + " --list");
  CHECK(listed.code == 0);
  CHECK(std::count(listed.out.begin(), listed.out.end(), '\n') ==
        static_cast<long>(legal_moves(positive_braid(2, 3)).size()));

  CHECK(run("certify " + braid + " " + moved).code == 0);
  CHECK(run("certify " + braid + " " + peak).code == 1);
  const std::string zero = tmp / "zero.lfront";
  REQUIRE(run("generate --kind zero -o " + zero).code == 0);
  const std::string z1 = tmp / "z1.lfront";
  const std::string z2 = tmp / "z2.lfront";
  std::ofstream(z1) << print_lfront(stabilize_front(
      apply_move(zero_section(), {Rule::R1aAdd, 0, 1}), Sign::Plus, 1, 0));
  std::ofstream(z2) << print_lfront(stabilize_front(
      apply_move(zero_section(), {Rule::R1aAdd, 0, 1}), Sign::Plus, 3, 1));
  CHECK(run("certify " + z1 + " " + z2 + " --budget 10").code == 3);
  const Run cert = run("certify " + z1 + " " + z2 + " --json");
  CHECK(cert.code == 0);
  CHECK(cert.out.find("\"verdict\":\"equivalent\"") != std::string::npos);

  const std::string bad = tmp / "bad.lfront";
  std::ofstream(bad) << "LFRONT 1\nbase 2\nx 5\n";
  CHECK(run("invariants " + bad).code == 2);
}

TEST_CASE("cli atlases") {
  const Run a = run("atlas --ambient jet --type -1,2 --depth 2 --json");
  CHECK(a.code == 0);
  const TorusKnotType t{Ambient::Jet, -1, 2};
  CHECK(a.out == mountain_json(t, mountain_range(t, 2, natural_window(t, 2))) + "\n");
  const Run p = run("peaks --ambient s1s2 --type 1,2 --window 9 --json");
  CHECK(p.code == 0);
  CHECK(p.out == peaks_json({Ambient::S1xS2, 1, 2}, 9) + "\n");
  CHECK(run("atlas --ambient jet --type 2,3 --depth 20000").code == 2);
  CHECK(run("peaks --ambient jet --type -5,2").out == "jet:-5,2\nlevel -10\nrots -5 -3 -1 1 3 5\n");
}
