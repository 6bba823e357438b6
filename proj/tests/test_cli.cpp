#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "printed_tables.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;
using Catch::Matchers::WithinAbs;

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path work_dir() {
  fs::path d = MRBOUND_WORK_DIR;
  fs::create_directories(d);
  return d;
}

Run run(const std::string& args) {
  const fs::path err_file = work_dir() / "stderr.txt";
  const std::string cmd = std::string("\"") + MRBOUND_CLI + "\" " + args + " 2>\"" + err_file.string() + "\"";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    r.out.append(buf, n);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_file);
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) {
    out.push_back(l);
  }
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, ',');) {
    out.push_back(f);
  }
  if (!s.empty() && s.back() == ',') {
    out.emplace_back();
  }
  return out;
}

const std::string kEnergy2p = "energy --alpha 0.75 --A2b --invb 0.025 --state 2p";

}  // namespace

TEST_CASE("energy of a single state", "[cli]") {
  const Run r = run(kEnergy2p);
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "state,alpha,A,b,scheme,D0,D1,D2,epsilon,bound,minus_E,minus_E_hartree,A_c");
  const auto f = split(ls[1]);
  REQUIRE(f.size() == 13);
  CHECK(f[4] == "improved");
  CHECK(f[9] == "true");
  CHECK_THAT(std::stod(f[11]), WithinAbs(0.1205279, 5e-8));

  const Run usual = run("--scheme usual " + kEnergy2p);
  REQUIRE(usual.code == 0);
  CHECK_THAT(std::stod(split(lines(usual.out)[1])[11]), WithinAbs(0.1205793, 5e-8));

  const Run d0 = run("--d0 0.0833333333333 " + kEnergy2p);
  REQUIRE(d0.code == 0);
  CHECK(split(lines(d0.out)[1])[5] == "0.0833333333333");
}

TEST_CASE("energy in eV for a molecule", "[cli]") {
  const Run r = run(kEnergy2p + " --molecule HCl --eV");
  REQUIRE(r.code == 0);
  const auto f = split(lines(r.out)[1]);
  REQUIRE(f.size() == 15);
  CHECK(f[13] == "HCl");
  CHECK_THAT(std::stod(f[14]), WithinAbs(5.14064, 5e-6));
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run("--help").code == 0);
  CHECK(run("energy --alpha 0.75 --A2b --invb 0.025").code == 2);
  CHECK(run("energy --alpha 0.75 --b 40 --invb 0.025 --state 2p").code == 2);
  CHECK(run("energy --alpha 0.75 --A2b --invb 0.025 --state 2x").code == 2);
  CHECK(run("--scheme bogus " + kEnergy2p).code == 2);
  CHECK(run("table t9").code == 2);

  const Run unknown = run(kEnergy2p + " --molecule Foo");
  CHECK(unknown.code == 2);
  CHECK_THAT(unknown.err, ContainsSubstring("HCl"));

  const Run unbound = run("energy --alpha 0.75 --A 0.5 --b 1 --state 1s");
  CHECK(unbound.code == 3);
  CHECK_THAT(unbound.err, ContainsSubstring("not bound"));

  CHECK(run("--out /nonexistent-dir/x.csv " + kEnergy2p).code == 4);
  CHECK(run("--molecule-file /nonexistent molecules").code == 4);
}

TEST_CASE("table t1 is deterministic and matches the printed values", "[cli][printed]") {
  const Run a = run("table t1");
  const Run b = run("table t1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  const auto ls = lines(a.out);
  REQUIRE(ls.size() == 29);
  const auto header = split(ls[0]);
  int checked = 0;
  for (const auto& cell : printed::load_table1(MRBOUND_TEST_DATA_DIR)) {
    if (cell.column == "numerical" || !printed::typo_reason(cell).empty()) {
      continue;
    }
    const std::string col = (cell.alpha == 0.75 ? "a0.75_" : "a1.5_") +
                            std::string(cell.column == "present" ? "improved" : "usual");
    const auto ci = static_cast<std::size_t>(std::find(header.begin(), header.end(), col) - header.begin());
    REQUIRE(ci < header.size());
    for (std::size_t i = 1; i < ls.size(); ++i) {
      const auto f = split(ls[i]);
      if (f[0] == cell.state && std::stod(f[1]) == cell.inv_b) {
        CAPTURE(cell.state, cell.inv_b, col);
        CHECK_THAT(std::stod(f[ci]), WithinAbs(cell.value, 2e-7));
        ++checked;
      }
    }
  }
  CHECK(checked == 110);
}

TEST_CASE("molecule table and pretty output", "[cli]") {
  const Run r = run("table t2");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 30);
  CHECK_THAT(ls[0], StartsWith("state,inv_b,HCl_a0_1"));

  const Run p = run("--format pretty table t1 --no-usual");
  REQUIRE(p.code == 0);
  CHECK_THAT(p.out, ContainsSubstring("a0.75_improved"));
  CHECK_THAT(p.out, !ContainsSubstring("usual"));
  CHECK_THAT(p.out, !ContainsSubstring(","));
}

TEST_CASE("wave function sampling", "[cli]") {
  const Run r = run("wavefunction --alpha 0.75 --A2b --invb 0.025 --state 3p --points 512");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 515);
  CHECK(ls[0] == "r,u");
  CHECK(split(ls[1])[0] == "0");
  CHECK(std::stod(split(ls[1])[1]) == 0.0);
  CHECK_THAT(ls[513], StartsWith("# norm="));
  CHECK_THAT(std::stod(ls[513].substr(7)), WithinAbs(1.0, 1e-6));
  CHECK(ls[514] == "# nodes=1");
}

TEST_CASE("compare subcommand", "[cli]") {
  const Run r = run("compare --states 2p,3p");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "state,inv_b,alpha,analytic,numerical,abs_gap,gap_percent,status");
  CHECK(split(ls[1]).back() == "ok");
}

TEST_CASE("output file and molecule override", "[cli]") {
  const fs::path out = work_dir() / "energy.csv";
  fs::remove(out);
  const Run r = run("--out \"" + out.string() + "\" " + kEnergy2p);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out) == run(kEnergy2p).out);

  const fs::path mols = work_dir() / "mols.json";
  std::ofstream(mols) << R"([{"name": "XY", "reduced_mass_amu": 2.5}, {"name": "HCl", "reduced_mass_amu": 1.0}])";
  const Run listed = run("--molecule-file \"" + mols.string() + "\" molecules");
  REQUIRE(listed.code == 0);
  CHECK_THAT(listed.out, ContainsSubstring("XY,2.5"));
  CHECK_THAT(listed.out, ContainsSubstring("HCl,1\n"));
  CHECK_THAT(listed.out, ContainsSubstring("Ar2"));

  const fs::path bad = work_dir() / "bad.json";
  std::ofstream(bad) << "[{\"name\": 3}]";
  CHECK(run("--molecule-file \"" + bad.string() + "\" molecules").code == 4);
}
