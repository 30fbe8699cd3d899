#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "openbook/report.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_raw(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

// stdout only
RunResult run(const std::string& args) {
  return run_raw(std::string("'") + OPENBOOK_CLI_PATH + "' " + args + " 2>/dev/null");
}

// stderr only
RunResult run_err(const std::string& args) {
  return run_raw(std::string("'") + OPENBOOK_CLI_PATH + "' " + args +
                 " 2>&1 1>/dev/null");
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

bool has_line(const std::string& out, const std::string& line) {
  return out.rfind(line + "\n", 0) == 0 || contains(out, "\n" + line + "\n");
}

std::string fixture(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("brieskorn pipeline text output", "[cli]") {
  RunResult r = run("brieskorn 2 3 --cover 7");
  REQUIRE(r.status == 0);
  REQUIRE(has_line(r.out, "exponents = 2 3"));
  REQUIRE(has_line(r.out, "n = 1"));
  REQUIRE(has_line(r.out, "mu = 2"));
  REQUIRE(has_line(r.out, "fibered = true"));
  REQUIRE(has_line(r.out, "spectrum = 1/6, 5/6"));
  REQUIRE(has_line(r.out, "d = 6"));
  REQUIRE(has_line(r.out, "sigma_7 = -8"));
  REQUIRE(has_line(r.out, "sigma_7 lattice oracle = -8"));
  REQUIRE(has_line(r.out, "H_1(M_7) = 0"));
  REQUIRE(contains(r.out, "periodicity:"));
  REQUIRE(has_line(r.out, "  parity_case = n_eq_1_excluded"));
}

TEST_CASE("periodicity fields for the quadric page", "[cli]") {
  RunResult r = run("brieskorn 2 2 2 --periodicity");
  REQUIRE(r.status == 0);
  REQUIRE(has_line(r.out, "d = 2"));
  REQUIRE(has_line(r.out, "  parity_case = n_eq_2_or_6"));
  REQUIRE(has_line(r.out, "  homeo_period = 4"));
  REQUIRE(has_line(r.out, "  diffeo_period = 8"));
  REQUIRE(has_line(r.out, "  sigma_d = absent"));

  RunResult m = run("brieskorn 2 2 2 --periodicity --format machine");
  REQUIRE(m.status == 0);
  for (const std::string field :
       {"n", "mu", "d", "parity_case", "homeo_period", "diffeo_period", "sigma_d",
        "sphere_offset", "notes"})
    REQUIRE(contains(m.out, "  " + field + " = "));
}

TEST_CASE("absent certificate is reported as absent", "[cli]") {
  RunResult r = run("brieskorn 3 3");
  REQUIRE(r.status == 0);
  REQUIRE(has_line(r.out, "d = absent"));
  REQUIRE(contains(r.out, "n = 1 is excluded"));

  RunResult q = run("brieskorn 2 2 2 2");
  REQUIRE(q.status == 0);
  REQUIRE(has_line(q.out, "d = absent"));
  REQUIRE(contains(q.out, "no periodicity certificate"));
}

TEST_CASE("sixth cover of the trefoil via both commands", "[cli]") {
  RunResult b = run("brieskorn 2 3 --cover 6");
  REQUIRE(b.status == 0);
  REQUIRE(has_line(b.out, "sigma_6 = -8"));
  REQUIRE(has_line(b.out, "H_1(M_6) = Z^2"));

  RunResult s = run("seifert " + fixture("trefoil.sf") + " --cover 6");
  REQUIRE(s.status == 0);
  REQUIRE(has_line(s.out, "name = trefoil"));
  REQUIRE(has_line(s.out, "sigma_6 = -8"));
  REQUIRE(has_line(s.out, "H_1(M_6) = Z^2"));
  REQUIRE_FALSE(contains(s.out, "lattice oracle"));
}

TEST_CASE("triples carry the parity disclaimer", "[cli]") {
  RunResult r = run("brieskorn 2 3 5 --cover 4");
  REQUIRE(r.status == 0);
  REQUIRE(has_line(r.out, "sigma_4 = 0 (meaningful only when n is odd)"));

  RunResult m = run("brieskorn 2 3 5 --cover 4 --format machine");
  REQUIRE(has_line(m.out, "sigma_4_meaningful = false"));
}

TEST_CASE("empty page parses and reports mu = 0", "[cli]") {
  RunResult r = run("seifert " + fixture("empty.sf"));
  REQUIRE(r.status == 0);
  REQUIRE(has_line(r.out, "mu = 0"));
  REQUIRE(has_line(r.out, "n = 3"));
  REQUIRE(has_line(r.out, "d = 1"));
}

TEST_CASE("nonfibered input exits 1 with a partial report", "[cli]") {
  RunResult r = run("seifert " + fixture("nonfibered.sf"));
  REQUIRE(r.status == 1);
  REQUIRE(has_line(r.out, "fibered = false"));
  REQUIRE(has_line(r.out, "intersection_form = [[4, 0], [0, 2]]"));
  REQUIRE_FALSE(contains(r.out, "periodicity"));

  RunResult e = run_err("seifert " + fixture("nonfibered.sf"));
  REQUIRE(contains(e.out, "not fibered"));
}

TEST_CASE("parse failures carry line and column", "[cli]") {
  RunResult e = run_err("seifert " + fixture("bad.sf"));
  REQUIRE(e.status == 1);
  REQUIRE(contains(e.out, "line 2, column 3"));

  RunResult missing = run_err("seifert /no/such/file.sf");
  REQUIRE(missing.status == 1);
  REQUIRE(contains(missing.out, "cannot open"));
}

TEST_CASE("flag validation failures exit nonzero", "[cli]") {
  RunResult e = run_err("brieskorn 2 3 --cover 0");
  REQUIRE(e.status == 1);
  REQUIRE(contains(e.out, "cover index must be >= 1"));

  REQUIRE(run_err("brieskorn 2 3 --format yaml").status == 1);
  REQUIRE(run_err("brieskorn").status == 1);
  REQUIRE(run_err("").status == 1);
  REQUIRE(run_err("brieskorn 2 1").status == 1);
}

TEST_CASE("help exits zero", "[cli]") {
  REQUIRE(run("--help").status == 0);
  REQUIRE(run("brieskorn --help").status == 0);
}

TEST_CASE("groups command pinned outputs", "[cli]") {
  RunResult n3 = run("groups --n 3");
  REQUIRE(n3.status == 0);
  REQUIRE(has_line(n3.out, "S pi_n(SO(n)) = Z"));
  REQUIRE(has_line(n3.out, "Hom part = Z"));
  REQUIRE(has_line(n3.out, "bP_8 order = 28"));
  REQUIRE(has_line(n3.out, "kernel = Theta_7 (Z_28)"));
  REQUIRE(has_line(n3.out, "split = yes"));
  REQUIRE(has_line(n3.out, "K(V) = Z (+) Z_28"));

  RunResult n2 = run("groups --n 2 --mu 5");
  REQUIRE(has_line(n2.out, "K(V) = 0"));

  RunResult n5 = run("groups --n 5");
  REQUIRE(has_line(n5.out, "Hom part = 0"));
  REQUIRE(has_line(n5.out, "K(V) = Theta_11"));

  RunResult n10 = run("groups --n 10 --mu 2");
  REQUIRE(has_line(n10.out, "K(V) = extension of Z_2 (+) Z_2 by Theta_21"));

  RunResult machine = run("groups --n 3 --format machine");
  REQUIRE(has_line(machine.out, "K_V = Z (+) Z_28"));
  REQUIRE(has_line(machine.out, "bp_order = 28"));
  REQUIRE(has_line(machine.out, "split = yes"));
}

TEST_CASE("trefoil command text output", "[cli]") {
  RunResult r = run("trefoil");
  REQUIRE(r.status == 0);
  REQUIRE(has_line(r.out, "Seifert matrix = [[-1, 1], [0, -1]]"));
  REQUIRE(has_line(r.out, "d = 6"));
  REQUIRE(has_line(r.out,
                   "sigma_N7 = -8 (Tristram-Levine sum and lattice count agree)"));
  REQUIRE(has_line(r.out, "Rokhlin: fails (sigma = -8, not ≡ 0 mod 16)"));
  REQUIRE(has_line(r.out, "H_1(M_6) = Z^2  [ab pi_1(M_6) = Z^2]"));
  REQUIRE(has_line(r.out, "triangle group (2,3,5) = finite"));
  REQUIRE(has_line(r.out, "triangle group (2,3,7) = infinite"));
  REQUIRE(has_line(r.out, "conclusion: no topological periodicity in dimension 3"));
}

TEST_CASE("machine output round-trips byte for byte", "[cli]") {
  const std::vector<std::string> cases = {
      "trefoil --format machine", "brieskorn 2 2 2 3 --cover 6 --format machine",
      "groups --n 4 --format machine",
      "seifert " + fixture("trefoil.sf") + " --cover 6 --format machine"};
  for (const std::string& args : cases) {
    RunResult r = run(args);
    REQUIRE(r.status == 0);
    REQUIRE_FALSE(r.out.empty());
    REQUIRE(openbook::ReportTree::parse(r.out).serialize() == r.out);
  }
}

TEST_CASE("machine trefoil report is internally consistent", "[cli]") {
  RunResult r = run("trefoil --format machine");
  REQUIRE(r.status == 0);
  REQUIRE(has_line(r.out, "rokhlin_multiple_of_16 = false"));
  REQUIRE(has_line(r.out, "triangle_2_3_6 = infinite"));
  REQUIRE(has_line(r.out, "triangle_2_3_7 = infinite"));
  REQUIRE(has_line(r.out, "triangle_2_3_5 = finite"));
  REQUIRE(has_line(r.out, "H1_M6 = Z^2"));
  REQUIRE(has_line(r.out, "ab_pi1_M6 = Z^2"));
  for (int k = 1; k <= 8; ++k) {
    std::string h = "H1_M" + std::to_string(k) + " = ";
    std::string a = "ab_pi1_M" + std::to_string(k) + " = ";
    std::size_t hp = r.out.find(h), ap = r.out.find(a);
    REQUIRE(hp != std::string::npos);
    REQUIRE(ap != std::string::npos);
    std::string hv = r.out.substr(hp + h.size(), r.out.find('\n', hp) - hp - h.size());
    std::string av = r.out.substr(ap + a.size(), r.out.find('\n', ap) - ap - a.size());
    REQUIRE(hv == av);
  }
}

TEST_CASE("output is deterministic across runs", "[cli]") {
  const std::string args = "brieskorn 2 2 2 3 --cover 6 --periodicity";
  RunResult a = run(args);
  RunResult b = run(args);
  REQUIRE(a.status == 0);
  REQUIRE(a.out == b.out);
  REQUIRE_FALSE(a.out.empty());
}
