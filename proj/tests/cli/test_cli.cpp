#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "incidence/elementary.hpp"
#include "incidence/lie_maps.hpp"
#include "incidence/poset_io.hpp"
#include "incidence/triple_io.hpp"
#include "incidence/workbench.hpp"

using namespace incidence;
namespace fs = std::filesystem;

namespace {

const std::string data = TEST_DATA_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args)
{
  args.insert(args.begin(), "workbench");
  std::ostringstream out, err;
  int code = run_workbench(args, out, err);
  return {code, out.str(), err.str()};
}

std::string path(const std::string &name) { return data + "/" + name; }

std::string slurp(const std::string &file)
{
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string &name)
{
  auto dir = fs::temp_directory_path() / "workbench_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path &file, const std::string &text) { std::ofstream(file) << text; }

/// Runs the real binary through the shell; returns its exit status.
int spawn(const std::string &args, std::string *out = nullptr)
{
  auto capture = scratch("spawn.out");
  std::string cmd = std::string(WORKBENCH_BIN) + " " + args + " > " + capture.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  if (out)
    *out = slurp(capture.string());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("report")
{
  auto r = run({"report", path("kite.poset")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "poset: kite.poset\n"
        "elements: 4\n"
        "field: Q\n"
        "maximal chains: 2\n"
        "  1 < 2 < 3\n"
        "  1 < 4\n"
        "cycles: 0\n"
        "radical filtration: dim J_1 = 4, dim J_2 = 1, dim J_3 = 0\n"
        "center of radical: e(1,3), e(1,4)\n"
        "self anti-isomorphism: no\n");

  auto point = run({"--machine", "report", path("point.poset")});
  CHECK(point.out.find("radical_dims=0\n") != std::string::npos);
  CHECK(point.out.find("center=\n") != std::string::npos);

  auto crown = run({"--machine", "report", path("crown.poset")});
  CHECK(crown.out.find("cycles=1\ncycle=1 < 3 > 2 < 4 > 1\n") != std::string::npos);
  CHECK(crown.out.find("anti_isomorphism=yes\n") != std::string::npos);

  auto machine = run({"--machine", "report", path("kite.poset")});
  CHECK(machine.out.find("radical_dims=4,1,0\n") != std::string::npos);
  CHECK(machine.out.find("center=e(1,3);e(1,4)\n") != std::string::npos);
  CHECK(machine.out.find("anti_isomorphism=no\n") != std::string::npos);
}

TEST_CASE("verify")
{
  auto both = run({"verify", path("kite.poset"), path("kite_phi.map"), "--lie", "--elementary"});
  CHECK(both.code == 0);
  CHECK(both.out == "lie: true\nelementary: true\n");

  auto proper = run({"--machine", "verify", path("kite.poset"), path("kite_phi.map"), "--proper"});
  CHECK(proper.code == 1);
  CHECK(proper.out == "proper=false\n");

  auto id = run({"--machine", "verify", path("kite.poset"), path("kite_identity.map"), "--lie", "--elementary",
                 "--proper"});
  CHECK(id.code == 0);
  CHECK(id.out == "lie=true\nelementary=true\nproper=true\n");
  CHECK(run({"verify", path("kite.poset"), path("kite_identity.map")}).out ==
        "lie: true\nelementary: true\nproper: true (automorphism, alpha = 0 0 0 0)\n");
}

TEST_CASE("verify agrees with the library")
{
  auto file = load_poset_file(path("kite.poset"));
  auto a = make_algebra(file.poset, file.field);
  auto phi = load_map_file(a, path("kite_phi.map"));
  auto r = run({"--machine", "verify", path("kite.poset"), path("kite_phi.map")});
  std::string expected = std::string("lie=") + (is_lie_automorphism(phi) ? "true" : "false") +
                         "\nelementary=" + (is_elementary(phi) ? "true" : "false") +
                         "\nproper=" + (is_proper(phi) ? "true" : "false") + "\n";
  CHECK(r.out == expected);
}

TEST_CASE("decompose")
{
  auto r = run({"decompose", path("kite.poset"), path("kite_phi.map")});
  CHECK(r.code == 0);
  CHECK(r.out.find("beta = e(1) + e(2) + e(3) + e(4)\n") != std::string::npos);
  CHECK(r.out.find(slurp(path("kite_phi.triple"))) != std::string::npos);

  // the report is itself a valid triple file
  auto out = scratch("decomposed.triple");
  write(out, r.out);
  auto built = run({"build-tau", path("kite.poset"), out.string()});
  CHECK(built.code == 0);
  CHECK(built.out == slurp(path("kite_phi.map")));
}

TEST_CASE("decompose recovers an inner factor")
{
  auto conj = run({"decompose", path("kite.poset"), path("kite_conj.map")});
  CHECK(conj.code == 0);
  CHECK(conj.out.find("beta = e(1) + e(1,2) + e(2) + e(3) + e(4)\n") != std::string::npos);
  CHECK(conj.out.find(slurp(path("kite_identity.triple"))) != std::string::npos);

  auto mixed = run({"decompose", path("kite.poset"), path("kite_conj_phi.map")});
  CHECK(mixed.code == 0);
  CHECK(mixed.out.find("beta = e(1) + e(1,2) + e(2) + e(3) + e(4)\n") != std::string::npos);
  CHECK(mixed.out.find(slurp(path("kite_phi.triple"))) != std::string::npos);

  auto zero = scratch("zero.map");
  write(zero, "e(1) -> 0\ne(1,2) -> 0\ne(1,3) -> 0\ne(1,4) -> 0\ne(2) -> 0\ne(2,3) -> 0\ne(3) -> 0\ne(4) -> 0\n");
  auto bad = run({"decompose", path("kite.poset"), zero.string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotLieAutomorphism") != std::string::npos);
}

TEST_CASE("build-tau")
{
  auto r = run({"build-tau", path("kite.poset"), path("kite_phi.triple")});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(path("kite_phi.map")));

  auto out = scratch("identity.map");
  auto id = run({"build-tau", path("kite.poset"), path("kite_identity.triple"), "-o", out.string()});
  CHECK(id.code == 0);
  CHECK(id.out.empty());
  CHECK(slurp(out.string()) == slurp(path("kite_identity.map")));

  auto flip = scratch("flip.map");
  auto f = run({"build-tau", path("chain4_f7.poset"), path("chain4_flip.triple"), "--complete-sigma", "-o",
                flip.string()});
  CHECK(f.code == 0);
  auto check = run({"verify", path("chain4_f7.poset"), flip.string(), "--lie"});
  CHECK(check.code == 0);
  CHECK(check.out == "lie: true\n");

  auto missing = run({"build-tau", path("chain4_f7.poset"), path("chain4_flip.triple")});
  CHECK(missing.code == 2);
}

TEST_CASE("build-tau failures")
{
  std::string theta = slurp(path("kite_phi.triple"));
  auto zero_trace = scratch("zero_trace.triple");
  write(zero_trace, theta.substr(0, theta.find("c =")) + "c = 1 -1 0 0\n");
  auto r = run({"build-tau", path("kite.poset"), zero_trace.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("ZeroTrace") != std::string::npos);

  auto garbage = scratch("garbage.triple");
  write(garbage, "theta e(1,2) => e(2,3)\n");
  CHECK(run({"build-tau", path("kite.poset"), garbage.string()}).code == 2);

  auto crown_bad = scratch("crown_bad.triple");
  write(crown_bad,
        "theta e(1,3) -> e(1,4)\ntheta e(1,4) -> e(1,3)\ntheta e(2,3) -> e(2,3)\ntheta e(2,4) -> e(2,4)\n"
        "sigma 1 3 = 1\nsigma 1 4 = 1\nsigma 2 3 = 1\nsigma 2 4 = 1\nc = 1 0 0 0\n");
  auto na = run({"build-tau", path("crown.poset"), crown_bad.string()});
  CHECK(na.code == 1);
  CHECK(na.err.find("NotAdmissible") != std::string::npos);
}

TEST_CASE("enumerate-theta")
{
  CHECK(run({"enumerate-theta", "--count-only", path("kite.poset")}).out == "candidates: 2\n");
  CHECK(run({"enumerate-theta", "--count-only", path("chain3.poset")}).out == "candidates: 2\n");
  CHECK(run({"enumerate-theta", "--count-only", path("crown.poset")}).out == "candidates: 8\n");
  CHECK(run({"--machine", "enumerate-theta", "--count-only", path("crown.poset")}).out == "candidates=8\n");

  auto listing = run({"enumerate-theta", path("kite.poset")});
  CHECK(listing.code == 0);
  CHECK(listing.out.find("# candidate 2\ntheta e(1,2) -> e(2,3)\n") != std::string::npos);

  auto big = scratch("chain5.poset");
  write(big, "field Q\nelements 1 2 3 4 5\ncover 1 2\ncover 2 3\ncover 3 4\ncover 4 5\n");
  auto too_large = run({"enumerate-theta", "--count-only", big.string()});
  CHECK(too_large.code == 1);
  CHECK(too_large.err.find("SearchSpaceTooLarge") != std::string::npos);
}

TEST_CASE("characteristic two warns")
{
  auto f2 = scratch("kite_f2.poset");
  write(f2, "field F2\nelements 1 2 3 4\ncover 1 2\ncover 2 3\ncover 1 4\n");
  auto r = run({"enumerate-theta", "--count-only", f2.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning: characteristic 2") != std::string::npos);
}

TEST_CASE("input failures exit with 2")
{
  CHECK(run({"report", path("missing.poset")}).code == 2);
  auto broken = scratch("broken.poset");
  write(broken, "field Q\nelements 1 2\ncover 1\n");
  auto r = run({"report", broken.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("ParseError") != std::string::npos);
  CHECK(run({"verify", path("kite.poset"), path("missing.map")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--jobs", "x", "report", path("kite.poset")}).code == 2);
}

TEST_CASE("spawned binary honours the exit-code contract")
{
  std::string out;
  CHECK(spawn("verify " + path("kite.poset") + " " + path("kite_phi.map") + " --lie --elementary", &out) == 0);
  CHECK(out == "lie: true\nelementary: true\n");
  CHECK(spawn("verify " + path("kite.poset") + " " + path("kite_phi.map") + " --proper") == 1);
  CHECK(spawn("report " + path("missing.poset")) == 2);
  CHECK(spawn("--jobs 2 enumerate-theta --count-only " + path("crown.poset"), &out) == 0);
  CHECK(out == "candidates: 8\n");
  std::string limited = "WORKBENCH_THETA_LIMIT=2 " + std::string(WORKBENCH_BIN) + " enumerate-theta " +
                        path("kite.poset") + " > /dev/null 2>&1";
  int status = std::system(limited.c_str());
  CHECK(WEXITSTATUS(status) == 1);
  auto big = scratch("chain5b.poset");
  write(big, "field Q\nelements 1 2 3 4 5\ncover 1 2\ncover 2 3\ncover 3 4\ncover 4 5\n");
  std::string raised = "WORKBENCH_THETA_LIMIT=10 " + std::string(WORKBENCH_BIN) +
                       " enumerate-theta --count-only " + big.string() + " > " + scratch("raised.out").string();
  CHECK(WEXITSTATUS(std::system(raised.c_str())) == 0);
  CHECK(slurp(scratch("raised.out").string()) == "candidates: 2\n");
}

TEST_CASE("output is deterministic")
{
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"report", path("crown.poset")},
           {"enumerate-theta", path("crown.poset")},
           {"decompose", path("kite.poset"), path("kite_conj_phi.map")},
           {"build-tau", path("chain4_f7.poset"), path("chain4_flip.triple"), "--complete-sigma"}}) {
    auto first = run(args), second = run(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
  }
  std::string a, b;
  spawn("--jobs 1 enumerate-theta " + path("crown.poset"), &a);
  spawn("--jobs 3 enumerate-theta " + path("crown.poset"), &b);
  CHECK(a == b);
}
