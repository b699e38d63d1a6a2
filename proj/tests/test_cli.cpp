#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "modulo/cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream oss;
  auto* old = std::cout.rdbuf(oss.rdbuf());
  int code = modulo::cli::run(args);
  std::cout.rdbuf(old);
  return {code, oss.str()};
}

std::string data(const std::string& rel) { return std::string(DATA_DIR) + "/" + rel; }

std::string temp_file(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  modulo::io::write_file(p.string(), content);
  return p.string();
}

}  // namespace

TEST_CASE("cli parse") {
  CHECK(run_cli({"parse", "P => Q => Q"}).code == 0);
  CHECK(run_cli({"parse", "P /\\ "}).code == 3);
  CHECK(run_cli({"nonsense-subcommand"}).code == 3);
}

TEST_CASE("cli normalize exit codes") {
  CHECK(run_cli({"normalize", "--system", data("systems/ptopand.rules"), "P"}).code == 0);
  CHECK(run_cli({"--fuel", "50", "normalize", "--system", data("systems/pimpp.rules"), "P"})
            .code == 2);
}

TEST_CASE("cli reads the fuel fallback from the environment") {
  setenv("MODULO_WORKBENCH_FUEL", "40", 1);
  CliResult r = run_cli({"normalize", "--system", data("systems/pimpp.rules"), "P"});
  unsetenv("MODULO_WORKBENCH_FUEL");
  CHECK(r.code == 2);
  CHECK(r.out.find("fuel exhausted") != std::string::npos);
}

TEST_CASE("cli congruence exit codes") {
  CHECK(run_cli({"congruent", "--system", data("systems/ptopand.rules"), "P",
                 "top /\\ top"})
            .code == 0);
  CHECK(run_cli({"congruent", "--system", data("systems/ptopand.rules"), "top", "bot"}).code ==
        1);
  CHECK(run_cli({"--fuel", "100", "congruent", "--system", data("systems/pimpq.rules"), "P",
                 "Q"})
            .code == 2);
}

TEST_CASE("cli translation commands") {
  CHECK(run_cli({"atrans-prop", "--a", "S", "P => Q"}).code == 0);
  CHECK(run_cli({"atrans-prop", "--a", "P(x)", "Q"}).code == 1);  // open parameter refused
  CHECK(run_cli({"atrans-system", "--a", "S", "--system", data("systems/ptopand.rules")})
            .code == 0);
  CHECK(run_cli({"kolmogorov", "P /\\ Q"}).code == 0);
}

TEST_CASE("cli algebra commands") {
  CHECK(run_cli({"pha-check", "boolean_2"}).code == 0);
  CHECK(run_cli({"pha-check", "pre3"}).code == 0);
  CHECK(run_cli({"pha-builtin", "no_such_algebra"}).code == 3);
  CHECK(run_cli({"pha-atrans", "chain_3", "--a", "0"}).code == 0);

  // A corrupted implication table fails the checkers.
  CliResult dumped = run_cli({"--json", "pha-builtin", "boolean_2"});
  REQUIRE(dumped.code == 0);
  auto j = modulo::io::json::parse(dumped.out);
  j["imp"][1][0] = 1;
  std::string path = temp_file("corrupt_algebra.json", j.dump());
  CHECK(run_cli({"pha-check", path}).code == 1);
}

TEST_CASE("cli model search and probe") {
  CHECK(run_cli({"model-search", "--system", data("systems/ptopand.rules"), "--algebra",
                 "boolean_2", "--m", "1"})
            .code == 0);
  CHECK(run_cli({"probe", "--system", data("systems/ptopand.rules")}).code == 0);
  CHECK(run_cli({"stability-witness", "--system", data("systems/pimpp.rules"), "--a", "Q",
                 "--algebra", "chain_3", "--m", "1"})
            .code == 0);

  // A searched structure round-trips through the structure file format.
  CliResult search = run_cli({"--json", "model-search", "--system",
                              data("systems/pimpq.rules"), "--algebra", "boolean_2", "--m",
                              "1"});
  REQUIRE(search.code == 0);
  auto j = modulo::io::json::parse(search.out);
  std::string spath = temp_file("searched_structure.json", j["structure"].dump());
  CHECK(run_cli({"model-check", "--structure", spath, "--system",
                 data("systems/pimpq.rules")})
            .code == 0);
}

TEST_CASE("cli grafting and route comparison") {
  modulo::io::json structure = {
      {"algebra", "boolean_2"},
      {"m", 1},
      {"fhat", modulo::io::json::object()},
      {"phat",
       {{"P", {{"arity", 0}, {"table", {1}}}},
        {"Q", {{"arity", 0}, {"table", {0}}}},
        {"S", {{"arity", 0}, {"table", {0}}}}}},
  };
  std::string m0 = temp_file("graft_m0.json", structure.dump());
  structure["phat"]["P"]["table"] = {0};
  structure["phat"]["Q"]["table"] = {1};
  std::string m1 = temp_file("graft_m1.json", structure.dump());

  CHECK(run_cli({"graft", "--m0", m0, "--m1", m1, "--a", "Q"}).code == 0);
  CHECK(run_cli({"propag1-check", "--structure", m0, "--a", "S"}).code == 0);
  CHECK(run_cli({"propag1-check", "--structure", m0, "--a", "S(x)"}).code == 1);
}

TEST_CASE("cli proof checking") {
  CHECK(run_cli({"proof-check", "--calc", "classical", "--system",
                 data("systems/pimpq.rules"), data("proofs/cut_q_classical.json")})
            .code == 0);
  CHECK(run_cli({"proof-check", "--calc", "classical", "--system",
                 data("systems/pimpp.rules"), data("proofs/two_step_p.json")})
            .code == 0);
  // The cut proof is classical; the intuitionistic checker refuses the flavor.
  CHECK(run_cli({"proof-check", "--calc", "intuitionistic", "--system",
                 data("systems/pimpq.rules"), data("proofs/cut_q_classical.json")})
            .code == 1);
  // Without the congruence the axiom side conditions fail.
  CHECK(run_cli({"proof-check", "--calc", "classical",
                 data("proofs/two_step_p.json")})
            .code == 1);
}

TEST_CASE("cli proof translation round trip") {
  CliResult fwd = run_cli({"--json", "translate-ci", "--a", "S", "--system",
                           data("systems/pimpp.rules"), data("proofs/two_step_p.json")});
  REQUIRE(fwd.code == 0);
  auto j = modulo::io::json::parse(fwd.out);
  CHECK(j["checks"].get<bool>());
  std::string ppath = temp_file("int_proof.json", j["proof"].dump());
  std::string rpath = temp_file("int_rep.json", j["representation"].dump());

  CliResult back = run_cli({"--json", "translate-ic", "--a", "S", "--system",
                            data("systems/pimpp.rules"), "--rep", rpath, ppath});
  REQUIRE(back.code == 0);
  auto b = modulo::io::json::parse(back.out);
  CHECK(b["cut_free"].get<bool>());
  CHECK(b["checks"].get<bool>());
  modulo::SequentProof round = modulo::io::proof_from_json(b["proof"]);
  CHECK(modulo::sequent_alpha_eq(round.root.conclusion,
                                 modulo::Sequent{{}, {modulo::Prop::atom("P")}}));
}

TEST_CASE("cli proof terms") {
  CHECK(run_cli({"natded-check", "--system", data("systems/pimpq.rules"), "--goal", "Q",
                 data("terms/omega.json")})
            .code == 0);
  CHECK(run_cli({"natded-check", "--goal", "Q", data("terms/omega.json")}).code == 1);
  CHECK(run_cli({"natded-reduce", "--strategy", "lo", data("terms/omega.json")}).code == 0);
  CHECK(run_cli({"natded-reduce", "--strategy", "full", data("terms/loop_redex.json")}).code ==
        0);
  CHECK(run_cli({"--fuel", "50", "natded-reduce", "--strategy", "lo",
                 data("terms/loop_redex.json")})
            .code == 2);
}

TEST_CASE("cli demos") {
  for (const char* name : {"cut-proof-q", "two-step-p", "omega", "loop", "stability"})
    CHECK(run_cli({"demo", name}).code == 0);
  CHECK(run_cli({"demo", "no-such-demo"}).code == 3);
}

TEST_CASE("cli reports are deterministic for a fixed seed") {
  modulo::io::json structure = {
      {"algebra", "chain_3"},
      {"m", 2},
      {"fhat", modulo::io::json::object()},
      {"phat",
       {{"P", {{"arity", 1}, {"table", {2, 0}}}},
        {"S", {{"arity", 0}, {"table", {0}}}}}},
  };
  std::string sfile = temp_file("det_structure.json", structure.dump());
  std::vector<std::string> cmd = {"--json", "--seed", "9", "propag1-check",
                                  "--structure", sfile, "--a", "S"};
  CliResult first = run_cli(cmd);
  CliResult second = run_cli(cmd);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("cli json reports parse") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"--json", "demo", "loop"},
           {"--json", "parse", "forall x. P(x) => Q"},
           {"--json", "probe", "--system", data("systems/ptopand.rules")},
       }) {
    CliResult r = run_cli(args);
    CHECK(r.code == 0);
    CHECK_NOTHROW(modulo::io::json::parse(r.out));
  }
}
