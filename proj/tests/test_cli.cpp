#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "joinmeet/cli.hpp"
#include "joinmeet/lattice_json.hpp"

using namespace joinmeet;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("kernel of B3") {
    auto r = call({"kernel", "b3", "--max-degree", "3"});
    REQUIRE(r.code == 0);
    auto j = r.doc();
    CHECK(j["degrees"]["2"]["dim_kernel"] == 2);
    CHECK(j["degrees"]["2"]["minimal_generators"].size() == 2);
    CHECK(j["degrees"]["3"]["minimal_generators"].empty());
    CHECK(j["field"] == "Q");
    // Global flags may also precede the subcommand.
    CHECK(call({"--max-degree", "3", "kernel", "b3.json"}).out == r.out);
  }

  TEST_CASE("prime-field counting reports the same rational generators") {
    auto q = call({"kernel", "b3", "--max-degree", "3"}).doc();
    auto p = call({"kernel", "b3", "--max-degree", "3", "--field", "fp:32003"}).doc();
    CHECK(p["field"] == "Fp(32003)");
    CHECK(p["generator_field"] == "Q");
    CHECK(p["degrees"] == q["degrees"]);
    CHECK(call({"kernel", "b3", "--field", "fp:4"}).code == cli::kInput);
  }

  TEST_CASE("divisor output feeds quadratic through stdin") {
    auto d = call({"divisor", "54"});
    REQUIRE(d.code == 0);
    CHECK(lattice_from_json(d.out).size() == 8);
    auto q = call({"quadratic", "--max-degree", "4"}, d.out);
    REQUIRE(q.code == 0);
    CHECK(q.doc()["generated_in_degree_2"] == true);
    CHECK(q.doc()["quadratic_gb"] == true);
    CHECK(call({"quadratic", "-"}, d.out).out == q.out);
    CHECK(lattice_from_json(call({"boolean", "3"}).out).size() == 8);
  }

  TEST_CASE("classify report") {
    auto j = call({"classify", "b3"}).doc();
    CHECK(j["theta"] == 3);
    CHECK(j["planar"] == false);
    CHECK(j["apexes"] == json::array({"1", "8"}));
    auto f5 = call({"classify", "fig5"}).doc();
    CHECK(f5["planar"] == true);
    CHECK(f5["D_2^2*3^2_intervals"].get<int>() > 0);
  }

  TEST_CASE("reports are byte-identical across runs") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"classify", "fig4"}, {"binomials", "fig2"}, {"kernel", "fig2", "--max-degree", "3"}, {"asl", "fig2", "--max-degree", "2"}}) {
      auto a = call(args), b = call(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      CHECK(a.out == a.doc().dump(2) + "\n");
    }
  }

  TEST_CASE("binomials") {
    auto j = call({"binomials", "b3"}).doc();
    CHECK(j["count"] == 9);
    for (const auto& b : j["binomials"]) {
      auto lead = "x[" + b["pair"][0].get<std::string>() + "]*x[" + b["pair"][1].get<std::string>() + "]";
      CHECK(b["leading"] == lead);
    }
  }

  TEST_CASE("asl on Q_L and on a supplied poset") {
    auto j = call({"asl", "fig2", "--max-degree", "2"}).doc();
    CHECK(j["poset"] == "Q_L");
    CHECK(j["weakly_asl"] == true);
    CHECK(j["transfer_consistent"] == true);
    CHECK(call({"asl", "b3"}).code == cli::kInput);

    // The antichain on B3's nine generators: not weakly an ASL.
    auto sys = call({"binomials", "b3"}).doc();
    json p = {{"elements", json::array()}, {"covers", json::array()}};
    for (const auto& b : sys["binomials"]) p["elements"].push_back(b["pair"][0].get<std::string>() + "," + b["pair"][1].get<std::string>());
    auto path = std::filesystem::temp_directory_path() / "joinmeet_cli_antichain.json";
    std::ofstream(path) << p.dump();
    auto a = call({"asl", "b3", "--poset", path.string(), "--max-degree", "2"});
    REQUIRE(a.code == 0);
    CHECK(a.doc()["weakly_asl"] == false);
    CHECK(a.doc()["asl"] == false);
    std::filesystem::remove(path);
  }

  TEST_CASE("surveys and grass") {
    auto t = call({"thin-survey", "--rank", "4", "--max-degree", "3", "--gb"}).doc();
    CHECK(t["lattices"] == 1 + 2 + 4);
    CHECK(t["gb_quadratic"] == 7);
    auto p = call({"planar-survey", "--size", "3", "--max-degree", "3"}).doc();
    CHECK(p["theorem_violations"] == 0);
    CHECK(p["lattices"].get<int>() > 0);
    auto g = call({"grass", "--d", "2", "--n", "4", "--max-degree", "2"}).doc();
    CHECK(g["size"] == 6);
    CHECK(g["join_irreducibles_match"] == true);
    CHECK(g["asl"]["relations"][0]["relation"] == "y[14]*y[23] - y[13]*y[24] + y[12]*y[34]");
    CHECK(call({"grass", "--d", "5", "--n", "4"}).code == cli::kInput);
  }

  TEST_CASE("fixtures verify") {
    auto r = call({"fixtures", "verify"});
    CHECK(r.code == 0);
    CHECK(r.doc()["ok"] == true);
    CHECK(r.doc()["fixtures"].size() == 4);
  }

  TEST_CASE("exit codes") {
    CHECK(call({"kernel", "/nonexistent/file.json"}).code == cli::kInput);
    CHECK(call({"kernel", "-"}, "{not json").code == cli::kInput);
    CHECK(call({"classify", "-"}, R"({"elements":["a","b"],"covers":[]})").code == cli::kInput);
    CHECK(call({"kernel", "b3", "--max-degree", "0"}).code == cli::kInput);
    CHECK(call({"frobnicate"}).code == cli::kInput);
    CHECK(call({}).code == cli::kInput);
    auto budget = call({"kernel", "b3", "--budget-cells", "10"});
    CHECK(budget.code == cli::kBudget);
    CHECK(json::parse(budget.err)["error"] == "budget");
    CHECK(call({"quadratic", "fig4", "--budget-pairs", "3"}).code == cli::kOk);
    CHECK(call({"--help"}).code == cli::kOk);
  }

  TEST_CASE("--out writes the report") {
    auto path = std::filesystem::temp_directory_path() / "joinmeet_cli_out.json";
    auto r = call({"classify", "b3", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    CHECK(s.str() == call({"classify", "b3"}).out);
    std::filesystem::remove(path);
  }
}
