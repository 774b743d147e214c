#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "cellx/io.hpp"
#include "cli.hpp"

using namespace cellx;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CELLX_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("cellx_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

Json parse(const std::string& s) { return Json::parse(s); }

}  // namespace

TEST_CASE("cell E02 E01 holds with the lex trace") {
  const auto r = run({"cell", data("E02.json"), data("E01.json"), "--output", "explain"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const auto j = parse(r.out);
  CHECK(j["holds"] == true);
  CHECK(j["minPairA"] == Json::array({0, 1}));
  CHECK(j["minPairX"] == Json::array({0, 2}));
  CHECK(j["explanation"] == "min_pair(A) = (0,1) <= min_pair(X) = (0,2)");
}

TEST_CASE("relation exit codes") {
  CHECK(run({"cell", data("E01.json"), data("E02.json")}).code == 1);
  CHECK(run({"cell", data("E00.json"), data("E01.json")}).code == 1);
  CHECK(run({"acyclic", data("E00.json"), data("E01.json")}).code == 0);
  CHECK(run({"cell", data("D1.json"), data("S1.json")}).code == 0);
  CHECK(run({"cell", data("E00.json"), data("S1.json")}).code == 1);
}

TEST_CASE("decompose D1") {
  const auto r = run({"decompose", data("D1.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"intervals\":[],\"disks\":[[1,1]]}\n");
}

TEST_CASE("validate bad input") {
  const auto r = run({"validate", data("bad.json")});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK(r.err.find("degree 1") != std::string::npos);
  CHECK(run({"validate", data("E02.json")}).code == 0);
  CHECK(run({"homology", data("bad.json")}).code == 3);
  CHECK(run({"homology", data("bad.json"), "--force"}).code == 3);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"cell", data("E02.json")}).code == 2);
  CHECK(run({"homology", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"gen", "interval", "0", "1"}).code == 2);
  CHECK(run({"gen", "disk", "0", "--ring", "zpsq:2"}).code == 2);
  CHECK(run({"gen", "interval", "1", "--ring", "zpsq:2"}).code == 2);
  CHECK(run({"homology", data("E02.json"), "--ring", "dual:2"}).code == 2);
  CHECK(run({"homology", data("E02.json"), "--output", "fancy"}).code == 2);
  CHECK(run({"shift", data("E02.json"), "-1"}).code == 2);
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("decompose") != std::string::npos);
}

TEST_CASE("malformed files are invalid input") {
  CHECK(run({"homology", temp_file("junk.json", "{not json")}).code == 3);
  CHECK(run({"homology", temp_file("range.json",
                                   R"({"ring":"zpsq:2","ranks":[1,1],"differentials":[[[[0,2]]]]})")})
            .code == 3);
  const auto no_ring = temp_file("noring.json", R"({"ranks":[1]})");
  CHECK(run({"homology", no_ring}).code == 2);
  CHECK(run({"homology", no_ring, "--ring", "dual:3"}).code == 0);
}

TEST_CASE("guard refusal exit code") {
  const auto big = temp_file("big.json", R"({"ring":"zpsq:2","ranks":[6]})");
  const auto r = run({"crosscheck", big, big, "--guard", "1024"});
  CHECK(r.code == 4);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("constructions") {
  const auto cone = run({"cone", data("F.json")});
  CHECK(cone.code == 0);
  const auto c = complex_from_json(parse(cone.out));
  CHECK(decompose(c).intervals == std::vector<Interval>{{0, 2}});

  const auto sum = run({"sum", data("E01.json"), data("D1.json")});
  CHECK(parse(sum.out)["ranks"] == Json::array({2, 2}));
  const auto t = run({"tensor", data("E01.json"), data("E01.json")});
  CHECK(parse(t.out)["ranks"] == Json::array({1, 2, 1}));
  const auto s = run({"shift", data("E01.json"), "2"});
  CHECK(complex_from_json(parse(s.out)) == interval(RingSpec::parse("zpsq:2"), 2, 1));
  const auto h = run({"hom", data("E00.json"), data("E02.json")});
  CHECK(parse(h.out)["degree0Free"] == true);
  CHECK(parse(h.out)["complex"] == parse(run({"gen", "interval", "0", "2", "--ring", "zpsq:2"}).out));
  const auto hm = run({"homology", data("E02.json")});
  CHECK(hm.out == "{\"homology\":[{\"free\":0,\"residue\":1},{\"free\":0,\"residue\":0},"
                  "{\"free\":0,\"residue\":1}]}\n");
  const auto mn = run({"minimize", data("D1.json"), "--output", "pretty"});
  CHECK(mn.code == 0);
  CHECK(parse(mn.out)["disks"] == Json::array({Json::array({1, 1})}));
}

TEST_CASE("crosscheck and extension") {
  const auto r = run({"crosscheck", data("E02.json"), data("E01.json"), "--seed", "9"});
  CHECK(r.code == 0);
  const auto j = parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["latticeVerdict"] == true);
  CHECK(j["oracleVerdict"] == true);
  CHECK(j["seed"] == 9);
  const auto e = run({"extension", data("E00.json"), data("S1.json"), "--seed", "5"});
  CHECK(e.code == 0);
  const auto ej = parse(e.out);
  CHECK(ej["seed"] == 5);
  CHECK(ej["extension"]["ranks"] == Json::array({1, 1}));
  CHECK(e.out == run({"extension", data("E00.json"), data("S1.json"), "--seed", "5"}).out);
}

TEST_CASE("gen and rand round trip byte identically") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gen", "interval", "1", "3", "--ring", "zpsq:3"},
           {"gen", "sphere", "2", "--ring", "dual:5"},
           {"gen", "disk", "3", "--ring", "dual:2"}}) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    const auto path = temp_file("gen.json", r.out);
    REQUIRE(run({"validate", path}).code == 0);
    REQUIRE(dump(to_json(complex_from_json(parse(r.out)))) + "\n" == r.out);
  }
  for (int seed = 0; seed < 40; ++seed) {
    std::vector<std::string> args{"rand", "--ring", seed % 2 ? "zpsq:3" : "dual:2", "--seed",
                                  std::to_string(seed), "--max-degree", "4", "--max-rank", "3"};
    if (seed % 4 == 0) args.push_back("--allow-units");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    REQUIRE(dump(to_json(complex_from_json(parse(r.out)))) + "\n" == r.out);
    REQUIRE(run(args).out == r.out);
    if (seed % 4 != 0) REQUIRE(complex_from_json(parse(r.out)).is_minimal());
  }
}
