#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "dsg/app.hpp"
#include "dsg/ringfile.hpp"
#include "dsg_test_util.hpp"

using namespace dsg;
using namespace dsg::test;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dsgbound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(DSG_DATA_DIR) + "/" + f; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("dsg_cli_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("bound on the dim 41 example") {
    auto r = run({"bound", "--input", data("dim41.ring"), "--ideal", "jacobian", "--attest", "half-cm-local",
                  "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["dim_bound"] == 41);
    CHECK(j["ball"]["radius"] == 42);
    CHECK(j["ball"]["generator"] == json({"k", "R/(x, y)"}));
    CHECK(j["invariants"]["mu"] == 6);
    CHECK(j["invariants"]["grade"] == 0);
    CHECK(j["invariants"]["depth"] == 1);
    CHECK(j["invariants"]["dim"] == 2);
    CHECK(j["formula"] == "main");
    CHECK(j.dump(2) + "\n" == r.out);  // canonical: sorted keys, reparses identically
    auto again = run({"bound", "--input", data("dim41.ring"), "--ideal", "jacobian", "--attest", "half-cm-local",
                      "--format", "json"});
    CHECK(again.out == r.out);
  }

  TEST_CASE("unattested hypotheses give a conditional report") {
    auto r = run({"bound", "--input", data("dim41.ring"), "--format", "json"});
    CHECK(r.code == 1);
    auto j = json::parse(r.out);
    CHECK(j["dim_bound"].is_null());
    REQUIRE(j["ball"].is_object());
    CHECK(j["ball"]["class_generator"] == true);
    CHECK_FALSE(j["formula_text"].get<std::string>().empty());
  }

  TEST_CASE("bounds of the other examples") {
    auto e = json::parse(run({"bound", "--input", data("egdimsing1.ring"), "--format", "json"}).out);
    CHECK(e["dim_bound"] == 11);
    auto u = json::parse(run({"bound", "--input", data("uncountable.ring"), "--format", "json"}).out);
    CHECK(u["dim_bound"] == 15);
    CHECK(u["ball"]["generator"] == json({"R/(x, y)"}));
    for (int n = 2; n <= 5; ++n) {
      auto r = run({"bound", "--input", data("depthzero" + std::to_string(n) + ".ring"), "--ideal", "socle",
                    "--format", "json"});
      REQUIRE(r.code == 0);
      auto j = json::parse(r.out);
      CHECK(j["dim_bound"] == 2 * (n - 1) - 1);
      CHECK(j["formula"] == "depth-zero");
      CHECK(j["ball"]["generator"] == json({n == 2 ? "k" : "R/(x)"}));
    }
    auto d = run({"bound", "--input", data("egdimsing1.ring"), "--formula", "dimsing1", "--format", "json"});
    CHECK(json::parse(d.out)["dim_bound"] == 11);
  }

  TEST_CASE("invariants subcommand") {
    auto r = run({"invariants", "--input", data("egdimsing1.ring"), "--ideal", "jacobian", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["invariants"]["mu"] == 3);
    CHECK(j["invariants"]["grade"] == 1);
    CHECK(j["invariants"]["nilpotency"] == 2);
    CHECK(j["ideal"] == "(x^2, y^2, z^2)");
  }

  TEST_CASE("text and JSON agree on numbers") {
    const std::vector<std::string> base = {"bound", "--input", data("uncountable.ring")};
    auto t = run(base), js = run({"bound", "--input", data("uncountable.ring"), "--format", "json"});
    auto j = json::parse(js.out);
    std::smatch m;
    REQUIRE(std::regex_search(t.out, m, std::regex("dim_bound: (\\d+)")));
    CHECK(std::stol(m[1]) == j["dim_bound"].get<long>());
    REQUIRE(std::regex_search(t.out, m, std::regex("mu=(\\d+) grade=(\\d+) depth=(\\d+) dim=(\\d+)")));
    CHECK(std::stol(m[1]) == j["invariants"]["mu"].get<long>());
    CHECK(std::stol(m[2]) == j["invariants"]["grade"].get<long>());
    CHECK(std::stol(m[3]) == j["invariants"]["depth"].get<long>());
    CHECK(std::stol(m[4]) == j["invariants"]["dim"].get<long>());
  }

  TEST_CASE("gb, nf, jacobian, verify") {
    auto g = run({"gb", "--input", data("dual.ring"), "--ideal", "1", "--format", "json"});
    CHECK(g.code == 0);
    CHECK(json::parse(g.out)["basis"] == json({"1"}));
    auto n = run({"nf", "--input", data("dual.ring"), "--ideal", "0", "--poly", "x^2 + y", "--format", "json"});
    CHECK(json::parse(n.out)["normal_form"] == "y^3 + y");
    auto jac = run({"jacobian", "--input", data("dual.ring"), "--format", "json"});
    CHECK(json::parse(jac.out)["height"] == 1);
    CHECK(run({"verify", "--input", data("egdimsing1.ring")}).code == 0);
    CHECK(run({"verify", "--input", data("dim41.ring")}).code == 1);
    CHECK(run({"verify", "--input", data("dim41.ring"), "--attest", "half-cm-local"}).code == 0);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bound"}).code == 2);
    CHECK(run({"bound", "--input", data("dim41.ring"), "--attest", "bogus"}).code == 2);
    CHECK(run({"bound", "--input", "/nonexistent/file.ring"}).code == 2);
    auto bad = temp_file("bad.ring", "field QQ\nvars x y\nrelations\nx^2 + * y\nend\n");
    auto r = run({"gb", "--input", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find(":4:") != std::string::npos);
    CHECK(run({"gb", "--input", data("dual.ring"), "--ideal", "x +"}).code == 2);
    auto cusp = temp_file("cusp.ring", "field QQ\nvars x y\nrelations\nx^2 - y^3\nend\n");
    CHECK(run({"bound", "--input", cusp}).code == 3);
    CHECK(run({"bound", "--input", data("dim41.ring"), "--attest", "half-cm-local", "--cap", "1"}).code == 4);
  }

  TEST_CASE("derived radius supplied by the caller") {
    auto cusp = temp_file("cusp2.ring", "field QQ\nvars x y z\nrelations\nx*y*z\nend\n");
    auto r = run({"bound", "--input", cusp, "--derived-radius", "5", "--format", "json"});
    auto j = json::parse(r.out);
    REQUIRE(r.code == 0);
    CHECK(j["ball"]["radius"].get<long>() % 5 == 0);
  }

  TEST_CASE("ring files round-trip") {
    for (const char* f : {"dim41.ring", "egdimsing1.ring", "uncountable.ring", "dual.ring", "depthzero3.ring"}) {
      auto R = load(f);
      auto back = parse_ring_file(emit_ring_file(*R)).ring;
      CHECK(back->ambient() == R->ambient());
      CHECK(back->relations() == R->relations());
    }
    auto gf = parse_ring_file("field GF 5\nvars a b\nweights 2 1\nrelations\na - b^2\nend\n").ring;
    CHECK(emit_ring_file(*gf) == "field GF 5\nvars a b\nweights 2 1\nrelations\na + 4*b^2\nend\n");
    CHECK_THROWS_AS(parse_ring_file("field QQ\nvars x x\n"), RingFileError);
    CHECK_THROWS_AS(parse_ring_file("field QQ\nvars x\nweights 1 2\n"), RingFileError);
    CHECK_THROWS_AS(parse_ring_file("field GF 6\nvars x\n"), RingFileError);
    CHECK_THROWS_AS(parse_ring_file("vars x\nrelations\nx\nend\n"), RingFileError);
    CHECK_THROWS_AS(parse_ring_file("field QQ\nvars x\nrelations\nx\n"), RingFileError);
  }
}
