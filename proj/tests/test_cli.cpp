#include <catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "menger/cli.hpp"
#include "menger/errors.hpp"
#include "menger/io.hpp"

using namespace menger;
using fixtures::PowersetOp;
namespace fs = std::filesystem;

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "menger");
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  class TempDir {
   public:
    TempDir() : _path(fs::temp_directory_path() / ("menger-cli-" + std::to_string(::getpid()))) {
      fs::create_directories(_path);
    }
    ~TempDir() {
      std::error_code ec;
      fs::remove_all(_path, ec);
    }
    std::string file(std::string const& name) const {
      return (_path / name).string();
    }
    std::string write(std::string const& name, std::string const& text) const {
      io::write_file(file(name), text);
      return file(name);
    }

   private:
    fs::path _path;
  };

  std::string algebra_text(SubtractionMengerAlgebra const& s) {
    return io::dump_algebra({io::index_labels(s.size()), s});
  }

}  // namespace

TEST_CASE("algebra files round-trip") {
  for (auto const& s : {fixtures::powerset(2, PowersetOp::intersection, 2), make_abstract(fixtures::full_unary())}) {
    io::AlgebraDoc doc{io::index_labels(s.size()), s};
    auto           back = io::parse_algebra(io::dump_algebra(doc));
    CHECK(back == doc);
  }
  io::AlgebraDoc labelled{{"e", "f"}, make_abstract(fixtures::two_element_functions())};
  CHECK(io::parse_algebra(io::dump_algebra(labelled)) == labelled);
}

TEST_CASE("function set files round-trip") {
  auto f   = random_closed_algebra(2, 2, 2, 2, 40);
  auto doc = io::to_doc(f);
  auto back = io::parse_function_set(io::dump_function_set(doc));
  CHECK(back == doc);
  CHECK(io::to_algebra(back).elements() == f.elements());
}

TEST_CASE("representation files round-trip") {
  auto s   = make_abstract(fixtures::full_unary());
  auto r   = theorem2_pipeline(VerifiedAlgebra::verify(s));
  auto doc = io::to_doc(r, io::index_labels(s.size()));
  auto back = io::parse_representation(io::dump_representation(doc));
  CHECK(back == doc);
  CHECK(back.verified);
  auto r2 = io::to_representation(back);
  REQUIRE(r2.base().size() == r.base().size());
  for (std::size_t i = 0; i < r.base().size(); ++i) {
    CHECK(r2.base()[i].name == r.base()[i].to_string(io::index_labels(s.size())));
  }
  for (Element g = 0; g < s.size(); ++g) {
    CHECK(r2.graph(g) == r.graph(g));
  }
  CHECK(verify_representation(s, r2).holds);
}

TEST_CASE("malformed input is reported with its location") {
  SECTION("missing subtraction entry") {
    auto j = nlohmann::json::parse(algebra_text(fixtures::powerset(1, PowersetOp::intersection)));
    j["subtraction"].erase(j["subtraction"].size() - 1);
    try {
      io::parse_algebra(j.dump());
      FAIL("expected ParseError");
    } catch (ParseError const& e) {
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("subtraction table not total"));
    }
  }
  SECTION("unknown label") {
    auto j = nlohmann::json::parse(algebra_text(fixtures::powerset(1, PowersetOp::intersection)));
    j["menger"][0][0] = "nope";
    CHECK_THROWS_AS(io::parse_algebra(j.dump()), ParseError);
  }
  SECTION("duplicate entry") {
    auto j = nlohmann::json::parse(algebra_text(fixtures::powerset(1, PowersetOp::intersection)));
    j["menger"].push_back(j["menger"][0]);
    try {
      io::parse_algebra(j.dump());
      FAIL("expected ParseError");
    } catch (ParseError const& e) {
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("duplicate entry"));
    }
  }
  SECTION("not json") {
    CHECK_THROWS_AS(io::parse_algebra("{"), ParseError);
    CHECK_THROWS_AS(io::parse_function_set("[]"), ParseError);
    CHECK_THROWS_AS(io::parse_representation("{\"rank\": 1}"), ParseError);
  }
}

TEST_CASE("check command") {
  TempDir dir;
  auto    good = dir.write("good.json", algebra_text(make_abstract(fixtures::full_unary())));
  auto    bad  = dir.write("bad.json", algebra_text(fixtures::powerset(2, PowersetOp::left_projection)));

  auto r = run({"check", good});
  CHECK(r.code == cli::kOk);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("compat: holds"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("derived: holds"));

  r = run({"check", bad, "--axioms", "compat", "--max-witnesses", "1"});
  CHECK(r.code == cli::kViolation);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("compat: VIOLATED"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("eq12"));

  CHECK(run({"check", bad, "--axioms", "subtraction"}).code == cli::kOk);
  CHECK(run({"check", dir.file("missing.json")}).code == cli::kBadInput);
  CHECK(run({"check", good, "--axioms", "bogus"}).code == cli::kBadInput);

  auto j = nlohmann::json::parse(algebra_text(fixtures::powerset(1, PowersetOp::intersection)));
  j["subtraction"].erase(0);
  auto partial = dir.write("partial.json", j.dump());
  r            = run({"check", partial});
  CHECK(r.code == cli::kBadInput);
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("subtraction table not total"));
}

TEST_CASE("represent and verify commands") {
  TempDir dir;
  auto    s   = make_abstract(fixtures::full_unary());
  auto    alg = dir.write("alg.json", algebra_text(s));
  auto    rep = dir.file("rep.json");

  auto r = run({"represent", alg, "--out", rep, "--tiebreak", "greatest"});
  REQUIRE(r.code == cli::kOk);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("separable pairs: 56"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("verified: yes"));
  CHECK(run({"verify", alg, rep}).code == cli::kOk);

  auto j = nlohmann::json::parse(io::read_file(rep));
  for (auto& g : j["graphs"]) {
    if (!g["graph"].empty()) {
      g["graph"].erase(0);
      break;
    }
  }
  auto broken = dir.write("broken.json", j.dump());
  r           = run({"verify", alg, broken});
  CHECK(r.code == cli::kViolation);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("VIOLATED"));

  auto other = dir.write("other.json", algebra_text(fixtures::powerset(2, PowersetOp::intersection)));
  CHECK(run({"verify", other, rep}).code == cli::kBadInput);

  auto lp = dir.write("lp.json", algebra_text(fixtures::powerset(2, PowersetOp::left_projection)));
  CHECK(run({"represent", lp}).code == cli::kViolation);
}

TEST_CASE("pfunc command") {
  TempDir dir;
  SECTION("all") {
    auto r = run({"pfunc", "all", "--base-size", "2", "--rank", "1"});
    REQUIRE(r.code == cli::kOk);
    CHECK(io::parse_function_set(r.out).functions.size() == 9);
    CHECK(run({"pfunc", "all", "--base-size", "2", "--rank", "2", "--cap", "80"}).code == cli::kCapped);
  }
  SECTION("random is deterministic per seed") {
    auto a = run({"pfunc", "random", "--seed", "7", "--rank", "2", "--cap", "200"});
    auto b = run({"pfunc", "random", "--seed", "7", "--rank", "2", "--cap", "200"});
    REQUIRE(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(io::to_algebra(io::parse_function_set(a.out)).elements() == random_closed_algebra(2, 2, 2, 7, 200).elements());
  }
  SECTION("close") {
    auto r = run({"pfunc", "close", "--base-size", "3"});
    REQUIRE(r.code == cli::kOk);
    auto doc = io::parse_function_set(r.out);
    REQUIRE(doc.functions.size() == 1);
    CHECK(doc.functions[0].empty());

    io::FunctionSetDoc gens{{"p", "q"}, 1, {"swap"}, {fixtures::unary({1, 0})}};
    auto path = dir.write("gens.json", io::dump_function_set(gens));
    auto out  = dir.file("closed.json");
    auto abs  = dir.file("abstract.json");
    r = run({"pfunc", "close", "--generators", path, "--out", out, "--abstract", abs});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out == "functions: 3\n");
    auto closed = io::parse_function_set(io::read_file(out));
    CHECK(closed.base == std::vector<std::string>{"p", "q"});
    CHECK(run({"check", abs}).code == cli::kOk);
    CHECK(run({"pfunc", "close", "--generators", path, "--cap", "2"}).code == cli::kCapped);
  }
}

TEST_CASE("translations command") {
  TempDir dir;
  auto lp = dir.write("lp.json",
                      algebra_text(SubtractionMengerAlgebra(
                          FiniteMengerAlgebra::tabulate(1, 2, [](Element x, std::span<Element const>) { return x; }),
                          {0, 0, 1, 0}, 0)));
  auto r = run({"translations", lp, "--depth-oracle", "4"});
  CHECK(r.code == cli::kOk);
  CHECK_THAT(r.out, Catch::Matchers::StartsWith("translations: 3\n"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("agreement confirmed"));

  auto one = dir.write("one.json", algebra_text(fixtures::one_element()));
  r        = run({"translations", one});
  CHECK(r.code == cli::kOk);
  CHECK_THAT(r.out, Catch::Matchers::StartsWith("translations: 1\n"));

  auto full = dir.write("full.json", algebra_text(make_abstract(fixtures::full_unary())));
  CHECK(run({"translations", full, "--depth-oracle", "0"}).code == cli::kViolation);
}

TEST_CASE("the installed executable") {
  char const* exe = std::getenv("MENGER_CLI");
  if (exe == nullptr) {
    SKIP("MENGER_CLI not set");
  }
  TempDir dir;
  auto    alg  = dir.write("alg.json", algebra_text(make_abstract(fixtures::two_element_functions())));
  auto    bad  = dir.write("bad.json", algebra_text(fixtures::powerset(2, PowersetOp::left_projection)));
  auto    code = [&](std::string const& args) {
    int status = std::system((std::string(exe) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  CHECK(code("check " + alg) == 0);
  CHECK(code("check " + bad) == 1);
  CHECK(code("check " + dir.file("missing.json")) == 2);
  CHECK(code("pfunc all --base-size 2 --rank 2 --cap 10") == 3);
  CHECK(code("represent " + alg) == 0);
}
