#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"

using namespace toric;
using namespace testing_util;

namespace {

std::string data(const std::string& name) { return std::string(TORIC_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "toricproj");
  std::ostringstream out, err;
  const int code = cli::cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(TORIC_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli-io") {

TEST_CASE("parse the five-variable system file") {
  const SystemFile f = parse_system(slurp(data("fivevar.sys")));
  CHECK(f.n == 5);
  CHECK(f.r == 2);
  CHECK(f.ell == 3);
  REQUIRE(f.system.size() == 2);
  CHECK(f.system[0] == P("3+2*X1*X2*X3-X1^2*X4^4*X5^2+5*X4^8*X5^4", 5));
  CHECK(f.system[1] == P("2*X1*X3*X4*X5^2-3*X2*X3^2*X4^5*X5^4+7*X1*X2^3*X4^5*X5^4", 5));
  const ProjectionProblem p = f.problem();
  CHECK(p.ell == 3);
  CHECK(p.options.seed == 1);
}

TEST_CASE("system file errors") {
  auto message = [](const std::string& text) {
    try {
      parse_system(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("n 2\nr 1\npoly\nend\n").find("empty support") != std::string::npos);
  CHECK(message("n 2\nr 1\npoly\n 1 0 0 : 1\nend\n").find("arity") != std::string::npos);
  CHECK(message("n 2\nr 2\npoly\n 1 0 : 1\nend\n").find("arity") != std::string::npos);
  CHECK(message("n 2\nr 1\npoly\n 1 0 : x\nend\n") == "line 4, column 8: coefficient is not rational: x");
  CHECK(message("n 2\nr 1\npoly\n -1 0 : 1\nend\n").find("line 4, column 2") != std::string::npos);
  CHECK(message("n 2\nr 1\npoly\n 1 0 : 1\n").find("not closed") != std::string::npos);
  CHECK(message("n 2\nfoo 1\n").find("unknown key") != std::string::npos);
  // Cancelling terms leave nothing.
  CHECK(message("n 1\nr 1\npoly\n 1 : 1\n 1 : -1\nend\n").find("empty support") != std::string::npos);
  CHECK(message("# only a comment\nn 1 # trailing\nr 1\npoly\n 1 : 2/4\nend\n") == "no error");
}

TEST_CASE("resolution file round trip") {
  for (const char* name : {"curve3.golden", "fivevar.golden", "specialized2.golden", "dense.golden"}) {
    const std::string text = slurp(data(name));
    REQUIRE_FALSE(text.empty());
    const ProjectionResult r = parse_resolution(text);
    const std::string again = r.ell == 0 ? emit_zero_dim(r.resolution, r.provenance.seed) : emit_resolution(r);
    CHECK(again == text);
  }
}

TEST_CASE("emitted text uses the canonical fraction form") {
  const std::string text = slurp(data("curve3.golden"));
  CHECK(text.find("(-12*X1^3-6*X1^2+6*X1)/(4*X1^2+2*X1-1)") != std::string::npos);
  CHECK(slurp(data("dense.golden")).find("DENSE_IMAGE t=1") != std::string::npos);
}

TEST_CASE("malformed resolution files") {
  CHECK_THROWS_AS(parse_resolution("kind projection\nend\n"), InputError);
  CHECK_THROWS_AS(parse_resolution("resolution-format 1\nkind projection\n"), InputError);
  CHECK_THROWS_AS(parse_resolution("resolution-format 1\nkind weird\nend\n"), InputError);
}

TEST_CASE("cli mv and transbasis") {
  const Run mv = run({"mv", data("curve3.sys")});
  CHECK(mv.code == 0);
  CHECK(mv.out == "6\n");
  const Run tb = run({"transbasis", data("fivevar.sys")});
  CHECK(tb.code == 0);
  CHECK(tb.out == "1 2 4\n");
  const Run g = run({"gamma", data("curve3.sys")});
  CHECK(g.code == 0);
  CHECK(g.out.rfind("I={} J={1 2}\n", 0) == 0);
}

TEST_CASE("cli solve0d") {
  const Run r = run({"solve0d", data("specialized2.sys"), "--lambda", "0,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q(Y) = Y^2 + (-12/5)*Y + -1/5") != std::string::npos);
  const Run s = run({"solve0d", data("specialized2.sys"), "--lambda", "0,1", "--format", "structured"});
  CHECK(s.out == slurp(data("specialized2.golden")));
}

TEST_CASE("cli project reproduces the golden files") {
  const Run c = run({"project", data("curve3.sys"), "--xi", "1", "--lambda", "0,1", "--mu", "1", "--format",
                     "structured"});
  CHECK(c.code == 0);
  CHECK(c.out == slurp(data("curve3.golden")));
  const Run d = run({"project", data("parabola.sys"), "--format", "structured"});
  CHECK(d.code == 0);
  CHECK(d.out == slurp(data("dense.golden")));
  CHECK(run({"project", data("parabola.sys")}).out == "DENSE_IMAGE t=1\n");
}

TEST_CASE("same seed, same bytes") {
  const Run a = run({"project", data("curve3.sys"), "--seed", "9", "--format", "structured"});
  const Run b = run({"project", data("curve3.sys"), "--seed", "9", "--format", "structured"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli verify") {
  const Run ok = run({"verify", data("curve3.sys"), data("curve3.golden")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAILED") == std::string::npos);
  CHECK(run({"verify", data("fivevar.sys"), data("fivevar.golden")}).code == 0);
  CHECK(run({"verify", data("specialized2.sys"), data("specialized2.golden")}).code == 0);
  CHECK(run({"verify", data("parabola.sys"), data("dense.golden")}).code == 0);

  std::string text = slurp(data("curve3.golden"));
  const std::string line = "projected.q 1 ";
  const auto at = text.find(line);
  REQUIRE(at != std::string::npos);
  text.insert(at + line.size(), "1+");
  const Run bad = run({"verify", data("curve3.sys"), write_temp("mutated.res", text)});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAILED q_mu(p_mu) vanishes mod q_lambda") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"mv", data("does-not-exist.sys")}).code == 2);
  CHECK(run({"mv", write_temp("bad.sys", "n 2\nr 1\npoly\nend\n")}).code == 2);
  CHECK(run({"project", data("curve3.sys"), "--format", "yaml"}).code == 2);
  // A pinned form that does not separate the roots.
  CHECK(run({"solve0d", write_temp("twin.sys", "n 2\nr 2\npoly\n1 0 : 1\n0 0 : -1\nend\npoly\n0 2 : 1\n0 0 : -1\nend\n"),
             "--lambda", "1,0"})
            .code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("environment overrides") {
  setenv("TORICPROJ_SEED", "9", 1);
  const Run env = run({"project", data("curve3.sys"), "--format", "structured"});
  unsetenv("TORICPROJ_SEED");
  const Run flag = run({"project", data("curve3.sys"), "--seed", "9", "--format", "structured"});
  CHECK(env.out == flag.out);
}

}  // TEST_SUITE
