#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/cli.hpp"
#include "hurwitz/hodge.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/toda.hpp"
#include "hurwitz/trivalent.hpp"
#include "hurwitz/wick.hpp"

using namespace hurwitz;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hurwitz-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_of(const std::string& text, const std::string& needle) {
  int c = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
  return c;
}

template <class T>
T round_trip(const T& v) {
  return Json::parse(Json(v).dump()).get<T>();
}

}  // namespace

TEST_CASE("hurwitz command agrees across methods") {
  const Run r = run({"hurwitz", "--genus", "1", "--mu", "2,1", "--method", "all"});
  CHECK(r.code == exit_ok);
  CHECK(count_of(r.out, "= 40\n") == 3);
  CHECK(r.out.rfind("# {", 0) == 0);
  const Run j = run({"--format", "json", "hurwitz", "--genus", "1", "--mu", "2,1"});
  CHECK(j.code == exit_ok);
  const Json doc = Json::parse(j.out);
  CHECK(doc.at("exit_code") == 0);
  CHECK(doc.at("result").at("agree") == true);
  CHECK(doc.at("result").at("values").size() == 3);
  CHECK(doc.at("result").at("values")[0].at("value").get<Rat>() == Rat(40));
  CHECK(doc.at("config").at("command") == "hurwitz");
}

TEST_CASE("budget overruns exit with code 3") {
  CHECK(run({"hurwitz", "--genus", "9", "--mu", "9,9", "--method", "monodromy"}).code == exit_budget);
  CHECK(run({"--budget", "monodromy_max_degree=2", "hurwitz", "--genus", "0", "--mu", "3", "--method", "monodromy"}).code ==
        exit_budget);
  CHECK(run({"toda", "verify", "--dmax", "9", "--lmax", "0"}).code == exit_budget);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({}).code == exit_usage);
  CHECK(run({"hurwitz", "--genus", "1"}).code == exit_usage);
  CHECK(run({"hurwitz", "--genus", "1", "--mu", "2,x"}).code == exit_usage);
  CHECK(run({"--format", "xml", "hurwitz", "--genus", "1", "--mu", "2"}).code == exit_usage);
  CHECK(run({"--budget", "bogus=1", "hurwitz", "--genus", "1", "--mu", "2"}).code == exit_usage);
  CHECK(run({"intersect", "--genus", "0", "--taus", "0"}).code == exit_usage);
  CHECK(run({"trees", "laplace", "--y1", "1", "--y2", "1", "--bigN", "999", "--samples", "1"}).code == exit_usage);
  CHECK(run({"trees", "stats", "--stat", "trunk", "--n", "10", "--samples", "10"}).code == exit_usage);
}

TEST_CASE("intersect command") {
  const Run a = run({"intersect", "--genus", "2", "--taus", "3,2"});
  CHECK(a.code == exit_ok);
  CHECK(a.out.find("29/5760") != std::string::npos);
  const Run b = run({"--format", "json", "intersect", "--genus", "1", "--taus", "0", "--lambda", "1"});
  CHECK(b.code == exit_ok);
  CHECK(Json::parse(b.out).at("result").at("value").get<Rat>() == Rat(1, 24));
  const Run c = run({"intersect", "--genus", "1", "--taus", "2"});
  CHECK(c.code == exit_ok);
  CHECK(c.out.find("= 0\n") != std::string::npos);
}

TEST_CASE("kontsevich and maps commands") {
  const Run k = run({"kontsevich", "--genus", "1", "--cells", "1", "--eval", "1"});
  CHECK(k.code == exit_ok);
  CHECK(count_of(k.out, "= 1/24") == 2);
  CHECK(run({"kontsevich", "--genus", "0", "--cells", "3", "--eval", "1,2"}).code == exit_usage);
  const Run m = run({"--format", "json", "maps", "enumerate", "--genus", "0", "--cells", "3"});
  CHECK(m.code == exit_ok);
  const Json doc = Json::parse(m.out);
  const auto classes = doc.at("result").at("classes").get<std::vector<MapClass>>();
  CHECK(classes == enumerate_trivalent(0, 3));
  CHECK(doc.at("result").at("count") == classes.size());
}

TEST_CASE("toda command") {
  const Run t = run({"toda", "verify", "--dmax", "3", "--lmax", "0"});
  CHECK(t.code == exit_ok);
  CHECK(t.out.find("residual = 0") != std::string::npos);
  CHECK(run({"toda", "verify", "--dmax", "3", "--lmax", "0", "--htilde"}).code == exit_ok);
}

TEST_CASE("tree statistics are deterministic for a fixed seed") {
  const std::vector<std::string> args{"--format", "json", "trees", "stats", "--stat", "rootcomp", "--n", "200", "--samples", "10000", "--seed", "5"};
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
  const StatReport r = Json::parse(a.out).at("result").get<StatReport>();
  CHECK(r.n == 200);
  CHECK(r.seed == 5);
  CHECK(r.test == "chi-square");
  const Run c = run({"--threads", "1", "--format", "json", "trees", "stats", "--stat", "rootcomp", "--n", "200", "--samples", "10000", "--seed", "5"});
  CHECK(Json::parse(c.out).at("result") == Json::parse(a.out).at("result"));
  CHECK(Json::parse(c.out).at("config").at("threads") == 1);
}

TEST_CASE("reference tables reproduce with zero diffs") {
  const Run r = run({"tables", "appendix-b"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("diffs: 0") != std::string::npos);
  CHECK(appendix_b().hurwitz.size() == 33);
  CHECK(appendix_b().hodge.size() == 9);
}

TEST_CASE("JSON round trips") {
  CHECK(round_trip(Rat(-29, 5760)) == Rat(-29, 5760));
  CHECK(Json("7/3").get<Rat>() == Rat(7, 3));
  CHECK(round_trip(Partition{3, 2, 2}) == Partition{3, 2, 2});
  CHECK(round_trip(Correlator(2, {3}, 1)) == Correlator(2, {3}, 1));
  const HodgeTable& t = inverted_hodge_table(1, 2);
  CHECK(round_trip(t) == t);
  for (const auto& c : enumerate_trivalent(1, 2)) {
    CHECK(round_trip(c) == c);
    CHECK(round_trip(c.rep) == c.rep);
  }
  CHECK(round_trip(wick_moment({4})) == wick_moment({4}));
  StatReport s{"trunk", "ks", 100, 10000, 3, 0.01, 0.05, 0, true};
  const StatReport s2 = round_trip(s);
  CHECK(s2.statistic == s.statistic);
  CHECK(s2.value == s.value);
  CHECK(s2.pass == s.pass);
  LaplaceEstimate e{1, 4, 1000, 2, 9, 0.45, 0.01, 0.4714, -0.05};
  const LaplaceEstimate e2 = round_trip(e);
  CHECK(e2.estimate == e.estimate);
  CHECK(e2.N == e.N);
  const TruncatedSeries h = build_H(3, 2);
  CHECK(round_trip(h) == h);
  CHECK(round_trip(h).dmax() == 3);
  const TodaResidual r = toda_residual(h);
  const TodaResidual r2 = round_trip(r);
  CHECK(r2.max_abs == r.max_abs);
  CHECK(r2.checked == r.checked);
  CHECK_THROWS(Json::parse(R"({"sigma":[1,0],"alpha":[1,0],"darts":3})").get<RibbonMap>());
}
