#include <doctest.h>

#include <sstream>

#include "cablejones/commands.hpp"
#include "cablejones/errors.hpp"
#include "cablejones/json_io.hpp"

using namespace cj;
using namespace cj::cli;
using cj::io::Json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(const std::function<int(Streams)>& body) {
  std::ostringstream out, err;
  Streams io{out, err};
  Run r;
  r.code = run_guarded([&] { return body(io); }, io);
  r.out = out.str();
  r.err = err.str();
  return r;
}

RunConfig quiet() {
  RunConfig cfg;
  cfg.progress = false;
  return cfg;
}

}  // namespace

TEST_CASE("argument parsing") {
  NRange r = NRange::parse("2..5");
  CHECK(r.lo == 2);
  CHECK(r.hi == 5);
  CHECK(NRange::parse("7").lo == 7);
  CHECK_THROWS_AS(NRange::parse("5..2"), ParseError);
  CHECK_THROWS_AS(NRange::parse("x"), ParseError);

  auto pairs = parse_grid("11,2;3,-2");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[1].p() == 3);
  CHECK(pairs[1].q() == -2);
  // coprime pairs only
  CHECK(parse_grid("p=-3..3;q=2").size() == 4);
  CHECK(parse_grid("p=1,2,3;q=2,3").size() == 4);
  CHECK(parse_grid("").empty());
  CHECK_THROWS_AS(parse_grid("p=1..3"), ParseError);

  CHECK(parse_knot("8_20").str() == parse_knot("catalog:8_20").str());
  CHECK_THROWS(parse_knot("nonsense"));
}

TEST_CASE("jones") {
  Run r = run([](Streams io) { return cmd_jones(parse_knot("torus:2,3"), NRange::parse("1..2"), quiet(), io); });
  CHECK(r.code == exit_ok);
  Json j = r.json();
  CHECK(j["results"][0]["polynomial"] == "1");
  CHECK(j["results"][1]["dmax"] == "9/2");

  Run braid = run([](Streams io) { return cmd_jones(parse_knot("braid:1 1 1"), NRange::parse("2"), quiet(), io); });
  CHECK(braid.json()["results"][0]["polynomial"] == j["results"][1]["polynomial"]);

  Run cable = run([](Streams io) { return cmd_jones(parse_knot("cable:torus:2,3;11,2"), NRange::parse("3"), quiet(), io); });
  CHECK(cable.json()["results"][0]["dmax"] == "47");

  RunConfig csv = quiet();
  csv.format = Format::csv;
  Run c = run([&](Streams io) { return cmd_jones(parse_knot("torus:2,3"), NRange::parse("2"), csv, io); });
  CHECK(c.out.rfind("n,exponent_quarters,coefficient\n", 0) == 0);
  CHECK(c.out.find("2,18,-1\n") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  auto once = [] {
    return run([](Streams io) {
      RunConfig cfg = quiet();
      cfg.pq_grid = parse_grid("p=-5..5;q=2,3");
      cfg.n_max = 12;
      cfg.threads = 4;
      return cmd_verify_cable({parse_knot("torus:2,3"), parse_knot("8_19")}, exact_auto, cfg, io);
    });
  };
  Run a = once(), b = once();
  CHECK(a.code == exit_ok);
  CHECK(a.out == b.out);
  Run c1 = run([](Streams io) { return cmd_catalog("all", quiet(), io); });
  Run c2 = run([](Streams io) { return cmd_catalog("all", quiet(), io); });
  CHECK(c1.out == c2.out);
}

TEST_CASE("fit and slopes") {
  Run f = run([](Streams io) { return cmd_fit(parse_knot("torus:2,3"), NRange::parse("1..8"), false, quiet(), io); });
  CHECK(f.code == exit_ok);
  CHECK(f.json()["model"]["coeffs"][0] == Json::array({"3/2", "0", "-3/2"}));
  CHECK(f.json()["jones_slopes"] == Json::array({"6"}));

  std::map<long, Rat> samples;
  for (long n = 1; n <= 12; ++n) samples[n] = Rat(3 * n * n) - Rat(13 + (n % 2 == 0 ? 1 : -1), 4);
  Run s = run([&](Streams io) { return cmd_fit_samples(samples, quiet(), io); });
  CHECK(s.json()["model"]["period"] == 2);

  Run sl = run([](Streams io) { return cmd_slopes(parse_knot("8_20"), quiet(), io); });
  CHECK(sl.code == exit_ok);
  CHECK(sl.json()["jx"] == Json::array({"-5/3", "-1"}));
  CHECK(sl.json()["js_star"].is_null());
}

TEST_CASE("predict") {
  RunConfig cfg = quiet();
  Run r = run([&](Streams io) { return cmd_predict(parse_knot("8_20"), CableParams(1, 2), "auto", cfg, io); });
  CHECK(r.code == exit_ok);
  Json j = r.json();
  CHECK(j["thresholds"]["M1"] == "1/3");
  CHECK(j["thresholds"]["M2"] == "-1/3");
  CHECK(j["agree"] == true);
}

TEST_CASE("fusion") {
  Run r = run([](Streams io) { return cmd_fusion(FusionParams(2, 1), "b", NRange::parse("0..3"), quiet(), io); });
  CHECK(r.code == exit_ok);
  CHECK(r.json()["b"] == "-1/4");
  Run d = run([](Streams io) { return cmd_fusion(FusionParams(2, 1), "delta", NRange::parse("5"), quiet(), io); });
  CHECK(d.json()["delta"][0]["value"] == "158");
  CHECK(d.json()["delta"][0]["agrees"] == true);
}

TEST_CASE("check") {
  Run r = run([](Streams io) { return cmd_check("8_20,9_44", quiet(), io); });
  CHECK(r.code == exit_ok);
  CHECK(r.json().size() == 2);
  RunConfig cfg = quiet();
  cfg.pq_grid = parse_grid("3,2");
  Run g = run([&](Streams io) { return cmd_check("8_20", cfg, io); });
  CHECK(g.json().size() == 2);
  CHECK(g.json()[1]["knot"] == "cable(8_20;3,2)");
}

TEST_CASE("errors become exit codes and one diagnostic line") {
  Run bad = run([](Streams io) { return cmd_jones(parse_knot("torus:2,4"), NRange::parse("2"), quiet(), io); });
  CHECK(bad.code != exit_ok);
  CHECK(bad.out.empty());
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
  CHECK(Json::parse(bad.err).contains("error"));

  Run budget = run([](Streams io) {
    RunConfig cfg = quiet();
    cfg.budget.max_crossings = 4;
    cfg.budget.max_strands = 2;
    return cmd_jones(parse_knot("braid:1 -2 1 -2"), NRange::parse("3"), cfg, io);
  });
  CHECK(budget.code == exit_budget);
  CHECK(Json::parse(budget.err)["error"] == "budget");

  Run hyp = run([](Streams io) { return cmd_predict(parse_knot("unknot"), CableParams(3, 2), "brute", quiet(), io); });
  CHECK(hyp.code != exit_ok);

  Run parse = run([](Streams io) { return cmd_fusion(FusionParams(2, 1), "nope", NRange::parse("1"), quiet(), io); });
  CHECK(parse.code == exit_parse);

  Run param = run([](Streams io) { return cmd_fusion(FusionParams(2, 0), "b", NRange::parse("1"), quiet(), io); });
  CHECK(param.code == exit_parameter);

  Run domain = run([](Streams io) { return cmd_jones(parse_knot("torus:2,3"), NRange::parse("0..1"), quiet(), io); });
  CHECK(domain.code == exit_domain);
}
