#include <doctest.h>

#include <numeric>

#include "cablejones/catalog.hpp"
#include "cablejones/checker.hpp"
#include "cablejones/errors.hpp"

using namespace cj;

namespace {

bool settled(Status s) { return s == Status::pass || s == Status::inapplicable; }

}  // namespace

TEST_CASE("slope check") {
  CheckResult ok = check_slope(SlopeSet{6}, SlopeSet{0}, SlopeSet{0, 6});
  CHECK(ok.status == Status::pass);
  CHECK(ok.verdicts.size() == 2);

  CheckResult bad = check_slope(SlopeSet{5}, SlopeSet{}, SlopeSet{0, 6}, true);
  CHECK(bad.status == Status::fail);
  REQUIRE(bad.verdicts.size() == 1);
  CHECK(bad.verdicts[0].subject == "5");
  CHECK(bad.verdicts[0].detail.find("witness") != std::string::npos);

  CHECK(check_slope(SlopeSet{5}, SlopeSet{}, SlopeSet{0, 6}).status == Status::not_confirmed);
  CHECK(check_slope(SlopeSet{}, SlopeSet{}, SlopeSet{0}).status == Status::inapplicable);
  CHECK(check_slope(SlopeSet{6, 5}, SlopeSet{}, SlopeSet{6}).status == Status::not_confirmed);
}

TEST_CASE("strong slope check") {
  CHECK(check_strong_slope(SlopeSet{6}, SlopeSet{0}, {SurfaceData(6, 0, 1)}).status == Status::pass);
  // chi / (|dS| b) with b = 3
  CHECK(check_strong_slope(SlopeSet{Rat(14, 3)}, SlopeSet{-2}, {SurfaceData(Rat(14, 3), -6, 1)}).status == Status::pass);
  CHECK(check_strong_slope(SlopeSet{Rat(37, 2)}, SlopeSet{Rat(-1, 2)}, {SurfaceData(Rat(37, 2), -2, 2)}).status ==
        Status::pass);

  CheckResult bad = check_strong_slope(SlopeSet{6}, SlopeSet{0}, {SurfaceData(6, -1, 1)});
  CHECK(bad.status == Status::fail);
  CHECK(bad.verdicts[0].detail.find("-1") != std::string::npos);

  // a second surface of the same slope can satisfy it
  CHECK(check_strong_slope(SlopeSet{6}, SlopeSet{0}, {SurfaceData(6, -1, 1), SurfaceData(6, 0, 2)}).status ==
        Status::pass);
  CHECK(check_strong_slope(SlopeSet{6}, SlopeSet{0}, {SurfaceData(4, 0, 1)}).status == Status::inapplicable);
  CHECK(check_strong_slope(SlopeSet{6, 4}, SlopeSet{0}, {SurfaceData(6, 0, 1)}).status == Status::not_confirmed);
}

TEST_CASE("strong slope check on the mirror side") {
  CheckResult r = check_strong_slope_mirror(SlopeSet{0}, SlopeSet{5}, {SurfaceData(0, -5, 1)});
  CHECK(r.status == Status::pass);
  CHECK(r.side == "-");
  CheckResult eight = check_strong_slope_mirror(SlopeSet{-4}, SlopeSet{1}, {SurfaceData(-4, -1, 1)});
  CHECK(eight.status == Status::pass);
  CHECK(eight.verdicts[0].subject == "-4");
  CHECK(check_strong_slope_mirror(SlopeSet{-4}, SlopeSet{-1}, {SurfaceData(-4, -1, 1)}).status == Status::fail);
}

TEST_CASE("b nonpositive check") {
  KnotFlags plain, torus, trivial;
  torus.torus = true;
  trivial.trivial = true;
  CHECK(check_b_nonpositive(std::vector<Rat>{Rat(-1, 4)}, plain).status == Status::pass);
  CHECK(check_b_nonpositive(std::vector<Rat>{Rat(-1), Rat(0)}, plain).status == Status::unresolved);
  CHECK(check_b_nonpositive(std::vector<Rat>{Rat(0)}, torus).status == Status::pass);
  CHECK(check_b_nonpositive(std::vector<Rat>{Rat(0), Rat(1, 2)}, torus).status == Status::fail);
  CHECK(check_b_nonpositive(std::vector<Rat>{Rat(1, 2)}, trivial).status == Status::inapplicable);
  // repeated residues give one verdict
  CHECK(check_b_nonpositive(QuasiPoly({{1, -1, 0}, {1, -1, 1}, {1, -2, 0}}), plain).verdicts.size() == 2);
}

TEST_CASE("catalog entries pass") {
  for (const auto& name : catalog_names("all")) {
    ConjectureReport rep = check_entry(catalog(name));
    CHECK_MESSAGE(rep.ok(), name);
    for (const auto& c : rep.checks) CHECK_MESSAGE(settled(c.status), name << " " << c.conjecture << c.side);
  }
  for (long p : {-11L, -9L, -7L, -3L, -1L, 7L, 9L, 11L, 13L, 15L}) {
    ConjectureReport rep = check_entry(pretzel_entry(p));
    CHECK_MESSAGE(rep.ok(), p);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.status != Status::unresolved, p << " " << c.conjecture);
  }
}

TEST_CASE("cables of catalog knots keep the invariants") {
  long built = 0;
  for (const auto& name : catalog_names("all")) {
    CatalogEntry base = catalog(name);
    for (long q : {2L, 3L, -2L})
      for (long p = -9; p <= 9; ++p) {
        if (std::gcd(p, q) != 1) continue;
        CatalogEntry c = cable_entry(base, CableParams(p, q));
        ++built;
        CHECK(c.flags.cable);
        CHECK(c.js.subset_of(c.bs_known));
        CHECK(c.js_star.subset_of(c.bs_known));
        ConjectureReport rep = check_entry(c);
        CHECK_MESSAGE(rep.ok(), c.name);
        for (const auto& chk : rep.checks) CHECK_MESSAGE(chk.status != Status::unresolved, c.name);
      }
  }
  CHECK(built > 300);
}

TEST_CASE("cables of the unknot are torus knots") {
  CatalogEntry t = cable_entry(catalog("unknot"), CableParams(3, 2));
  CHECK(t.flags.torus);
  CHECK(t.js == SlopeSet{6});
  CHECK(check_entry(t).ok());
  CHECK(cable_entry(catalog("unknot"), CableParams(1, 2)).flags.trivial);
}
