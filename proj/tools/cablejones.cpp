// Command-line front end: results on stdout, progress and diagnostics on stderr.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cablejones/commands.hpp"
#include "cablejones/errors.hpp"
#include "cablejones/json_io.hpp"

using namespace cj;
using namespace cj::cli;

namespace {

struct KnotArgs {
  std::string knot, braid, pd, catalog_name;
  std::vector<long> torus, fusion;
  std::vector<std::string> cable;

  void attach(CLI::App* app) {
    app->add_option("--knot,-k", knot, "presentation: torus:p,q | braid:<word> | pd:<json> | cable:<base>;p,q | "
                                       "fusion:m1,m2 | catalog:<name> | <catalog name>");
    app->add_option("--torus", torus, "torus knot T(p,q)")->expected(2);
    app->add_option("--braid", braid, "closed braid word, e.g. \"1 1 1\"");
    app->add_option("--pd", pd, "PD code JSON");
    app->add_option("--cable", cable, "cable of a presentation: BASE P Q")->expected(3);
    app->add_option("--fusion", fusion, "2-fusion knot K(m1,m2)")->expected(2);
    app->add_option("--catalog", catalog_name, "catalog knot name");
  }

  KnotPresentation resolve() const {
    std::vector<std::string> given;
    if (!knot.empty()) given.push_back(knot);
    if (!torus.empty()) given.push_back("torus:" + std::to_string(torus[0]) + "," + std::to_string(torus[1]));
    if (!braid.empty()) given.push_back("braid:" + braid);
    if (!pd.empty()) given.push_back("pd:" + pd);
    if (!cable.empty()) given.push_back("cable:" + cable[0] + ";" + cable[1] + "," + cable[2]);
    if (!fusion.empty()) given.push_back("fusion:" + std::to_string(fusion[0]) + "," + std::to_string(fusion[1]));
    if (!catalog_name.empty()) given.push_back("catalog:" + catalog_name);
    if (given.size() != 1) throw ParseError("give exactly one knot (--knot, --torus, --braid, --pd, --cable, --fusion, --catalog)");
    return parse_knot(given.front());
  }
};

struct CommonArgs {
  std::string format = "json";
  int threads = 1;
  int pi_max = 12;
  int max_crossings = 0, max_strands = 0;
  bool quiet = false;

  void attach(CLI::App* app) {
    app->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--threads,-j", threads, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--pi-max", pi_max, "largest period tried by fits")->check(CLI::PositiveNumber);
    app->add_option("--max-crossings", max_crossings, "state-sum budget (default from CABLEJONES_MAX_CROSSINGS or 26)")
        ->check(CLI::PositiveNumber);
    app->add_option("--max-strands", max_strands, "Temperley-Lieb budget (default from CABLEJONES_MAX_STRANDS or 10)")
        ->check(CLI::PositiveNumber);
    app->add_flag("--quiet", quiet, "no progress lines");
  }

  RunConfig config() const {
    RunConfig cfg;
    cfg.format = format == "csv" ? Format::csv : Format::json;
    cfg.threads = threads;
    cfg.pi_max = pi_max;
    if (max_crossings > 0) cfg.budget.max_crossings = max_crossings;
    if (max_strands > 0) cfg.budget.max_strands = max_strands;
    cfg.budget.threads = threads;
    cfg.progress = !quiet;
    return cfg;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Jones polynomials, degree quasi-polynomials, cabling and slope checks"};
  app.require_subcommand(1);
  Streams io{std::cout, std::cerr};
  std::function<int()> action;

  // jones
  KnotArgs jones_knot;
  CommonArgs jones_common;
  std::string jones_n = "1..4";
  auto* jones = app.add_subcommand("jones", "colored Jones polynomials of a knot");
  jones_knot.attach(jones);
  jones_common.attach(jones);
  jones->add_option("--n", jones_n, "colors, \"lo..hi\" or \"n\"");
  jones->callback([&] {
    action = [&] { return cmd_jones(jones_knot.resolve(), NRange::parse(jones_n), jones_common.config(), io); };
  });

  // fit
  KnotArgs fit_knot;
  CommonArgs fit_common;
  std::string fit_n = "1..12", fit_samples;
  bool fit_minus = false;
  auto* fitc = app.add_subcommand("fit", "fit a degree quasi-polynomial");
  fit_knot.attach(fitc);
  fit_common.attach(fitc);
  fitc->add_option("--n", fit_n, "colors sampled");
  fitc->add_option("--samples", fit_samples, "JSON file of degree samples {\"n\": \"value\"} instead of a knot");
  fitc->add_flag("--minus", fit_minus, "fit the lowest degree instead of the highest");
  fitc->callback([&] {
    action = [&] {
      RunConfig cfg = fit_common.config();
      if (!fit_samples.empty())
        return cmd_fit_samples(io::samples_from_json(io::Json::parse(read_file(fit_samples))), cfg, io);
      return cmd_fit(fit_knot.resolve(), NRange::parse(fit_n), fit_minus, cfg, io);
    };
  });

  // slopes
  KnotArgs slopes_knot;
  CommonArgs slopes_common;
  auto* slopes = app.add_subcommand("slopes", "degree models and Jones slope sets of a knot");
  slopes_knot.attach(slopes);
  slopes_common.attach(slopes);
  slopes->callback([&] { action = [&] { return cmd_slopes(slopes_knot.resolve(), slopes_common.config(), io); }; });

  // predict
  KnotArgs predict_knot;
  CommonArgs predict_common;
  long predict_p = 0, predict_q = 0, predict_n_max = 25;
  std::string predict_method = "auto";
  auto* predict = app.add_subcommand("predict", "predict the degree model of a (p,q)-cable");
  predict_knot.attach(predict);
  predict_common.attach(predict);
  predict->add_option("--p", predict_p, "cable parameter p")->required();
  predict->add_option("--q", predict_q, "cable parameter q")->required();
  predict->add_option("--method", predict_method, "auto, brute, closed or quasi-constant")
      ->check(CLI::IsMember({"auto", "brute", "closed", "quasi-constant"}));
  predict->add_option("--n-max", predict_n_max, "largest color compared between methods");
  predict->callback([&] {
    action = [&] {
      RunConfig cfg = predict_common.config();
      cfg.n_max = predict_n_max;
      return cmd_predict(predict_knot.resolve(), CableParams(predict_p, predict_q), predict_method, cfg, io);
    };
  });

  // verify-cable
  CommonArgs verify_common;
  std::vector<std::string> verify_knots;
  std::string verify_grid = "p=-15..15;q=2,3,-2", verify_exact = "auto";
  long verify_n_max = 25;
  auto* verify = app.add_subcommand("verify-cable", "cable_jones degrees against the predictors over a (p,q) grid");
  verify_common.attach(verify);
  verify->add_option("--knot,-k", verify_knots, "base presentation (repeatable)")->required();
  verify->add_option("--grid", verify_grid, "\"p1,q1;p2,q2\" or \"p=<values>;q=<values>\"");
  verify->add_option("--n-max", verify_n_max, "largest color checked");
  verify->add_option("--exact-colors", verify_exact, "auto, all, or the largest color evaluated exactly");
  verify->callback([&] {
    action = [&] {
      RunConfig cfg = verify_common.config();
      cfg.n_max = verify_n_max;
      cfg.pq_grid = parse_grid(verify_grid);
      std::vector<KnotPresentation> bases;
      for (const auto& k : verify_knots) bases.push_back(parse_knot(k));
      long exact = exact_auto;
      if (verify_exact == "all") exact = exact_all;
      else if (verify_exact != "auto") exact = NRange::parse(verify_exact).lo;
      return cmd_verify_cable(bases, exact, cfg, io);
    };
  });

  // fusion
  CommonArgs fusion_common;
  long m1 = 0, m2 = 0;
  std::string fusion_report = "all", fusion_n = "0..10";
  auto* fusion = app.add_subcommand("fusion", "2-fusion knot degree data");
  fusion_common.attach(fusion);
  fusion->add_option("--m1", m1, "m1")->required();
  fusion->add_option("--m2", m2, "m2, not -1 or 0")->required();
  fusion->add_option("--report", fusion_report, "all, case, delta, dplus or b")
      ->check(CLI::IsMember({"all", "case", "delta", "dplus", "b"}));
  fusion->add_option("--n", fusion_n, "values of n for delta(n)");
  fusion->callback([&] {
    action = [&] {
      return cmd_fusion(FusionParams(m1, m2), fusion_report, NRange::parse(fusion_n), fusion_common.config(), io);
    };
  });

  // check
  CommonArgs check_common;
  std::string check_selector = "all", check_grid;
  auto* check = app.add_subcommand("check", "slope, strong slope and b <= 0 checks on catalog knots");
  check_common.attach(check);
  check->add_option("--catalog", check_selector, "name, group (all, period2, montesinos, pretzel) or comma list");
  check->add_option("--grid", check_grid, "also check the (p,q)-cables of each knot");
  check->callback([&] {
    action = [&] {
      RunConfig cfg = check_common.config();
      cfg.pq_grid = parse_grid(check_grid);
      return cmd_check(check_selector, cfg, io);
    };
  });

  // catalog
  CommonArgs catalog_common;
  std::string catalog_selector = "all";
  auto* cat = app.add_subcommand("catalog", "export catalog entries");
  catalog_common.attach(cat);
  cat->add_option("--name", catalog_selector, "name, group or comma list");
  cat->callback([&] { action = [&] { return cmd_catalog(catalog_selector, catalog_common.config(), io); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : exit_parse;
  }
  return run_guarded(action, io);
}
