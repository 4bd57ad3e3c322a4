#pragma once
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cablejones/bracket.hpp"
#include "cablejones/cabling.hpp"
#include "cablejones/fusion.hpp"
#include "cablejones/presentation.hpp"

namespace cj::cli {

enum class Format { json, csv };

// Inclusive color range, written "lo..hi" or "n".
struct NRange {
  long lo = 1, hi = 1;
  static NRange parse(std::string_view text);
};

struct RunConfig {
  long n_max = 25;
  std::vector<CableParams> pq_grid;
  int pi_max = 12;
  EvaluatorBudget budget = EvaluatorBudget::from_environment();
  Format format = Format::json;
  int threads = 1;
  bool progress = true;  // progress lines on the diagnostic stream
};

// Results go to out, progress and diagnostics to err.
struct Streams {
  std::ostream& out;
  std::ostream& err;
};

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;  // a check failed or degrees disagreed
inline constexpr int exit_parse = 2;
inline constexpr int exit_parameter = 3;
inline constexpr int exit_budget = 4;
inline constexpr int exit_hypothesis = 5;
inline constexpr int exit_domain = 6;
inline constexpr int exit_structure = 7;
inline constexpr int exit_internal = 70;

// "p1,q1;p2,q2" lists pairs; "p=-15..15;q=2,3,-2" takes the coprime part of the product.
std::vector<CableParams> parse_grid(std::string_view text);
// A presentation, or a bare catalog name.
KnotPresentation parse_knot(std::string_view text);

// Runs a command, turning library errors into one JSON diagnostic line on err
// and the matching exit code.
int run_guarded(const std::function<int()>& body, Streams io);

int cmd_jones(const KnotPresentation& k, NRange colors, const RunConfig& cfg, Streams io);
// Fits d_+ (or d_- with minus) sampled from exact polynomials, or from fusion lattice maxima.
int cmd_fit(const KnotPresentation& k, NRange colors, bool minus, const RunConfig& cfg, Streams io);
int cmd_fit_samples(const std::map<long, Rat>& samples, const RunConfig& cfg, Streams io);
int cmd_slopes(const KnotPresentation& k, const RunConfig& cfg, Streams io);
// method: auto | brute | closed | quasi-constant
int cmd_predict(const KnotPresentation& base, CableParams params, const std::string& method, const RunConfig& cfg,
                Streams io);

inline constexpr long exact_all = -1;
// Torus knots and their cables exact throughout, other diagrams exact up to color 3.
inline constexpr long exact_auto = -2;

// Degrees of cable_jones against every applicable predictor over cfg.pq_grid and
// colors up to cfg.n_max. Colors above exact_colors come from the degree models.
int cmd_verify_cable(const std::vector<KnotPresentation>& bases, long exact_colors, const RunConfig& cfg,
                     Streams io);
// report: all | case | delta | dplus | b
int cmd_fusion(const FusionParams& fp, const std::string& report, NRange colors, const RunConfig& cfg, Streams io);
// selector: a catalog name, a group (all, period2, montesinos, pretzel) or a comma list.
// Cables of each entry over cfg.pq_grid are checked as well.
int cmd_check(const std::string& selector, const RunConfig& cfg, Streams io);
int cmd_catalog(const std::string& selector, const RunConfig& cfg, Streams io);

}  // namespace cj::cli
