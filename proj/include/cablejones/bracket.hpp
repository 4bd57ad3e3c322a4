#pragma once

#include <map>

#include "cablejones/braid.hpp"
#include "cablejones/laurent.hpp"
#include "cablejones/pd_code.hpp"

namespace cj {

// Coefficients of the Chebyshev polynomial S_n(x): degree -> coefficient.
struct ChebyshevExpansion {
  std::map<int, Int> coefficients;
};

ChebyshevExpansion chebyshev(int n);

struct EvaluatorBudget {
  int max_crossings = 26;  // state-sum backend
  int max_strands = 10;    // Temperley-Lieb backend
  int threads = 1;
  // Defaults overridden by CABLEJONES_MAX_CROSSINGS / CABLEJONES_MAX_STRANDS.
  static EvaluatorBudget from_environment();
};

enum class Backend { automatic, state_sum, temperley_lieb };

// Bracket with A = v^(-1/4), loop value -(v^(1/2) + v^(-1/2)), empty diagram 1.
QLaurent kauffman_bracket(const PDCode& d, const EvaluatorBudget& budget = {});
QLaurent kauffman_bracket(const BraidWord& b, const EvaluatorBudget& budget = {},
                          Backend backend = Backend::automatic);

// Framing-corrected colored Jones polynomial; J(1) = 1.
QLaurent colored_jones(const PDCode& d, long n, const EvaluatorBudget& budget = {});
QLaurent colored_jones(const BraidWord& b, long n, const EvaluatorBudget& budget = {},
                       Backend backend = Backend::automatic);

}  // namespace cj
