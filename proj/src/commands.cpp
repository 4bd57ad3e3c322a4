#include "cablejones/commands.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "cablejones/catalog.hpp"
#include "cablejones/checker.hpp"
#include "cablejones/errors.hpp"
#include "cablejones/families.hpp"
#include "cablejones/json_io.hpp"

namespace cj::cli {

using io::Json;

namespace {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

long parse_long(std::string_view text, const std::string& what) {
  std::string t = trim(text);
  try {
    size_t used = 0;
    long v = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer for " + what + ": '" + t + "'");
  }
}

std::vector<long> parse_values(std::string_view text, const std::string& what) {
  std::vector<long> out;
  std::string t = trim(text);
  auto dots = t.find("..");
  if (dots != std::string::npos) {
    long lo = parse_long(t.substr(0, dots), what), hi = parse_long(t.substr(dots + 2), what);
    if (lo > hi) throw ParseError("empty range for " + what + ": '" + t + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_long(item, what));
  if (out.empty()) throw ParseError("no values for " + what);
  return out;
}

// Splits on sep outside parentheses.
std::vector<std::string> split_top(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
  return out;
}

std::vector<std::string> resolve_names(const std::string& selector) {
  std::vector<std::string> out;
  for (const auto& tok : split_top(selector, ',')) {
    if (tok == "all" || tok == "period2" || tok == "montesinos" || tok == "pretzel") {
      for (const auto& n : catalog_names(tok)) out.push_back(n);
    } else {
      catalog(tok);  // validates
      out.push_back(tok);
    }
  }
  std::vector<std::string> unique;
  for (const auto& n : out)
    if (std::find(unique.begin(), unique.end(), n) == unique.end()) unique.push_back(n);
  if (unique.empty()) throw ParseError("empty catalog selector");
  return unique;
}

// Runs fn(i) for i in [0, count) on up to `threads` workers; fn must not throw.
template <class F>
void parallel_for(size_t count, int threads, F fn) {
  size_t workers = std::min<size_t>(std::max(threads, 1), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << "\n";
}

std::string join(const SlopeSet& s) {
  std::string out;
  for (const auto& r : s.finite()) out += (out.empty() ? "" : " ") + r.str();
  if (s.has_infinity()) out += (out.empty() ? "" : " ") + std::string("inf");
  return out;
}

void emit(const Json& j, Streams io) { io.out << j.dump(2) << "\n"; }

void progress(const RunConfig& cfg, Streams io, const std::string& line) {
  if (cfg.progress) io.err << line << std::endl;
}

Json error_json(const std::exception& e) {
  Json j{{"message", e.what()}};
  if (const auto* c = dynamic_cast<const CancellationRisk*>(&e)) {
    j = Json{{"error", "cancellation_risk"}, {"message", e.what()}, {"n", c->n()}};
    Json tied = Json::array();
    for (const auto& k : c->tied()) tied.push_back(k.k().str());
    j["tied"] = tied;
  } else if (const auto* f = dynamic_cast<const FitError*>(&e)) {
    j = Json{{"error", "fit"}, {"message", e.what()}, {"first_inconsistent", f->first_inconsistent()}};
  } else if (const auto* b = dynamic_cast<const BudgetError*>(&e)) {
    j = Json{{"error", "budget"}, {"message", e.what()}, {"bound", b->bound()},
             {"requested", b->requested()}, {"limit", b->limit()}};
  } else if (dynamic_cast<const HypothesisError*>(&e)) {
    j = Json{{"error", "hypothesis"}, {"message", e.what()}};
  } else if (dynamic_cast<const ParseError*>(&e)) {
    j = Json{{"error", "parse"}, {"message", e.what()}};
  } else if (dynamic_cast<const ParameterError*>(&e)) {
    j = Json{{"error", "parameter"}, {"message", e.what()}};
  } else if (dynamic_cast<const StructureError*>(&e)) {
    j = Json{{"error", "structure"}, {"message", e.what()}};
  } else if (dynamic_cast<const DomainError*>(&e)) {
    j = Json{{"error", "domain"}, {"message", e.what()}};
  } else {
    j = Json{{"error", "internal"}, {"message", e.what()}};
  }
  return j;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetError*>(&e)) return exit_budget;
  if (dynamic_cast<const HypothesisError*>(&e)) return exit_hypothesis;
  if (dynamic_cast<const ParseError*>(&e)) return exit_parse;
  if (dynamic_cast<const ParameterError*>(&e)) return exit_parameter;
  if (dynamic_cast<const StructureError*>(&e)) return exit_structure;
  if (dynamic_cast<const DomainError*>(&e)) return exit_domain;
  return exit_internal;
}

// d_+ samples of a fusion knot from the lattice maxima.
// Lattice maxima, less the correction of the half-integer C-2 subcase.
std::map<long, Rat> fusion_samples(const FusionParams& fp, NRange colors) {
  std::map<long, Rat> out;
  for (long n = std::max(1L, colors.lo); n <= colors.hi; ++n)
    out[n] = delta_bruteforce(fp, n - 1).first - delta_detail(fp, n - 1).correction + Rat(n - 1, 2);
  return out;
}

Json fit_json(const std::map<long, Rat>& samples, const QuasiPoly& model) {
  return Json{{"samples", samples.size()},
              {"model", io::to_json(model)},
              {"jones_slopes", io::to_json(jones_slopes(model))},
              {"jx", io::to_json(jx_set(model))}};
}

void fit_csv(std::ostream& os, const QuasiPoly& model) {
  csv_row(os, {"residue", "a", "b", "d", "valid_from"});
  for (size_t i = 0; i < model.coeffs().size(); ++i) {
    const auto& r = model.coeffs()[i];
    csv_row(os, {std::to_string(i), r.a.str(), r.b.str(), r.d.str(), std::to_string(model.valid_from())});
  }
}

bool collides(const QuasiPoly& base, CableParams c) {
  for (const auto& r : base.coeffs())
    if (c.ratio() == Rat(4) * r.a) return true;
  return false;
}

// Sampling range wide enough for the fit of a cable model.
long fit_horizon(const QuasiPoly& base, long n_max) {
  return std::max(n_max, base.valid_from() + 12L * lcm_long(base.period(), 2) + 20);
}

struct MethodOutcome {
  std::string method;
  std::optional<CablePrediction> prediction;
  Json error;
};

std::vector<MethodOutcome> run_predictors(const QuasiPoly& dp, CableParams c, const std::string& method,
                                          const RunConfig& cfg) {
  std::vector<MethodOutcome> out;
  long hi = fit_horizon(dp, cfg.n_max);
  auto attempt = [&](const std::string& name, const std::function<CablePrediction()>& fn) {
    MethodOutcome m{name, std::nullopt, nullptr};
    try {
      m.prediction = fn();
    } catch (const Error& e) {
      if (method != "auto") throw;
      m.error = error_json(e);
    }
    out.push_back(std::move(m));
  };
  if (method == "auto" || method == "brute")
    attempt("brute", [&] { return predict_cable_degree_untied(DegreeTable(dp), c, dp.valid_from(), hi, cfg.pi_max); });
  if (method == "closed" || (method == "auto" && dp.period() <= 2))
    attempt("closed", [&] { return closed_form_period2(dp, c); });
  if (method == "quasi-constant" || (method == "auto" && dp.constant_a() && dp.period() > 1))
    attempt("quasi-constant", [&] {
      if (!admissible_constant_a(dp, c))
        throw HypothesisError("(p,q) = " + c.str() + " lies outside the M1/M2 admissible region");
      return past_ties([&](long lo) { return quasi_constant_prediction(dp, c, lo, hi, cfg.pi_max); },
                       dp.valid_from(), hi);
    });
  if (out.empty()) throw ParseError("unknown prediction method '" + method + "'");
  return out;
}

// Whether a presentation's polynomials are cheap at every color.
bool formula_backed(const KnotPresentation& k) {
  const auto& v = k.value();
  if (std::holds_alternative<TorusSpec>(v)) return true;
  if (const auto* c = std::get_if<CableSpec>(&v)) return formula_backed(*c->base);
  if (const auto* r = std::get_if<CatalogRef>(&v)) return r->name == "unknot";
  return false;
}

}  // namespace

NRange NRange::parse(std::string_view text) {
  std::string t = trim(text);
  NRange r;
  auto dots = t.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_long(t, "color");
  } else {
    r.lo = parse_long(t.substr(0, dots), "color");
    r.hi = parse_long(t.substr(dots + 2), "color");
  }
  if (r.lo > r.hi) throw ParseError("empty color range '" + t + "'");
  return r;
}

std::vector<CableParams> parse_grid(std::string_view text) {
  std::vector<CableParams> out;
  std::string t = trim(text);
  if (t.empty()) return out;
  if (t.rfind("p=", 0) == 0) {
    auto semi = t.find(';');
    if (semi == std::string::npos || t.compare(semi + 1, 2, "q=") != 0)
      throw ParseError("grid form is 'p=<values>;q=<values>'");
    auto ps = parse_values(t.substr(2, semi - 2), "p");
    auto qs = parse_values(t.substr(semi + 3), "q");
    for (long q : qs)
      for (long p : ps)
        if (std::abs(q) > 1 && std::gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
  }
  for (const auto& pair : split_top(t, ';')) {
    auto comma = pair.find(',');
    if (comma == std::string::npos) throw ParseError("grid entry needs 'p,q': '" + pair + "'");
    out.emplace_back(parse_long(pair.substr(0, comma), "p"), parse_long(pair.substr(comma + 1), "q"));
  }
  return out;
}

KnotPresentation parse_knot(std::string_view text) {
  std::string t = trim(text);
  if (t.find(':') == std::string::npos) return KnotPresentation(CatalogRef{(catalog(t), t)});
  return KnotPresentation::parse(t);
}

int run_guarded(const std::function<int()>& body, Streams io) {
  try {
    return body();
  } catch (const std::exception& e) {
    io.err << error_json(e).dump() << std::endl;
    return exit_code_for(e);
  }
}

int cmd_jones(const KnotPresentation& k, NRange colors, const RunConfig& cfg, Streams io) {
  if (colors.lo < 1) throw DomainError("colors start at 1");
  JonesSource source = jones_source(k, cfg.budget);
  std::vector<QLaurent> polys;
  for (long n = colors.lo; n <= colors.hi; ++n) {
    polys.push_back(source(n));
    progress(cfg, io, "jones: n = " + std::to_string(n) + " done");
  }
  if (cfg.format == Format::csv) {
    csv_row(io.out, {"n", "exponent_quarters", "coefficient"});
    for (size_t i = 0; i < polys.size(); ++i)
      for (const auto& t : polys[i].terms())
        csv_row(io.out, {std::to_string(colors.lo + long(i)), std::to_string(t.e), t.c.get_str()});
    return exit_ok;
  }
  Json results = Json::array();
  for (size_t i = 0; i < polys.size(); ++i) {
    auto [hi, lo] = polys[i].degrees();
    results.push_back(Json{{"n", colors.lo + long(i)},
                           {"dmax", hi.str()},
                           {"dmin", lo.str()},
                           {"polynomial", polys[i].str()},
                           {"terms", io::to_json(polys[i])}});
  }
  emit(Json{{"knot", k.str()}, {"results", results}}, io);
  return exit_ok;
}

int cmd_fit(const KnotPresentation& k, NRange colors, bool minus, const RunConfig& cfg, Streams io) {
  std::map<long, Rat> samples;
  if (const auto* fp = std::get_if<FusionParams>(&k.value())) {
    if (minus) throw DomainError("fusion knots carry d_+ data only");
    samples = fusion_samples(*fp, colors);
  } else {
    JonesSource source = jones_source(k, cfg.budget);
    for (long n = std::max(1L, colors.lo); n <= colors.hi; ++n) {
      auto [hi, lo] = source(n).degrees();
      samples[n] = minus ? lo : hi;
      progress(cfg, io, "fit: n = " + std::to_string(n) + " sampled");
    }
  }
  QuasiPoly model = fit(samples, cfg.pi_max);
  if (cfg.format == Format::csv) {
    fit_csv(io.out, model);
    return exit_ok;
  }
  Json j{{"knot", k.str()}, {"side", minus ? "-" : "+"}};
  j.update(fit_json(samples, model));
  emit(j, io);
  return exit_ok;
}

int cmd_fit_samples(const std::map<long, Rat>& samples, const RunConfig& cfg, Streams io) {
  QuasiPoly model = fit(samples, cfg.pi_max);
  if (cfg.format == Format::csv) {
    fit_csv(io.out, model);
    return exit_ok;
  }
  emit(fit_json(samples, model), io);
  return exit_ok;
}

int cmd_slopes(const KnotPresentation& k, const RunConfig& cfg, Streams io) {
  QuasiPoly dp = degree_model(k);
  // the d_- side is reported as null when no model is on file
  std::optional<QuasiPoly> dm;
  try {
    dm = degree_model_minus(k);
  } catch (const DomainError&) {
  }
  if (cfg.format == Format::csv) {
    csv_row(io.out, {"knot", "set", "values"});
    csv_row(io.out, {k.str(), "js", join(jones_slopes(dp))});
    if (dm) csv_row(io.out, {k.str(), "js_star", join(jones_slopes(*dm))});
    csv_row(io.out, {k.str(), "jx", join(jx_set(dp))});
    if (dm) csv_row(io.out, {k.str(), "jx_star", join(jx_set(*dm))});
    return exit_ok;
  }
  auto side = [&](auto f) { return dm ? f(*dm) : Json(nullptr); };
  emit(Json{{"knot", k.str()},
            {"dplus", io::to_json(dp)},
            {"dminus", side([](const QuasiPoly& q) { return io::to_json(q); })},
            {"js", io::to_json(jones_slopes(dp))},
            {"js_star", side([](const QuasiPoly& q) { return io::to_json(jones_slopes(q)); })},
            {"jx", io::to_json(jx_set(dp))},
            {"jx_star", side([](const QuasiPoly& q) { return io::to_json(jx_set(q)); })}},
       io);
  return exit_ok;
}

int cmd_predict(const KnotPresentation& base, CableParams params, const std::string& method, const RunConfig& cfg,
                Streams io) {
  QuasiPoly dp = degree_model(base);
  auto outcomes = run_predictors(dp, params, method, cfg);

  // agreement of the successful methods on their common range
  bool agree = true;
  std::vector<const CablePrediction*> ok;
  for (const auto& m : outcomes)
    if (m.prediction) ok.push_back(&*m.prediction);
  if (ok.size() > 1) {
    long from = 1;
    for (const auto* p : ok) from = std::max({from, p->model.valid_from(), p->tied_below + 1});
    for (long n = from; n <= std::max(from, cfg.n_max); ++n)
      for (const auto* p : ok)
        if (p->model.eval(n) != ok.front()->model.eval(n)) agree = false;
  }

  if (cfg.format == Format::csv) {
    csv_row(io.out, {"method", "residue", "a", "b", "d", "valid_from", "status"});
    for (const auto& m : outcomes) {
      if (!m.prediction) {
        csv_row(io.out, {m.method, "", "", "", "", "", m.error["message"].get<std::string>()});
        continue;
      }
      const auto& model = m.prediction->model;
      for (size_t i = 0; i < model.coeffs().size(); ++i) {
        const auto& r = model.coeffs()[i];
        csv_row(io.out, {m.method, std::to_string(i), r.a.str(), r.b.str(), r.d.str(),
                         std::to_string(model.valid_from()), "ok"});
      }
    }
  } else {
    Json j{{"knot", base.str()}, {"params", io::to_json(params)}, {"base_model", io::to_json(dp)}};
    if (dp.constant_a()) {
      Thresholds t = m1_m2(dp);
      j["thresholds"] = Json{{"M1", t.m1.str()}, {"M2", t.m2.str()}, {"admissible", admissible_constant_a(dp, params)}};
    }
    Json results = Json::object();
    for (const auto& m : outcomes) results[m.method] = m.prediction ? io::to_json(*m.prediction) : m.error;
    j["predictions"] = results;
    j["agree"] = agree;
    emit(j, io);
  }
  return agree ? exit_ok : exit_failed;
}

int cmd_verify_cable(const std::vector<KnotPresentation>& bases, long exact_colors, const RunConfig& cfg,
                     Streams io) {
  if (cfg.pq_grid.empty()) throw ParseError("verify-cable needs a (p,q) grid");
  struct Base {
    std::string label;
    QuasiPoly dp, dm;
    JonesSource source;
    std::string source_kind;
  };
  std::vector<Base> prepared;
  for (const auto& k : bases) {
    Base b{k.str(), degree_model(k), degree_model_minus(k), nullptr, ""};
    bool fusion = std::holds_alternative<FusionParams>(k.value());
    JonesSource model = model_jones_source(b.dp, b.dm);
    if (!fusion && (exact_colors == exact_all || (exact_colors == exact_auto && formula_backed(k)))) {
      b.source = jones_source(k, cfg.budget);
      b.source_kind = "exact";
    } else {
      long m = fusion ? 0 : (exact_colors == exact_auto ? 3 : std::max(0L, exact_colors));
      JonesSource exact = m > 0 ? jones_source(k, cfg.budget) : nullptr;
      b.source = [exact, model, m](long c) { return c <= m ? exact(c) : model(c); };
      b.source_kind = "exact up to color " + std::to_string(m) + ", degree model above";
    }
    prepared.push_back(std::move(b));
  }

  struct Task {
    size_t base;
    CableParams params;
  };
  std::vector<Task> tasks;
  for (size_t i = 0; i < prepared.size(); ++i)
    for (const auto& c : cfg.pq_grid) tasks.push_back({i, c});

  std::vector<Json> results(tasks.size());
  std::atomic<size_t> done{0};
  std::mutex err_mu;
  parallel_for(tasks.size(), cfg.threads, [&](size_t t) {
    const Base& b = prepared[tasks[t].base];
    CableParams c = tasks[t].params;
    Json r{{"knot", b.label}, {"p", c.p()}, {"q", c.q()}};
    try {
      if (collides(b.dp, c)) {
        r["status"] = "collision";
      } else {
        auto outcomes = run_predictors(b.dp, c, "auto", cfg);
        long from = 1;
        Json methods = Json::array();
        Json errors = Json::object();
        std::vector<std::pair<std::string, const CablePrediction*>> ok;
        for (const auto& m : outcomes) {
          if (m.prediction) {
            ok.emplace_back(m.method, &*m.prediction);
            methods.push_back(m.method);
            from = std::max({from, m.prediction->model.valid_from(), m.prediction->tied_below + 1});
          } else if (m.method != "quasi-constant" || m.error.value("error", "") != "hypothesis") {
            errors[m.method] = m.error;
          }
        }
        r["methods"] = methods;
        r["valid_from"] = from;
        Json mismatch = nullptr;
        long checked = 0;
        for (long n = from; n <= cfg.n_max && mismatch.is_null(); ++n) {
          Rat d = cable_jones(b.source, c, n).degrees().first;
          ++checked;
          for (const auto& [name, p] : ok)
            if (p->model.eval(n) != d) {
              mismatch = Json{{"n", n}, {"cable_degree", d.str()}, {"method", name}, {"predicted", p->model.eval(n).str()}};
              break;
            }
        }
        r["colors_checked"] = checked;
        r["mismatch"] = mismatch;
        if (!errors.empty()) r["errors"] = errors;
        if (!mismatch.is_null()) r["status"] = "mismatch";
        else if (!errors.empty() || ok.empty()) r["status"] = "error";
        else if (checked == 0) r["status"] = "insufficient_range";
        else r["status"] = "agree";
      }
    } catch (const std::exception& e) {
      r["status"] = "error";
      r["errors"] = Json{{"setup", error_json(e)}};
    }
    results[t] = std::move(r);
    size_t d = ++done;
    if (cfg.progress && (d % 25 == 0 || d == tasks.size())) {
      std::lock_guard lock(err_mu);
      io.err << "verify-cable: " << d << "/" << tasks.size() << std::endl;
    }
  });

  long agree = 0, collisions = 0, bad = 0;
  for (const auto& r : results) {
    std::string s = r["status"];
    if (s == "agree") ++agree;
    else if (s == "collision") ++collisions;
    else ++bad;
  }
  if (cfg.format == Format::csv) {
    csv_row(io.out, {"knot", "p", "q", "status", "valid_from", "colors_checked"});
    for (const auto& r : results)
      csv_row(io.out, {r["knot"].get<std::string>(), std::to_string(r["p"].get<long>()),
                       std::to_string(r["q"].get<long>()), r["status"].get<std::string>(),
                       r.contains("valid_from") ? std::to_string(r["valid_from"].get<long>()) : "",
                       r.contains("colors_checked") ? std::to_string(r["colors_checked"].get<long>()) : ""});
  } else {
    Json sources = Json::array();
    for (const auto& b : prepared) sources.push_back(Json{{"knot", b.label}, {"source", b.source_kind}});
    Json list = Json::array();
    for (auto& r : results) list.push_back(std::move(r));
    emit(Json{{"n_max", cfg.n_max},
              {"sources", sources},
              {"results", list},
              {"summary", {{"cases", tasks.size()}, {"agree", agree}, {"collisions", collisions}, {"failed", bad}}}},
         io);
  }
  return bad == 0 ? exit_ok : exit_failed;
}

int cmd_fusion(const FusionParams& fp, const std::string& report, NRange colors, const RunConfig& cfg, Streams io) {
  static const std::vector<std::string> reports = {"all", "case", "delta", "dplus", "b"};
  if (std::find(reports.begin(), reports.end(), report) == reports.end())
    throw ParseError("unknown fusion report '" + report + "'");
  bool all = report == "all";
  Json j{{"knot", fp.str()}, {"case", to_string(fusion_case(fp))}};
  bool ok = true;
  QuasiPoly model = dplus_model(fp);

  if (all || report == "b") {
    Json residues = Json::array();
    std::optional<Rat> first;
    bool constant = true;
    for (long i = 0; i < model.period(); ++i) {
      Rat b = b_coefficient(fp, i);
      residues.push_back(b.str());
      if (!first) first = b;
      else if (b != *first) constant = false;
    }
    j["b"] = constant ? Json(first->str()) : Json(nullptr);
    j["b_residues"] = residues;
    j["b_vanishes"] = b_vanishes(fp);
  }
  if (all || report == "dplus") j["dplus"] = io::to_json(model);
  Json deltas = Json::array();
  if (all || report == "delta") {
    for (long n = std::max(0L, colors.lo); n <= colors.hi; ++n) {
      DeltaValue d = delta_detail(fp, n);
      auto [brute, point] = delta_bruteforce(fp, n);
      bool agrees = d.value + d.correction == brute;
      ok = ok && agrees;
      Json e = io::to_json(d);
      e["n"] = n;
      e["bruteforce"] = Json{{"value", brute.str()}, {"point", Json::array({point.k1, point.k2})}};
      e["agrees"] = agrees;
      deltas.push_back(e);
      progress(cfg, io, "fusion: n = " + std::to_string(n) + " checked");
    }
    j["delta"] = deltas;
  }

  if (cfg.format == Format::csv) {
    if (report == "delta") {
      csv_row(io.out, {"n", "delta", "k1", "k2", "case", "correction", "bruteforce", "agrees"});
      for (const auto& e : deltas)
        csv_row(io.out, {std::to_string(e["n"].get<long>()), e["value"].get<std::string>(),
                         std::to_string(e["point"][0].get<long>()), std::to_string(e["point"][1].get<long>()),
                         e["case"].get<std::string>(), e["correction"].get<std::string>(),
                         e["bruteforce"]["value"].get<std::string>(), e["agrees"].get<bool>() ? "true" : "false"});
    } else if (report == "b") {
      csv_row(io.out, {"residue", "b"});
      for (size_t i = 0; i < j["b_residues"].size(); ++i)
        csv_row(io.out, {std::to_string(i), j["b_residues"][i].get<std::string>()});
    } else if (report == "dplus") {
      fit_csv(io.out, model);
    } else {
      csv_row(io.out, {"knot", "case"});
      csv_row(io.out, {fp.str(), to_string(fusion_case(fp))});
    }
  } else {
    emit(j, io);
  }
  return ok ? exit_ok : exit_failed;
}

int cmd_check(const std::string& selector, const RunConfig& cfg, Streams io) {
  std::vector<std::string> names = resolve_names(selector);
  struct Item {
    std::string base;
    std::optional<CableParams> params;
  };
  std::vector<Item> items;
  for (const auto& n : names) {
    items.push_back({n, std::nullopt});
    for (const auto& c : cfg.pq_grid) items.push_back({n, c});
  }
  std::vector<Json> out(items.size());
  std::vector<char> passed(items.size(), 0);
  parallel_for(items.size(), cfg.threads, [&](size_t i) {
    try {
      CatalogEntry e = catalog(items[i].base);
      if (items[i].params) e = cable_entry(e, *items[i].params);
      ConjectureReport r = check_entry(e);
      bool good = true;
      for (const auto& c : r.checks) good = good && (c.status == Status::pass || c.status == Status::inapplicable);
      passed[i] = good;
      out[i] = io::to_json(r);
    } catch (const std::exception& ex) {
      std::string label = items[i].base;
      if (items[i].params) label = "cable(" + label + ";" + std::to_string(items[i].params->p()) + "," +
                                   std::to_string(items[i].params->q()) + ")";
      out[i] = Json{{"knot", label}, {"error", error_json(ex)}};
    }
  });
  bool all_ok = std::all_of(passed.begin(), passed.end(), [](char c) { return c != 0; });
  progress(cfg, io, "check: " + std::to_string(items.size()) + " knots checked");
  if (cfg.format == Format::csv) {
    csv_row(io.out, {"knot", "conjecture", "side", "status", "subject", "subject_status", "detail"});
    for (const auto& r : out) {
      if (r.contains("error")) {
        csv_row(io.out, {r["knot"].get<std::string>(), "", "", "error", "", "", r["error"]["message"].get<std::string>()});
        continue;
      }
      for (const auto& c : r["checks"])
        for (const auto& d : c["details"])
          csv_row(io.out, {r["knot"].get<std::string>(), c["conjecture"].get<std::string>(), c["side"].get<std::string>(),
                           c["status"].get<std::string>(), d["subject"].get<std::string>(),
                           d["status"].get<std::string>(), d["detail"].get<std::string>()});
    }
  } else {
    Json list = Json::array();
    for (auto& r : out) list.push_back(std::move(r));
    emit(list, io);
  }
  return all_ok ? exit_ok : exit_failed;
}

int cmd_catalog(const std::string& selector, const RunConfig& cfg, Streams io) {
  std::vector<std::string> names = resolve_names(selector);
  if (cfg.format == Format::csv) {
    csv_row(io.out, {"name", "js", "js_star", "jx", "jx_star", "bs_known"});
    for (const auto& n : names) {
      CatalogEntry e = catalog(n);
      csv_row(io.out, {e.name, join(e.js), join(e.js_star), join(e.jx), join(e.jx_star), join(e.bs_known)});
    }
    return exit_ok;
  }
  Json list = Json::array();
  for (const auto& n : names) list.push_back(io::to_json(catalog(n)));
  emit(list, io);
  return exit_ok;
}

}  // namespace cj::cli
