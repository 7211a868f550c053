#include "sclaw/run.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "sclaw/errors.hpp"
#include "sclaw/exact_solution.hpp"
#include "sclaw/fv_oracle.hpp"
#include "sclaw/nondegeneracy.hpp"
#include "sclaw/seminorm.hpp"
#include "sclaw/tiling.hpp"

#ifndef SCLAW_VERSION
#define SCLAW_VERSION "unknown"
#endif

namespace sclaw {

namespace {

std::string num(double x) { return csv_number(x); }
std::string num(long x) { return std::to_string(x); }
std::string num(std::size_t x) { return std::to_string(x); }

bool is_staircase(const RunConfig& c) { return c.datum != DatumKind::Lemma1Riemann; }

void require_staircase(const RunConfig& c, const std::string& analysis) {
  if (!is_staircase(c)) throw ConfigError("datum", 0, analysis + " needs the prop1 or prop2 staircase");
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

std::string describe(bool ok, const std::string& what) { return (ok ? "ok: " : "FAILED: ") + what; }

}  // namespace

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

void Table::write(std::ostream& os) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

AnalysisOutcome analyze_times(const RunConfig& c) {
  AnalysisOutcome out{"times", false, "", {}};
  Table t{"times", {"quantity", "value"}, {}};
  const ExactSolution exact(config_datum(c));
  const auto& sched = exact.schedule();
  bool ok = exact.t0() > 0.0;
  std::string detail = "t0 = " + num(exact.t0());
  if (is_staircase(c)) {
    const auto p = blowup_params(c);
    const auto times = interaction_times(p);
    const double closed = std::min(times.t_n, times.t_tilde_n);
    t.add({"t_n", num(times.t_n)});
    t.add({"t_tilde_n", num(times.t_tilde_n)});
    const double rung = rung_interaction_time(sched);
    t.add({"rung_crossing", num(rung)});
    const bool agree = close(rung, closed, 1e-12);
    ok = ok && agree;
    detail += "; brute-force rung crossing " + num(rung) + (agree ? " matches " : " differs from ") +
              "min(t_n, t_tilde_n) = " + num(closed);
    if (sched.first_crossing < rung) {
      detail += "; the staircase edge waves cross earlier, at " + num(sched.first_crossing);
    }
  }
  t.add({"t1_prime", num(sched.finite_speed_time)});
  t.add({"first_crossing", num(sched.first_crossing)});
  t.add({"t0", num(exact.t0())});
  out.tables.push_back(std::move(t));

  if (c.datum == DatumKind::Prop1 && c.tiling.boxes > 1) {
    const auto tiling = build_tiling(blowup_params(c), c.tiling.boxes, c.tiling.t0_gap);
    Table boxes{"times_boxes", {"box", "R", "t0"}, {}};
    for (std::size_t k = 0; k < tiling.boxes.size(); ++k) {
      boxes.add({num(k + 1), num(tiling.boxes[k].params.R), num(tiling.boxes[k].t0)});
    }
    out.tables.push_back(std::move(boxes));
  }
  out.passed = ok;
  out.detail = describe(ok, detail);
  return out;
}

AnalysisOutcome analyze_validate(const RunConfig& c, unsigned /*threads*/) {
  AnalysisOutcome out{"validate", false, "", {}};
  const auto& v = c.validate;
  const ExactSolution exact(config_datum(c));
  const double t = v.time_fraction * exact.t0();
  double lo = -c.R, hi = c.R;
  if (std::isfinite(exact.initial().begin()) && std::isfinite(exact.initial().end)) {
    std::tie(lo, hi) = padded_domain(exact, t);
  }
  std::vector<std::size_t> cells(v.cells.begin(), v.cells.end());
  const auto rows = convergence_study(exact, t, lo, hi, cells, v.cfl);

  Table table{"validate", {"cells", "dm", "l1_error", "observed_order", "max_principle_violations", "mass_drift"}, {}};
  bool orders_ok = true;
  std::size_t violations = 0;
  for (const auto& r : rows) {
    table.add({num(r.cells), num(r.dm), num(r.l1_error), num(r.observed_order), num(r.max_principle_violations),
               num(r.mass_drift)});
    if (!std::isnan(r.observed_order)) orders_ok = orders_ok && r.observed_order >= v.min_order && r.observed_order <= v.max_order;
    violations += r.max_principle_violations;
  }
  out.tables.push_back(std::move(table));
  const bool error_ok = rows.back().l1_error < v.max_error;
  out.passed = orders_ok && error_ok && violations == 0;
  out.detail = describe(out.passed, "t = " + num(t) + " on [" + num(lo) + ", " + num(hi) + "]; orders in [" +
                                        num(v.min_order) + ", " + num(v.max_order) + "]: " + (orders_ok ? "yes" : "no") +
                                        "; finest L1 " + num(rows.back().l1_error) + " < " + num(v.max_error) +
                                        ": " + (error_ok ? "yes" : "no") + "; max-principle violations " +
                                        num(violations));
  return out;
}

AnalysisOutcome analyze_seminorm(const RunConfig& c, unsigned threads) {
  require_staircase(c, "seminorm");
  AnalysisOutcome out{"seminorm", false, "", {}};
  const auto& sc = c.seminorm;
  const auto p = blowup_params(c);
  const ExactSolution exact(config_datum(c));
  const double t = sc.time_fraction * exact.t0();
  const PlanarProfile profile = t > 0.0 ? exact.evolve(t) : exact.initial();

  SeminormQuery q;
  q.s = sc.s;
  q.p = sc.p;
  q.theta = sc.theta;
  q.axis = sc.axis - 1;
  q.h_min = sc.h_min > 0.0 ? sc.h_min : rung_length(p, 2 * p.n_max);
  q.h_max = sc.h_max > 0.0 ? sc.h_max : rung_length(p, 2 * p.N);
  q.points_per_decade = sc.points_per_decade;
  q.trim_decades = sc.trim_decades;
  if (sc.truncation_floor) q.fit_h_min = truncation_safe_h(p);
  const auto scan = truncated_besov(profile, q, threads);

  Table table{"seminorm", {"h", "lp_diff", "integrand", "S_cumulative"}, {}};
  for (std::size_t k = 0; k < scan.h.size(); ++k) {
    table.add({num(scan.h[k]), num(scan.lp_diff[k]), num(scan.integrand[k]), num(scan.cumulative[k])});
  }
  out.tables.push_back(std::move(table));

  const double kappa = kappa_closed_form(p, sc.s, sc.p, sc.theta);
  const bool blowup_regime = sc.s >= 1.0 / p.degree();
  const bool kappa_ok = blowup_regime ? std::abs(scan.kappa_fitted - kappa) <= sc.tolerance
                                      : scan.kappa_fitted <= sc.bounded_slope;
  out.tables.push_back({"seminorm_summary",
                        {"s", "p", "theta", "kappa_closed_form", "kappa_fitted", "kappa_log_s", "seminorm", "t"},
                        {{num(sc.s), num(sc.p), num(sc.theta), num(kappa), num(scan.kappa_fitted),
                          num(scan.kappa_log_s), num(scan.seminorm), num(t)}}});

  const auto series = lower_bound_series(p, sc.s, sc.p, sc.theta, t, std::max(sc.series_terms, p.N));
  Table st{"seminorm_series", {"n", "divergent_partial", "convergent_partial"}, {}};
  for (std::size_t k = 0; k < series.checkpoints.size(); ++k) {
    st.add({num(series.checkpoints[k]), num(series.divergent_partial[k]), num(series.convergent_partial[k])});
  }
  out.tables.push_back(std::move(st));

  const auto tv = tv_growth(profile, p.N, p.n_max, q.axis);
  Table tt{"seminorm_tv", {"n", "tv_partial"}, {}};
  for (std::size_t k = 0; k < tv.n.size(); ++k) tt.add({num(tv.n[k]), num(tv.tv[k])});
  out.tables.push_back(std::move(tt));
  const double tv_target = 1.0 - p.exponent();
  const bool tv_ok = std::abs(tv.exponent - tv_target) <= sc.tv_tolerance;

  out.passed = kappa_ok && tv_ok;
  std::string kappa_text = blowup_regime ? "kappa_fitted " + num(scan.kappa_fitted) + " vs closed form " + num(kappa) +
                                               " (tolerance " + num(sc.tolerance) + ")"
                                         : "s < 1/q, kappa_fitted " + num(scan.kappa_fitted) +
                                               " <= " + num(sc.bounded_slope);
  out.detail = describe(out.passed, kappa_text + ": " + (kappa_ok ? "yes" : "no") + "; series " +
                                        to_string(series.regime) + "; TV exponent " + num(tv.exponent) + " vs " +
                                        num(tv_target) + ": " + (tv_ok ? "yes" : "no"));
  return out;
}

AnalysisOutcome analyze_nondegeneracy(const RunConfig& c, unsigned threads) {
  AnalysisOutcome out{"nondegeneracy", false, "", {}};
  const auto& nc = c.nondegeneracy;
  const FluxSpec flux = config_flux(c);
  double expected = nc.expected;
  if (expected == 0.0) {
    if (is_staircase(c)) {
      expected = 1.0 / blowup_params(c).degree();
    } else if (flux.family == FluxFamily::PowerLaw) {
      expected = 1.0 / (c.zeta + c.dimension);
    } else if (flux.family == FluxFamily::Prop2Pair) {
      expected = 1.0 / 3.0;
    } else {
      throw ConfigError("nondegeneracy.expected", 0, "needed for a polynomial flux");
    }
  }
  NondegeneracyOptions o;
  o.u_bound = nc.u_bound > 0.0 ? nc.u_bound : flux.u_bound;
  o.deltas = log_spaced(nc.delta_min, nc.delta_max, nc.per_decade);
  o.sphere_samples = static_cast<std::size_t>(nc.sphere_samples);
  o.v_grid = static_cast<std::size_t>(nc.v_grid);
  o.lattice_offset = static_cast<std::size_t>(c.seed);
  o.threads = threads;
  const auto r = nondegeneracy_exponent(flux, o);

  Table table{"nondegeneracy", {"delta", "worst_measure"}, {}};
  for (std::size_t k = 0; k < r.deltas.size(); ++k) table.add({num(r.deltas[k]), num(r.worst_measure[k])});
  out.tables.push_back(std::move(table));
  std::string direction;
  for (std::size_t k = 0; k < r.worst_direction.size(); ++k) direction += (k ? " " : "") + num(r.worst_direction[k]);
  out.tables.push_back({"nondegeneracy_summary",
                        {"alpha", "constant", "expected", "degenerate", "directions", "worst_direction",
                         "refinement_change", "zero_set_measure", "zero_set_measure_refined"},
                        {{num(r.alpha), num(r.constant), num(expected), r.degenerate ? "true" : "false",
                          num(r.directions_scanned), direction, num(r.refinement_change), num(r.zero_set_measure),
                          num(r.zero_set_measure_refined)}}});

  if (r.degenerate) {
    out.passed = false;
    out.detail = "FAILED: degenerate direction found, alpha undefined";
    return out;
  }
  const bool alpha_ok = std::abs(r.alpha - expected) <= nc.tolerance;
  out.passed = alpha_ok && r.refinement_ok;
  out.detail = describe(out.passed, "alpha " + num(r.alpha) + " vs " + num(expected) + " (tolerance " +
                                        num(nc.tolerance) + "); grid refinement change " +
                                        num(r.refinement_change) + (r.refinement_ok ? " < 1%" : " >= 1%"));
  return out;
}

AnalysisOutcome analyze_lemmas(const RunConfig& c) {
  AnalysisOutcome out{"check-lemmas", false, "", {}};
  const auto sweep = lemma2_sweep(static_cast<std::size_t>(c.lemmas.samples), static_cast<std::size_t>(c.seed));
  const ExactSolution exact(config_datum(c));
  const auto& sched = exact.schedule();
  const std::size_t lax = lax_violations(sched, exact.flux());
  std::size_t shocks = 0, kruzkov_failures = 0;
  for (const auto& w : sched.waves) {
    if (w.kind != WaveKind::Shock) continue;
    ++shocks;
    if (!kruzkov_single_shock(exact.flux(), w.left_state, w.right_state)) ++kruzkov_failures;
  }
  out.tables.push_back({"check_lemmas",
                        {"check", "samples", "violations", "min_margin"},
                        {{"lemma2_first", num(sweep.samples), num(sweep.first_violations), num(sweep.min_first_margin)},
                         {"lemma2_second", num(sweep.samples), num(sweep.second_violations),
                          num(sweep.min_second_margin)},
                         {"lax_admissibility", num(shocks), num(lax), "nan"},
                         {"kruzkov_chord", num(shocks), num(kruzkov_failures), "nan"}}});
  out.passed = sweep.first_violations == 0 && sweep.second_violations == 0 && lax == 0 && kruzkov_failures == 0;
  out.detail = describe(out.passed, "lemma 2 violations " + num(sweep.first_violations) + " + " +
                                        num(sweep.second_violations) + " of " + num(sweep.samples) +
                                        "; Lax violations " + num(lax) + " and chord-condition failures " +
                                        num(kruzkov_failures) + " over " + num(shocks) + " shocks");
  return out;
}

AnalysisOutcome analyze_tiling(const RunConfig& c) {
  if (c.datum != DatumKind::Prop1) throw ConfigError("datum", 0, "tiling needs the prop1 staircase");
  AnalysisOutcome out{"tiling", false, "", {}};
  const auto tiling = build_tiling(blowup_params(c), c.tiling.boxes, c.tiling.t0_gap);
  Table boxes{"tiling",
              {"box", "R", "N", "n_max", "offset", "lower", "upper", "t0", "axis_speed", "tail_series", "l1_exact",
               "l1_bound"},
              {}};
  for (std::size_t k = 0; k < tiling.boxes.size(); ++k) {
    const auto& b = tiling.boxes[k];
    boxes.add({num(k + 1), num(b.params.R), num(b.params.N), num(b.params.n_max), num(b.offset), num(b.lower),
               num(b.upper), num(b.t0), num(b.axis_speed), num(tiling.tail_series[k]), num(tiling.l1_exact[k]),
               num(tiling.l1_bound[k])});
  }
  out.tables.push_back(std::move(boxes));
  Table certs{"tiling_certificates", {"earlier", "later", "gap", "speed", "horizon", "ok"}, {}};
  for (const auto& cert : tiling.certificates) {
    certs.add({num(cert.earlier + 1), num(cert.later + 1), num(cert.gap), num(cert.speed), num(cert.horizon),
               cert.ok ? "true" : "false"});
  }
  out.tables.push_back(std::move(certs));

  const bool tail_ok = tiling.tail_series.back() <= tiling.tail_series_bound;
  bool l1_ok = true;
  for (std::size_t k = 0; k < tiling.boxes.size(); ++k) l1_ok = l1_ok && tiling.l1_exact[k] <= tiling.l1_bound[k];
  out.passed = tiling.separated() && tiling.t0_increasing() && tail_ok && l1_ok;
  out.detail = describe(out.passed, std::string("separated: ") + (tiling.separated() ? "yes" : "no") +
                                        "; t0 gaps > " + num(c.tiling.t0_gap) + ": " +
                                        (tiling.t0_increasing() ? "yes" : "no") + "; tail series " +
                                        num(tiling.tail_series.back()) + " <= " + num(tiling.tail_series_bound) +
                                        ": " + (tail_ok ? "yes" : "no") + "; L1 within bound: " + (l1_ok ? "yes" : "no"));
  return out;
}

AnalysisOutcome run_analysis(const std::string& name, const RunConfig& config, unsigned threads) {
  try {
    if (name == "times") return analyze_times(config);
    if (name == "validate") return analyze_validate(config, threads);
    if (name == "seminorm") return analyze_seminorm(config, threads);
    if (name == "nondegeneracy") return analyze_nondegeneracy(config, threads);
    if (name == "check-lemmas") return analyze_lemmas(config);
    if (name == "tiling") return analyze_tiling(config);
  } catch (const Error& e) {
    return {name, false, std::string("FAILED: ") + e.what(), {}};
  }
  throw ConfigError("analyses", 0, "unknown analysis '" + name + "'");
}

bool RunReport::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
}

std::string library_version() { return SCLAW_VERSION; }

void write_tables(const std::string& dir, const AnalysisOutcome& outcome) {
  std::filesystem::create_directories(dir);
  for (const auto& t : outcome.tables) {
    const auto path = std::filesystem::path(dir) / (t.name + ".csv");
    std::ofstream os(path);
    if (!os) throw Error("cannot write " + path.string());
    t.write(os);
  }
}

void write_manifest(std::ostream& os, const RunReport& report) {
  os << "config_hash " << report.config_hash << "\n";
  os << "version " << report.version << "\n";
  for (const auto& o : report.outcomes) os << "analysis " << o.name << " " << (o.passed ? "pass" : "fail") << " " << o.detail << "\n";
  os << "status " << (report.passed() ? "pass" : "fail") << "\n";
}

RunReport run(const RunConfig& config, unsigned threads) {
  validate_config(config);
  RunReport report;
  report.config_hash = config_hash(config);
  report.version = library_version();
  for (const auto& name : config.analyses) {
    report.outcomes.push_back(run_analysis(name, config, threads));
    write_tables(config.out, report.outcomes.back());
  }
  std::filesystem::create_directories(config.out);
  std::ofstream os(std::filesystem::path(config.out) / "manifest");
  if (!os) throw Error("cannot write the manifest in " + config.out);
  write_manifest(os, report);
  return report;
}

}  // namespace sclaw
