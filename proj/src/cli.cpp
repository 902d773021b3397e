#include "hkcover/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hkcover/errors.hpp"
#include "hkcover/serialize.hpp"

namespace hk {

namespace {

enum class Format { json, csv, pretty };

struct Options {
  std::string format = "json";
  bool strict = false;
  bool permissive = false;
  std::optional<unsigned> workers;
  std::optional<std::int64_t> max_sum;
  std::optional<std::uint64_t> max_count;
  std::optional<std::int64_t> time_budget_ms;

  std::string input;
  std::int64_t exponent = 0;

  std::string family;
  bool symbolic = false;
  bool no_grid = false;
  std::optional<std::int64_t> e, d, a, b, delta;

  std::int64_t e_min = 2;
  std::int64_t e_max = 0;
  std::int64_t k_min = 5;
  std::int64_t k_max = 0;
};

// Exit code carried out of a subcommand handler.
struct Exit {
  int code;
};

Format format_of(const Options& o) {
  if (o.format == "csv") return Format::csv;
  if (o.format == "pretty") return Format::pretty;
  return Format::json;
}

Strictness strictness_of(const Options& o) { return o.strict ? Strictness::strict : Strictness::permissive; }

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

EnumerationLimits limits_from(const Options& o, EnumerationLimits base) {
  if (o.max_sum) base.max_sum = *o.max_sum;
  if (o.max_count) base.max_count = *o.max_count;
  if (o.time_budget_ms) base.time_budget = std::chrono::milliseconds(*o.time_budget_ms);
  return base;
}

void emit(std::ostream& out, const json& doc, Format format) {
  out << (format == Format::pretty ? doc.dump(2) : doc.dump()) << '\n';
}

void require_json(const Options& o, const char* command) {
  if (format_of(o) == Format::csv) {
    throw CLI::ValidationError(std::string("--format csv is only available for search and lemma-f0, not ") + command);
  }
}

void report_failures(std::ostream& err, const ValidationReport& report) {
  for (const auto& r : report.rules) {
    if (!r.passed) {
      err << (r.severity == Severity::error ? "error" : "warning") << ": rule " << r.rule << " failed: " << r.detail
          << '\n';
    }
  }
}

std::optional<std::span<const CurveProfile>> profile_span(const ArrangementInput& in) {
  if (!in.profiles) return std::nullopt;
  return std::span<const CurveProfile>(*in.profiles);
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  require_json(o, "validate");
  const ArrangementInput in = parse_arrangement(load_json_file(o.input));
  const ValidationReport report = validate_combinatorics(in.surface, in.combo, strictness_of(o));
  json doc = {{"surface", to_json(in.surface)}, {"combinatorics", to_json(in.combo)}, {"report", to_json(report)}};
  bool ok = report.ok();
  report_failures(err, report);
  if (in.profiles) {
    const ValidationReport prof = validate_profiles(in.surface, in.combo, *in.profiles);
    doc["profiles_report"] = to_json(prof);
    report_failures(err, prof);
    ok = ok && prof.ok();
  }
  doc["valid"] = ok;
  emit(out, doc, format_of(o));
  return ok ? 0 : 1;
}

int cmd_invariants(const Options& o, std::ostream& out, std::ostream&) {
  require_json(o, "invariants");
  const ArrangementInput in = parse_arrangement(load_json_file(o.input));
  const ChernInvariants inv = cover_chern(in.surface, in.combo, o.exponent);
  json doc = {{"surface", to_json(in.surface)},
              {"combinatorics", to_json(in.combo)},
              {"invariants", to_json(inv)},
              {"applicability", to_json(bmy_applicability(in.surface, in.combo, profile_span(in), o.exponent))}};
  emit(out, doc, format_of(o));
  return 0;
}

int cmd_hpoly(const Options& o, std::ostream& out, std::ostream&) {
  require_json(o, "hpoly");
  const ArrangementInput in = parse_arrangement(load_json_file(o.input));
  const HirzebruchQuadratic h = hirzebruch_polynomial(in.surface, in.combo);
  json values = json::object();
  for (long n : {2L, 3L, 5L}) values[std::to_string(n)] = json_rational(h(Rational(n)));
  json doc = {{"surface", to_json(in.surface)},
              {"combinatorics", to_json(in.combo)},
              {"hpoly", to_json(h)},
              {"values", values}};
  emit(out, doc, format_of(o));
  return 0;
}

int cmd_filter(const Options& o, std::ostream& out, std::ostream&) {
  require_json(o, "filter");
  const ArrangementInput in = parse_arrangement(load_json_file(o.input));
  const FilterResult result = necessary_condition_filter(in.combo, o.exponent);
  json doc = {{"n", o.exponent}, {"combinatorics", to_json(in.combo)}, {"filter", to_json(result)}};
  emit(out, doc, format_of(o));
  return 0;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  require_json(o, "certify");
  FamilyPattern pattern;
  pattern.family = parse_family(o.family);
  pattern.symbolic = o.symbolic;
  pattern.e = o.e;
  pattern.d = o.d;
  pattern.a = o.a;
  pattern.b = o.b;
  pattern.delta = o.delta;
  GridOptions grid;
  grid.enabled = !o.no_grid;
  grid.workers = o.workers.value_or(1);
  const Certificate cert = certify_nonexistence(pattern, o.exponent, grid);
  if (!cert.valid) err << "certificate " << cert.id << " is INVALID\n";
  emit(out, to_json(cert), format_of(o));
  return cert.valid ? 0 : 1;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const json raw = load_json_file(o.input);
  SearchSpec spec = parse_search_spec(raw);
  spec.limits = limits_from(o, spec.limits);
  if (o.workers) {
    spec.workers = *o.workers;
  } else if (!raw.contains("workers")) {
    spec.workers = default_workers();
  }
  const Format format = format_of(o);
  auto write = [&](const auto& report) {
    if (format == Format::csv) {
      out << to_csv(report);
    } else {
      emit(out, to_json(report), format);
    }
  };
  switch (spec.mode) {
    case SearchMode::lemma_f0: {
      if (spec.family != Family::hirzebruch) throw SchemaError("field 'family' must be hirzebruch in lemma_f0 mode");
      const LemmaReport report = verify_lemma_f0(spec.param_range, spec.k_range, spec.limits, spec.workers);
      write(report);
      if (!report.complete) err << "lemma scan incomplete: a cap was reached\n";
      return report.valid ? 0 : 1;
    }
    case SearchMode::theorem_scan: {
      const ScanReport report = theorem_scan(spec);
      write(report);
      if (!report.complete) err << "theorem scan incomplete: a cap was reached\n";
      return report.valid ? 0 : 1;
    }
    case SearchMode::gap_minimum: {
      const GapTable table = gap_minimum(spec);
      write(table);
      if (!table.complete) err << "gap table incomplete: a cap was reached\n";
      return table.complete ? 0 : 1;
    }
  }
  return 2;
}

int cmd_nccover(const Options& o, std::ostream& out, std::ostream&) {
  require_json(o, "nccover");
  const NormalCrossingModel model = parse_model(load_json_file(o.input));
  const Integer e = cover_euler_nc(model, o.exponent);
  const Integer c1sq = cover_c1sq_nc(model, o.exponent);
  const Integer gap = 3 * e - c1sq;
  json doc = {{"e", json_integer(e)},
              {"c1sq", json_integer(c1sq)},
              {"bmy_gap", json_integer(gap)},
              {"ball_quotient_necessary", gap == 0}};
  emit(out, doc, format_of(o));
  return 0;
}

int cmd_lemma(const Options& o, std::ostream& out, std::ostream& err) {
  const LemmaReport report = verify_lemma_f0(IntRange{o.e_min, o.e_max}, IntRange{o.k_min, o.k_max},
                                             limits_from(o, default_limits()), o.workers.value_or(default_workers()));
  if (format_of(o) == Format::csv) {
    out << to_csv(report);
  } else {
    emit(out, to_json(report), format_of(o));
  }
  if (!report.complete) err << "lemma scan incomplete: a cap was reached\n";
  return report.valid ? 0 : 1;
}

void add_input(CLI::App* sub, Options& o, const char* what) {
  sub->add_option("input", o.input, what)->required()->check(CLI::ExistingFile);
}

void add_exponent(CLI::App* sub, Options& o) {
  sub->add_option("--exponent,-n", o.exponent, "Cover exponent n")->required()->check(CLI::Range(2, 1 << 20));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact invariants and nonexistence certificates for Hirzebruch-Kummer covers", "hkcover"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  auto* strict = app.add_flag("--strict", o.strict, "Treat soft rules (k below the family minimum) as errors");
  app.add_flag("--permissive", o.permissive, "Report soft rules as warnings (default)")->excludes(strict);
  app.add_option("--workers", o.workers, "Worker threads for searches (default: available cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-sum", o.max_sum, "Largest enumeration target a(k^2-k) (default 10000 or HK_CAP_SUM)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-count", o.max_count, "Stop a cell after this many solutions")->check(CLI::PositiveNumber);
  app.add_option("--time-budget-ms", o.time_budget_ms, "Per-cell time budget")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Check an arrangement against the combinatorial rules");
  add_input(validate, o, "Arrangement JSON");
  auto* invariants = app.add_subcommand("invariants", "Chern numbers of the cover and BMY applicability");
  add_input(invariants, o, "Arrangement JSON");
  add_exponent(invariants, o);
  auto* hpoly = app.add_subcommand("hpoly", "Coefficients of H(n) = (3c2 - c1^2)/n^(k-3)");
  add_input(hpoly, o, "Arrangement JSON");
  auto* filter = app.add_subcommand("filter", "Multiplicity filter from the exceptional-curve condition");
  add_input(filter, o, "Arrangement JSON");
  add_exponent(filter, o);

  auto* certify = app.add_subcommand("certify", "Replay a nonexistence certificate");
  certify->add_option("--family", o.family, "hirzebruch, nef or plane")
      ->required()
      ->check(CLI::IsMember({"hirzebruch", "nef", "nef_canonical", "plane"}));
  certify->add_option("--exponent,-n", o.exponent, "2, 3 or 5")->required()->check(CLI::IsMember({2, 3, 5}));
  certify->add_option("--e", o.e, "Fix e (F_e)");
  certify->add_option("--d", o.d, "Fix d (plane curves of degree d)");
  certify->add_option("--a", o.a, "Fix a = A^2 (nef family)");
  certify->add_option("--b", o.b, "Fix b = A.K (nef family)");
  certify->add_option("--delta", o.delta, "Fix delta = 3e(W) - K^2 (nef family)");
  certify->add_flag("--symbolic", o.symbolic, "Prove for the whole family instead of fixed parameters");
  certify->add_flag("--no-grid", o.no_grid, "Skip the numeric grid confirmation");

  auto* search = app.add_subcommand("search", "Run a search spec (lemma_f0, theorem_scan, gap_minimum)");
  add_input(search, o, "Search spec JSON");
  auto* nccover = app.add_subcommand("nccover", "Cover invariants from a normal-crossing model");
  add_input(nccover, o, "Model JSON");
  add_exponent(nccover, o);

  auto* lemma = app.add_subcommand("lemma-f0", "Exhaustive check of f0 >= e + 6 on F_e");
  lemma->add_option("--e-min", o.e_min, "Smallest e")->capture_default_str();
  lemma->add_option("--e-max", o.e_max, "Largest e")->required();
  lemma->add_option("--k-min", o.k_min, "Smallest k")->capture_default_str();
  lemma->add_option("--k-max", o.k_max, "Largest k")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (certify->parsed() && !o.symbolic && !o.e && !o.d && !o.a) {
      err << "error: certify needs --symbolic or fixed family parameters\n";
      return 2;
    }
    if (validate->parsed()) return cmd_validate(o, out, err);
    if (invariants->parsed()) return cmd_invariants(o, out, err);
    if (hpoly->parsed()) return cmd_hpoly(o, out, err);
    if (filter->parsed()) return cmd_filter(o, out, err);
    if (certify->parsed()) return cmd_certify(o, out, err);
    if (search->parsed()) return cmd_search(o, out, err);
    if (nccover->parsed()) return cmd_nccover(o, out, err);
    if (lemma->parsed()) return cmd_lemma(o, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return 2;
  } catch (const RejectedInput& e) {
    err << "rejected: " << e.what() << '\n';
    report_failures(err, e.report());
    out << json{{"report", to_json(e.report())}, {"valid", false}}.dump() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const ModelInconsistencyError& e) {
    err << "inconsistent model: " << e.what() << '\n';
    return 1;
  } catch (const PartialResultError& e) {
    err << "incomplete: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "out of domain: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedCaseError& e) {
    err << "unsupported: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hk
