#include "special_locus/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "special_locus/bounds.hpp"
#include "special_locus/heights.hpp"
#include "special_locus/polynomials.hpp"
#include "special_locus/quadratics.hpp"
#include "special_locus/search.hpp"
#include "special_locus/verify.hpp"

namespace special_locus {

namespace {

using nlohmann::ordered_json;

enum class Format { text, json };

struct Options {
  std::string format = "text";
  std::optional<long> precision;
  std::string poly;
  long degree = 1;
  std::int64_t max_disc = 30;
  std::uint64_t max_order = 10;
  unsigned workers = 0;
  bool no_prune = false;
  std::int64_t disc = 0;
  std::uint64_t order = 0;
  std::string suite;
  std::optional<long> samples;
  std::uint64_t seed = 1;
};

Precision resolve_precision(const Options& opt) {
  long p = kDefaultPrecision;
  if (opt.precision) {
    p = *opt.precision;
  } else if (const char* env = std::getenv("SPECIAL_LOCUS_PRECISION"); env && *env) {
    char* end = nullptr;
    p = std::strtol(env, &end, 10);
    if (*end != '\0') throw DomainError(std::string("SPECIAL_LOCUS_PRECISION is not an integer: ") + env);
  }
  if (p < 16 || p > kDefaultPrecisionCap) {
    throw DomainError("precision must lie in [16, " + std::to_string(kDefaultPrecisionCap) + "] bits");
  }
  return static_cast<Precision>(p);
}

ordered_json to_json(const IntervalReal& x) {
  return {{"lo", to_decimal(x.lo())}, {"hi", to_decimal(x.hi())}, {"precision", x.precision()}};
}

ordered_json to_json(const IntervalComplex& z) { return {{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

ordered_json coefficients_json(const UniPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

// bounds ---------------------------------------------------------------------

int cmd_bounds(const Options& opt, Format fmt, std::ostream& out) {
  const Precision p = resolve_precision(opt);
  const ValidatedCurve curve = validate_curve(parse_polynomial(opt.poly));
  CurveParams params;
  params.d = opt.degree;
  params.delta1 = curve.delta1;
  params.delta2 = curve.delta2;
  params.height = poly_height(curve.poly, p);
  const BoundReport r = theorem_bounds(params, p);
  if (fmt == Format::json) {
    emit(out, ordered_json{{"command", "bounds"},
                           {"poly", curve.poly.to_string()},
                           {"d", params.d},
                           {"delta1", params.delta1},
                           {"delta2", params.delta2},
                           {"precision", p},
                           {"hF", to_json(params.height.value)},
                           {"C", to_json(r.c)},
                           {"disc_bound", to_json(r.disc_bound)},
                           {"order_bound", to_json(r.order_bound)}});
  } else {
    out << "curve: " << curve.poly.to_string() << "\n"
        << "d = " << params.d << ", delta1 = " << params.delta1 << ", delta2 = " << params.delta2 << "\n"
        << "h(F)        in " << params.height.value.to_string(20) << "\n"
        << "C           in " << r.c.to_string(20) << "\n"
        << "disc_bound  in " << r.disc_bound.to_string(20) << "\n"
        << "order_bound in " << r.order_bound.to_string(20) << "\n";
  }
  return kExitOk;
}

// search ---------------------------------------------------------------------

ordered_json witness_json(const Witness& w, std::uint64_t n) {
  return {{"form", {w.form.a, w.form.b, w.form.c}},
          {"lambda_k", w.lambda_k},
          {"lambda_n", n},
          {"alpha", to_json(w.alpha)},
          {"lambda", to_json(w.lambda)},
          {"status", to_string(w.status)}};
}

void text_hit(std::ostream& out, const SpecialPointHit& hit) {
  out << "D = " << hit.d.value() << ", N = " << hit.n << ": certificate " << hit.certificate.to_string()
      << "\n";
  for (const auto& w : hit.witnesses) {
    out << "  form (" << w.form.a << ", " << w.form.b << ", " << w.form.c << ")"
        << "  lambda = exp(2 pi i " << w.lambda_k << "/" << hit.n << ")"
        << "  alpha in " << w.alpha.to_string(12) << "  [" << to_string(w.status) << "]\n";
  }
}

int cmd_search(const Options& opt, Format fmt, std::ostream& out) {
  SearchConfig config;
  config.curve = parse_polynomial(opt.poly);
  config.max_disc = opt.max_disc;
  config.max_order = opt.max_order;
  config.precision = resolve_precision(opt);
  config.workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  config.prune = !opt.no_prune;
  const SearchResult result = search_special_points(config);
  const ValidatedCurve curve = validate_curve(config.curve);

  if (fmt == Format::json) {
    ordered_json hits = ordered_json::array();
    for (const auto& hit : result.hits) {
      ordered_json ws = ordered_json::array();
      for (const auto& w : hit.witnesses) ws.push_back(witness_json(w, hit.n));
      hits.push_back({{"D", hit.d.value()},
                      {"N", hit.n},
                      {"certificate", hit.certificate.to_string()},
                      {"witnesses", ws}});
    }
    ordered_json flagged = ordered_json::array();
    for (const auto& f : result.flagged) flagged.push_back({{"D", f.d}, {"reason", f.reason}});
    emit(out, ordered_json{{"command", "search"},
                           {"poly", curve.poly.to_string()},
                           {"max_disc", config.max_disc},
                           {"max_order", config.max_order},
                           {"precision", config.precision},
                           {"prune", config.prune},
                           {"hits", hits},
                           {"flagged", flagged}});
  } else {
    out << "curve: " << curve.poly.to_string() << "\n"
        << "caps: |D| <= " << config.max_disc << ", N <= " << config.max_order << "\n"
        << "hits: " << result.hits.size() << "\n";
    for (const auto& hit : result.hits) text_hit(out, hit);
    for (const auto& f : result.flagged) out << "flagged D = " << f.d << ": " << f.reason << "\n";
  }
  return result.flagged.empty() ? kExitOk : kExitPrecision;
}

// trace ----------------------------------------------------------------------

int cmd_trace(const Options& opt, Format fmt, std::ostream& out, std::ostream& err) {
  const Precision p = resolve_precision(opt);
  const ValidatedCurve curve = validate_curve(parse_polynomial(opt.poly));
  const Discriminant d(opt.disc);
  const OrderN n(opt.order);
  const ClassPolynomial& cp = class_polynomial_cached(d);
  auto cert = membership_certificate(curve.poly, cp.poly, n);
  if (!cert) {
    err << "error: NoSpecialPoint: the curve has no special point with D = " << d.value()
        << " and N = " << n.value() << "\n";
    if (fmt == Format::json) {
      emit(out, ordered_json{{"error", {{"reason", "NoSpecialPoint"}, {"D", d.value()}, {"N", n.value()}}}});
    }
    return kExitValidation;
  }
  SpecialPointHit hit;
  hit.d = d;
  hit.n = n.value();
  hit.witnesses = locate_witnesses(curve.poly, cp, n, *cert, p);
  hit.certificate = std::move(*cert);
  const TraceReport report = proof_trace(hit, curve.poly, p);

  const char* branch = report.large_branch ? "|D| >= 25" : "|D| < 25";
  if (fmt == Format::json) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    }
    ordered_json j{{"command", "trace"},
                   {"poly", curve.poly.to_string()},
                   {"D", report.d},
                   {"N", report.n},
                   {"precision", p},
                   {"certificate", hit.certificate.to_string()},
                   {"branch", branch}};
    if (report.m) j["m"] = *report.m;
    j["checks"] = checks;
    j["all_hold"] = report.all_hold();
    emit(out, j);
  } else {
    out << "curve: " << curve.poly.to_string() << "\n"
        << "hit: D = " << report.d << ", N = " << report.n << ", certificate "
        << hit.certificate.to_string() << "\n"
        << "branch: " << branch << "\n";
    if (report.m) out << "m = " << *report.m << "\n";
    for (const auto& c : report.checks) {
      out << "  [" << to_string(c.status) << "] " << c.name << ": " << c.detail << "\n";
    }
  }
  return kExitOk;
}

// classpoly ------------------------------------------------------------------

int cmd_classpoly(const Options& opt, Format fmt, std::ostream& out) {
  const Discriminant d(opt.disc);
  const ClassPolynomial cp = class_polynomial(d);
  if (fmt == Format::json) {
    ordered_json forms = ordered_json::array();
    for (const auto& f : cp.forms) forms.push_back({f.a, f.b, f.c});
    emit(out, ordered_json{{"command", "classpoly"},
                           {"D", d.value()},
                           {"class_number", cp.poly.degree()},
                           {"poly", cp.poly.to_string()},
                           {"coefficients", coefficients_json(cp.poly)},
                           {"forms", forms},
                           {"precision_used", cp.precision_used},
                           {"rounding_margin", to_decimal(cp.rounding_margin)}});
  } else {
    out << cp.poly.to_string() << "\n";
  }
  return kExitOk;
}

// verify ---------------------------------------------------------------------

int cmd_verify(const Options& opt, Format fmt, std::ostream& out) {
  VerifyConfig config;
  config.suite = parse_suite(opt.suite);
  config.samples = opt.samples;
  config.seed = opt.seed;
  config.precision = resolve_precision(opt);
  const VerifyReport report = run_verify(config);
  if (fmt == Format::json) {
    emit(out, ordered_json{{"command", "verify"},
                           {"suite", to_string(report.suite)},
                           {"seed", report.seed},
                           {"samples", report.samples},
                           {"precision", config.precision},
                           {"checked", report.checked},
                           {"skipped", report.skipped},
                           {"violations", report.violations},
                           {"undecided", report.undecided},
                           {"counterexamples", report.counterexamples},
                           {"passed", report.passed()}});
  } else {
    out << to_text(report);
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

int exit_code_for(const Error& e) {
  const std::string& r = e.reason();
  if (r == "PrecisionExhausted") return kExitPrecision;
  if (r == "InternalError") return kExitInternal;
  return kExitValidation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Special points of curves in P^1 x G_m: bounds, search, traces, class polynomials"};
  app.name("special_locus");
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", opt.precision,
                 "Working precision in bits (default: $SPECIAL_LOCUS_PRECISION or 256)");

  auto* bounds = app.add_subcommand("bounds", "Evaluate the bounds on |D| and N for a curve");
  bounds->add_option("--poly", opt.poly, "Curve F(X, Y) with integer or rational coefficients")->required();
  bounds->add_option("--degree", opt.degree, "Degree d of the coefficient field")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "Find special points within caps on |D| and N");
  search->add_option("--poly", opt.poly, "Curve F(X, Y)")->required();
  search->add_option("--max-disc", opt.max_disc, "Largest |D|")->check(CLI::PositiveNumber);
  search->add_option("--max-order", opt.max_order, "Largest N")->check(CLI::PositiveNumber);
  search->add_option("--workers", opt.workers, "Worker threads (default: hardware concurrency)");
  search->add_flag("--no-prune", opt.no_prune, "Do not skip N with phi(N) > delta2 * h(D)");

  auto* trace = app.add_subcommand("trace", "Re-verify the inequality chain for one special point");
  trace->add_option("--poly", opt.poly, "Curve F(X, Y)")->required();
  trace->add_option("--disc", opt.disc, "Discriminant D < 0")->required();
  trace->add_option("--order", opt.order, "Order N of the root of unity")->required()->check(CLI::PositiveNumber);

  auto* classpoly = app.add_subcommand("classpoly", "Hilbert class polynomial H_D");
  classpoly->add_option("--disc", opt.disc, "Discriminant D < 0")->required();

  auto* verify = app.add_subcommand("verify", "Run a property-verification suite");
  verify->add_option("--suite", opt.suite, "lemma22 | lemma23 | separation | aux | phi | classnum")->required();
  verify->add_option("--samples", opt.samples, "Population size (suite-specific default)");
  verify->add_option("--seed", opt.seed, "Sampling seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  const Format fmt = opt.format == "json" ? Format::json : Format::text;
  try {
    resolve_precision(opt);
    if (bounds->parsed()) return cmd_bounds(opt, fmt, out);
    if (search->parsed()) return cmd_search(opt, fmt, out);
    if (trace->parsed()) return cmd_trace(opt, fmt, out, err);
    if (classpoly->parsed()) return cmd_classpoly(opt, fmt, out);
    if (verify->parsed()) return cmd_verify(opt, fmt, out);
  } catch (const Error& e) {
    err << "error: " << e.reason() << ": " << e.what() << "\n";
    if (fmt == Format::json) emit(out, ordered_json{{"error", {{"reason", e.reason()}, {"message", e.what()}}}});
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace special_locus
