#include "xagm/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "xagm/agm.hpp"
#include "xagm/agm3.hpp"
#include "xagm/error.hpp"
#include "xagm/hypergeom.hpp"
#include "xagm/record.hpp"
#include "xagm/verify.hpp"

namespace xagm::cli {

namespace {

enum class Format { Human, Json, Csv };

struct Options {
  double a = 0.0, b = 0.0, c = 0.0;
  double tol = kDefaultTol;
  bool json = false;
  bool csv = false;
  bool trace = false;
  double alpha = 0.0, beta = 0.0, beta_prime = 0.0, gamma = 1.0, x = 0.0, y = 0.0;
  std::string method = "series";
  double k = 0.0;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConvergence:
    case ErrorKind::SlowConvergence:
      return kNonConvergence;
    default:
      return kValidation;
  }
}

Format format_of(const Options& o) {
  if (o.json) return Format::Json;
  if (o.csv) return Format::Csv;
  return Format::Human;
}

OutputRecord record_from(const Triple& t, const MeanResult& mr, bool with_trace) {
  OutputRecord r;
  r.a = t.a;
  r.b = t.b;
  r.c = t.c;
  r.kappa0 = mr.trace.front().moduli.kappa;
  r.lambda0 = mr.trace.front().moduli.lambda;
  r.mean = mr.mean;
  r.iterations = mr.iterations;
  r.converged = mr.converged;
  if (with_trace) {
    std::vector<TraceRow> rows;
    rows.reserve(mr.trace.size());
    for (const IterationStep& s : mr.trace) {
      rows.push_back(TraceRow{static_cast<int>(s.index), s.triple.a, s.triple.b, s.triple.c,
                              s.moduli.kappa, s.moduli.lambda});
    }
    r.trace = std::move(rows);
  }
  return r;
}

void print_human(const OutputRecord& r, std::ostream& out) {
  if (r.trace) {
    out << "n a b c kappa lambda\n";
    for (const TraceRow& row : *r.trace) {
      out << row.n << ' ' << format_shortest(row.a) << ' ' << format_shortest(row.b) << ' '
          << format_shortest(row.c) << ' ' << format_shortest(row.kappa) << ' '
          << format_shortest(row.lambda) << '\n';
    }
  }
  out << "a=" << format_shortest(r.a) << " b=" << format_shortest(r.b)
      << " c=" << format_shortest(r.c) << '\n'
      << "kappa0=" << format_shortest(r.kappa0) << " lambda0=" << format_shortest(r.lambda0)
      << '\n'
      << "mean=" << format_shortest(r.mean) << '\n'
      << "iterations=" << r.iterations << '\n'
      << "converged=" << (r.converged ? "true" : "false") << '\n';
  if (r.routes) {
    for (const auto& [name, v] : *r.routes) out << "route " << name << '=' << format_shortest(v) << '\n';
  }
  if (r.skipped_routes) {
    for (const auto& name : *r.skipped_routes) out << "route " << name << " skipped\n";
  }
  if (r.residuals) {
    for (const auto& [name, v] : *r.residuals) out << "residual " << name << '=' << format_shortest(v) << '\n';
  }
}

void emit(const OutputRecord& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::Json: out << to_json(r) << '\n'; break;
    case Format::Csv: out << to_csv(r); break;
    case Format::Human: print_human(r, out); break;
  }
}

void emit_value(double v, bool json, std::ostream& out) {
  if (json) {
    out << "{\"value\":" << format_exact(v) << "}\n";
  } else {
    out << format_shortest(v) << '\n';
  }
}

int cmd_mean(const Options& o, bool trace, std::ostream& out) {
  const Triple t = validate_triple(o.a, o.b, o.c);
  const MeanResult mr = extended_mean(t, o.tol);
  emit(record_from(t, mr, trace), format_of(o), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Triple t = validate_triple(o.a, o.b, o.c);
  const MeanResult mr = extended_mean(t, o.tol);
  const VerifyReport report = verify_chain(t, o.tol);

  OutputRecord r = record_from(t, mr, o.trace);
  r.residuals = report.residuals;
  r.routes = report.routes;
  r.skipped_routes = report.skipped;
  emit(r, o.json ? Format::Json : Format::Human, out);

  const auto failed = report.failures();
  for (const auto& name : failed) {
    err << "verification failed: " << name << " residual " << format_shortest(report.residuals.at(name))
        << " exceeds " << format_shortest(kVerifyThreshold) << '\n';
  }
  return failed.empty() ? kOk : kVerificationFailed;
}

int cmd_f1(const Options& o, std::ostream& out) {
  const AppellF1Params p{o.alpha, o.beta, o.beta_prime, o.gamma};
  const double v = o.method == "reduce" ? f1_reduce(p, o.x, o.y) : appell_f1(p, o.x, o.y);
  emit_value(v, o.json, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-variable arithmetic-geometric mean and its hypergeometric cross-checks",
               "xagm"};
  app.require_subcommand(1);
  Options o;

  const auto add_triple = [&o](CLI::App* sub) {
    sub->add_option("a", o.a, "a0 > b0 + c0")->required();
    sub->add_option("b", o.b, "b0 > 0")->required();
    sub->add_option("c", o.c, "0 <= c0 <= b0")->required();
    sub->add_option("--tol", o.tol, "relative stopping tolerance (>= 4 eps)")
        ->capture_default_str();
  };

  auto* mean = app.add_subcommand("mean", "iterate to M(a0, b0, c0)");
  add_triple(mean);
  auto* mean_json = mean->add_flag("--json", o.json, "emit one JSON record");
  mean->add_flag("--csv", o.csv, "emit CSV")->excludes(mean_json);
  mean->add_flag("--trace", o.trace, "include every iteration state");

  auto* trace = app.add_subcommand("trace", "same as mean --trace");
  add_triple(trace);
  auto* trace_json = trace->add_flag("--json", o.json, "emit one JSON record");
  trace->add_flag("--csv", o.csv, "emit CSV")->excludes(trace_json);

  auto* verify = app.add_subcommand("verify", "compare a0/M across all evaluation routes");
  add_triple(verify);
  verify->add_flag("--json", o.json, "emit one JSON record");
  verify->add_flag("--trace", o.trace, "include every iteration state");

  auto* f1 = app.add_subcommand("f1", "Appell F1(alpha; beta, beta'; gamma; x, y)");
  f1->add_option("alpha", o.alpha)->required();
  f1->add_option("beta", o.beta)->required();
  f1->add_option("beta_prime", o.beta_prime)->required();
  f1->add_option("gamma", o.gamma)->required();
  f1->add_option("x", o.x)->required();
  f1->add_option("y", o.y)->required();
  f1->add_option("--method", o.method, "series or reduce (needs gamma = beta + beta')")
      ->check(CLI::IsMember({"series", "reduce"}))
      ->capture_default_str();
  f1->add_flag("--json", o.json, "emit {\"value\": ...}");

  auto* gagm = app.add_subcommand("gauss-agm", "classic agM(a, b)");
  gagm->add_option("a", o.a)->required();
  gagm->add_option("b", o.b)->required();
  gagm->add_option("--tol", o.tol)->capture_default_str();
  gagm->add_flag("--json", o.json, "emit {\"value\": ...}");

  auto* ek = app.add_subcommand("elliptic-k", "complete elliptic integral K(k)");
  ek->add_option("k", o.k)->required();
  ek->add_flag("--json", o.json, "emit {\"value\": ...}");

  std::vector<const char*> argv{"xagm"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (mean->parsed()) return cmd_mean(o, o.trace, out);
    if (trace->parsed()) return cmd_mean(o, true, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (f1->parsed()) return cmd_f1(o, out);
    if (gagm->parsed()) {
      emit_value(agm_mean(o.a, o.b, o.tol), o.json, out);
      return kOk;
    }
    if (ek->parsed()) {
      emit_value(elliptic_k(EllipticModulus{o.k}), o.json, out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kValidation;
}

}  // namespace xagm::cli
