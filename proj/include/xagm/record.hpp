#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xagm {

struct TraceRow {
  int n = 0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double kappa = 0.0;
  double lambda = 0.0;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// Machine-readable result of the `mean`, `trace` and `verify` commands.
/// `residuals`, `routes` and `skipped_routes` are present iff verification
/// ran; `trace` is present iff a trace was requested.
struct OutputRecord {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double kappa0 = 0.0;
  double lambda0 = 0.0;
  double mean = 0.0;
  int iterations = 0;
  bool converged = false;
  std::optional<std::map<std::string, double>> residuals;
  std::optional<std::map<std::string, double>> routes;
  std::optional<std::vector<std::string>> skipped_routes;
  std::optional<std::vector<TraceRow>> trace;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Canonical JSON: one line, keys in lexicographic order, doubles with 17
/// significant digits, non-finite doubles as null.
std::string to_json(const OutputRecord& r);

/// Inverse of to_json.  Throws Error{ParamError} on malformed input.
OutputRecord parse_record(std::string_view json);

/// Header plus one summary row, or header plus trace rows when a trace is
/// present (columns n,a,b,c,kappa,lambda).
std::string to_csv(const OutputRecord& r);

/// 17 significant digits, as used in JSON and CSV output.
std::string format_exact(double v);

/// Shortest representation that round-trips, for human-readable output.
std::string format_shortest(double v);

}  // namespace xagm
