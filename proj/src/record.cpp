#include "xagm/record.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "xagm/error.hpp"

namespace xagm {

namespace {

std::string chars(double v, std::chars_format fmt, int precision) {
  char buf[64];
  const auto res = precision > 0 ? std::to_chars(buf, buf + sizeof buf, v, fmt, precision)
                                 : std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string json_number(double v) { return std::isfinite(v) ? format_exact(v) : "null"; }

// Keys and route names are plain identifiers; escaping only covers the
// characters JSON requires.
std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

void write_map(std::ostringstream& os, const std::map<std::string, double>& m) {
  os << '{';
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) os << ',';
    first = false;
    os << json_string(k) << ':' << json_number(v);
  }
  os << '}';
}

double number_or_nan(const nlohmann::json& j) {
  return j.is_null() ? std::nan("") : j.get<double>();
}

}  // namespace

std::string format_exact(double v) { return chars(v, std::chars_format::general, 17); }

std::string format_shortest(double v) { return chars(v, std::chars_format::general, 0); }

std::string to_json(const OutputRecord& r) {
  std::ostringstream os;
  os << "{\"a\":" << json_number(r.a) << ",\"b\":" << json_number(r.b)
     << ",\"c\":" << json_number(r.c) << ",\"converged\":" << (r.converged ? "true" : "false")
     << ",\"iterations\":" << r.iterations << ",\"kappa0\":" << json_number(r.kappa0)
     << ",\"lambda0\":" << json_number(r.lambda0) << ",\"mean\":" << json_number(r.mean);
  if (r.residuals) {
    os << ",\"residuals\":";
    write_map(os, *r.residuals);
  }
  if (r.routes) {
    os << ",\"routes\":";
    write_map(os, *r.routes);
  }
  if (r.skipped_routes) {
    os << ",\"skipped_routes\":[";
    for (std::size_t i = 0; i < r.skipped_routes->size(); ++i) {
      if (i) os << ',';
      os << json_string((*r.skipped_routes)[i]);
    }
    os << ']';
  }
  if (r.trace) {
    os << ",\"trace\":[";
    for (std::size_t i = 0; i < r.trace->size(); ++i) {
      const TraceRow& row = (*r.trace)[i];
      if (i) os << ',';
      os << "{\"a\":" << json_number(row.a) << ",\"b\":" << json_number(row.b)
         << ",\"c\":" << json_number(row.c) << ",\"kappa\":" << json_number(row.kappa)
         << ",\"lambda\":" << json_number(row.lambda) << ",\"n\":" << row.n << '}';
    }
    os << ']';
  }
  os << '}';
  return os.str();
}

OutputRecord parse_record(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    OutputRecord r;
    r.a = number_or_nan(j.at("a"));
    r.b = number_or_nan(j.at("b"));
    r.c = number_or_nan(j.at("c"));
    r.converged = j.at("converged").get<bool>();
    r.iterations = j.at("iterations").get<int>();
    r.kappa0 = number_or_nan(j.at("kappa0"));
    r.lambda0 = number_or_nan(j.at("lambda0"));
    r.mean = number_or_nan(j.at("mean"));
    const auto read_map = [](const nlohmann::json& obj) {
      std::map<std::string, double> m;
      for (const auto& [k, v] : obj.items()) m[k] = number_or_nan(v);
      return m;
    };
    if (j.contains("residuals")) r.residuals = read_map(j.at("residuals"));
    if (j.contains("routes")) r.routes = read_map(j.at("routes"));
    if (j.contains("skipped_routes")) {
      r.skipped_routes = j.at("skipped_routes").get<std::vector<std::string>>();
    }
    if (j.contains("trace")) {
      std::vector<TraceRow> rows;
      for (const auto& row : j.at("trace")) {
        rows.push_back(TraceRow{row.at("n").get<int>(), number_or_nan(row.at("a")),
                                number_or_nan(row.at("b")), number_or_nan(row.at("c")),
                                number_or_nan(row.at("kappa")), number_or_nan(row.at("lambda"))});
      }
      r.trace = std::move(rows);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParamError, std::string("malformed output record: ") + e.what());
  }
}

std::string to_csv(const OutputRecord& r) {
  std::ostringstream os;
  if (r.trace) {
    os << "n,a,b,c,kappa,lambda\n";
    for (const TraceRow& row : *r.trace) {
      os << row.n << ',' << format_exact(row.a) << ',' << format_exact(row.b) << ','
         << format_exact(row.c) << ',' << format_exact(row.kappa) << ','
         << format_exact(row.lambda) << '\n';
    }
    return os.str();
  }
  os << "a,b,c,kappa0,lambda0,mean,iterations,converged\n"
     << format_exact(r.a) << ',' << format_exact(r.b) << ',' << format_exact(r.c) << ','
     << format_exact(r.kappa0) << ',' << format_exact(r.lambda0) << ',' << format_exact(r.mean)
     << ',' << r.iterations << ',' << (r.converged ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace xagm
