#include "lacver/report.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <type_traits>

namespace lacver {
namespace {

using nlohmann::ordered_json;

const char* kind_name(GeneratingKind k) {
  return k == GeneratingKind::exponential ? "EGF" : "OGF";
}

std::string required_list(const RequiredParams& r) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ' ';
    out += name;
  };
  add(r.alpha, "alpha");
  add(r.k, "k");
  add(r.m, "m");
  return out.empty() ? "-" : out;
}

std::string status(const VerificationRecord& rec) {
  if (rec.error) return "ERROR";
  return rec.pass ? "PASS" : "FAIL";
}

template <class T>
std::string optional_field(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return format_number(*v);
  } else {
    return std::to_string(*v);
  }
}

void write_csv_row(std::ostream& os, const VerificationRecord& rec) {
  const EvalParams& p = rec.params;
  os << to_string(rec.id) << ',' << format_number(p.x) << ',' << format_number(p.t) << ','
     << optional_field(p.alpha) << ',' << optional_field(p.k) << ',' << optional_field(p.m)
     << ',';
  if (rec.error) {
    os << ",,,,,,error\n";
    return;
  }
  os << format_number(rec.lhs.value) << ',' << format_number(rec.rhs.value) << ','
     << format_number(rec.abs_err) << ',' << format_number(rec.rel_err) << ','
     << rec.lhs.terms_used << ',' << rec.rhs.terms_used << ',' << (rec.pass ? "true" : "false")
     << '\n';
}

std::string params_text(const EvalParams& p) {
  std::ostringstream os;
  os << "x=" << format_number(p.x) << " t=" << format_number(p.t);
  if (p.alpha) os << " alpha=" << format_number(*p.alpha);
  if (p.k) os << " k=" << *p.k;
  if (p.m) os << " m=" << *p.m;
  return os.str();
}

std::string series_text(const SeriesResult& s) {
  std::ostringstream os;
  os << format_number(s.value) << "  (" << s.terms_used << " terms, "
     << (s.converged ? "converged" : "NOT converged") << ')';
  return os.str();
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::text;
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  return std::nullopt;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json to_json(const SeriesResult& s) {
  return ordered_json{{"value", s.value},
                      {"terms_used", s.terms_used},
                      {"last_term_mag", s.last_term_mag},
                      {"converged", s.converged}};
}

ordered_json to_json(const EvalParams& p) {
  ordered_json j{{"x", p.x}, {"t", p.t}};
  if (p.alpha) j["alpha"] = *p.alpha;
  if (p.k) j["k"] = *p.k;
  if (p.m) j["m"] = *p.m;
  return j;
}

ordered_json to_json(const VerificationRecord& rec) {
  ordered_json j;
  j["id"] = to_string(rec.id);
  if (!rec.check.empty()) j["check"] = rec.check;
  j["params"] = to_json(rec.params);
  if (rec.error) {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["abs_err"] = nullptr;
    j["rel_err"] = nullptr;
  } else {
    j["lhs"] = to_json(rec.lhs);
    j["rhs"] = to_json(rec.rhs);
    j["abs_err"] = rec.abs_err;
    j["rel_err"] = rec.rel_err;
  }
  j["tol"] = rec.tol;
  j["pass"] = rec.pass;
  if (rec.error) j["error"] = *rec.error;
  return j;
}

ordered_json to_json(const IdentityDescriptor& d) {
  ordered_json req = ordered_json::array();
  if (d.required.alpha) req.push_back("alpha");
  if (d.required.k) req.push_back("k");
  if (d.required.m) req.push_back("m");
  return ordered_json{{"id", to_string(d.id)},
                      {"equation", d.equation},
                      {"kind", kind_name(d.kind)},
                      {"lacunarity", d.lacunarity},
                      {"required_params", req},
                      {"t_domain",
                       {{"lo", d.t_domain.lo}, {"hi", d.t_domain.hi}, {"hi_open", d.t_domain.hi_open}}}};
}

SweepSummary summarize(std::span<const VerificationRecord> records) {
  SweepSummary s;
  for (const auto& r : records) {
    if (r.error) {
      ++s.errored;
    } else if (r.pass) {
      ++s.passed;
    } else {
      ++s.failed;
    }
  }
  return s;
}

std::string summary_line(const SweepSummary& s) {
  std::ostringstream os;
  os << "passed " << s.passed << " / failed " << s.failed << " / errored " << s.errored;
  return os.str();
}

void write_records(std::ostream& os, std::span<const VerificationRecord> records,
                   ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
      return;
    }
    case ReportFormat::csv:
      os << kRecordCsvHeader << '\n';
      for (const auto& r : records) write_csv_row(os, r);
      return;
    case ReportFormat::text:
      os << std::left << std::setw(6) << "id" << ' ' << std::setw(44) << "params" << ' '
         << std::setw(24) << "lhs" << ' ' << std::setw(24) << "rhs" << ' ' << std::setw(10)
         << "rel_err" << ' ' << "result\n";
      for (const auto& r : records) {
        os << std::setw(6) << to_string(r.id) << ' ' << std::setw(44) << params_text(r.params)
           << ' ';
        if (r.error) {
          os << "ERROR: " << *r.error << '\n';
          continue;
        }
        std::ostringstream err;
        err << std::setprecision(3) << r.rel_err;
        os << std::setw(24) << format_number(r.lhs.value) << ' ' << std::setw(24)
           << format_number(r.rhs.value) << ' ' << std::setw(10) << err.str() << ' ' << status(r);
        if (!r.check.empty()) os << "  " << r.check;
        os << '\n';
      }
      return;
  }
}

void write_record(std::ostream& os, const VerificationRecord& rec, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      os << to_json(rec).dump(2) << '\n';
      return;
    case ReportFormat::csv:
      os << kRecordCsvHeader << '\n';
      write_csv_row(os, rec);
      return;
    case ReportFormat::text:
      os << "identity  " << to_string(rec.id) << '\n';
      if (!rec.check.empty()) os << "check     " << rec.check << '\n';
      os << "params    " << params_text(rec.params) << '\n';
      if (rec.error) {
        os << "error     " << *rec.error << '\n';
      } else {
        os << "lhs       " << series_text(rec.lhs) << '\n'
           << "rhs       " << series_text(rec.rhs) << '\n'
           << "abs_err   " << format_number(rec.abs_err) << '\n'
           << "rel_err   " << format_number(rec.rel_err) << '\n';
      }
      os << "tol       " << format_number(rec.tol) << '\n'
         << "result    " << status(rec) << '\n';
      return;
  }
}

void write_descriptors(std::ostream& os, std::span<const IdentityDescriptor> descriptors,
                       ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& d : descriptors) arr.push_back(to_json(d));
      os << arr.dump(2) << '\n';
      return;
    }
    case ReportFormat::csv:
      os << "id,equation,kind,lacunarity,required_params,t_domain\n";
      for (const auto& d : descriptors) {
        os << to_string(d.id) << ',' << d.equation << ',' << kind_name(d.kind) << ','
           << d.lacunarity << ',' << required_list(d.required) << ",\"" << d.t_domain.to_string()
           << "\"\n";
      }
      return;
    case ReportFormat::text:
      os << std::left << std::setw(6) << "id" << std::setw(10) << "equation" << std::setw(6)
         << "kind" << std::setw(12) << "lacunarity" << std::setw(10) << "params"
         << "t-domain\n";
      for (const auto& d : descriptors) {
        os << std::setw(6) << to_string(d.id) << std::setw(10) << ("(" + std::to_string(d.equation) + ")")
           << std::setw(6) << kind_name(d.kind) << std::setw(12) << d.lacunarity << std::setw(10)
           << required_list(d.required) << d.t_domain.to_string() << '\n';
      }
      return;
  }
}

}  // namespace lacver
