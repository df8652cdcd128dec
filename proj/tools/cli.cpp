#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "lacver/error.hpp"
#include "lacver/harness.hpp"
#include "lacver/identities.hpp"
#include "lacver/report.hpp"
#include "lacver/series.hpp"

namespace lacver::cli {
namespace {

template <class T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Usage problems detected after CLI11 parsing; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Defaults {
  int max_terms = TruncationPolicy{}.max_terms;
  double tol = kDefaultVerifyTol;
};

Defaults read_environment() {
  Defaults d;
  if (const char* v = std::getenv("LACVER_MAX_TERMS")) {
    const auto n = parse_number<int>(v);
    if (!n) throw UsageError(std::string("LACVER_MAX_TERMS is not an integer: ") + v);
    d.max_terms = *n;
  }
  if (const char* v = std::getenv("LACVER_TOL")) {
    const auto x = parse_number<double>(v);
    if (!x) throw UsageError(std::string("LACVER_TOL is not a number: ") + v);
    d.tol = *x;
  }
  return d;
}

// Point flags shared by verify and terms.
struct PointFlags {
  std::string id;
  double x = 0.0;
  double t = 0.0;
  double alpha = 0.0;
  int k = 0;
  int m = 0;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* m_opt = nullptr;

  void attach(CLI::App& cmd) {
    cmd.add_option("--id", id, "Identity (eq1..eq12)")->required();
    cmd.add_option("--x", x, "Laguerre argument")->required();
    cmd.add_option("--t", t, "Generating-function variable")->required();
    alpha_opt = cmd.add_option("--alpha", alpha, "Laguerre order (eq7, eq9, eq12)");
    k_opt = cmd.add_option("--k", k, "Index shift (eq4, eq5)");
    m_opt = cmd.add_option("--m", m, "Bessel order (eq8)");
  }

  IdentityId identity() const {
    const auto parsed = parse_identity_id(id);
    if (!parsed) throw UsageError("unknown identity '" + id + "' (expected eq1..eq12)");
    return *parsed;
  }

  EvalParams params() const {
    EvalParams p{x, t, std::nullopt, std::nullopt, std::nullopt};
    if (alpha_opt->count() > 0) p.alpha = alpha;
    if (k_opt->count() > 0) p.k = k;
    if (m_opt->count() > 0) p.m = m;
    return p;
  }
};

ReportFormat to_format(const std::string& s) {
  const auto f = parse_report_format(s);
  if (!f) throw UsageError("unknown format '" + s + "'");
  return *f;
}

TruncationPolicy policy_with(int max_terms) {
  TruncationPolicy policy;
  policy.max_terms = max_terms;
  policy.validate();
  return policy;
}

void write_terms(std::ostream& out, IdentityId id, const EvalParams& p, const std::string& side,
                 const TruncationPolicy& policy, ReportFormat format) {
  TermSequence seq = side == "lhs" ? lhs_terms(id, p) : rhs_terms(id, p);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();

  if (format == ReportFormat::text) {
    out << std::left << std::setw(7) << "index" << std::setw(26) << "term" << std::setw(26)
        << "partial" << "compensation\n";
  } else if (format == ReportFormat::csv) {
    out << "index,term,partial,compensation\n";
  }
  auto observer = [&](std::size_t i, double term, double partial, double comp) {
    switch (format) {
      case ReportFormat::text:
        out << std::setw(7) << i << std::setw(26) << format_number(term) << std::setw(26)
            << format_number(partial) << format_number(comp) << '\n';
        break;
      case ReportFormat::csv:
        out << i << ',' << format_number(term) << ',' << format_number(partial) << ','
            << format_number(comp) << '\n';
        break;
      case ReportFormat::json:
        rows.push_back({{"index", i}, {"term", term}, {"partial", partial}, {"compensation", comp}});
        break;
    }
  };
  const SeriesResult result = sum_adaptive(seq, policy, observer);

  if (format == ReportFormat::json) {
    nlohmann::ordered_json doc{{"id", to_string(id)},
                               {"params", to_json(p)},
                               {"side", side},
                               {"terms", rows},
                               {"result", to_json(result)}};
    out << doc.dump(2) << '\n';
  } else if (format == ReportFormat::text) {
    out << (result.converged ? "converged" : "NOT converged") << " after " << result.terms_used
        << " terms, sum " << format_number(result.value) << '\n';
  }
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) {
    throw std::invalid_argument("grid '" + std::string(spec) + "' is not of the form a:b:n");
  }
  const auto a = parse_number<double>(parts[0]);
  const auto b = parse_number<double>(parts[1]);
  const auto n = parse_number<int>(parts[2]);
  if (!a || !b || !n || *n < 1 || !std::isfinite(*a) || !std::isfinite(*b)) {
    throw std::invalid_argument("grid '" + std::string(spec) +
                                "' needs finite endpoints and a positive point count");
  }
  std::vector<double> values(*n);
  for (int i = 0; i < *n; ++i) {
    values[i] = *n == 1 ? *a : *a + (*b - *a) * i / (*n - 1);
  }
  if (*n > 1) values.back() = *b;
  return values;
}

std::vector<int> parse_int_set(std::string_view spec) {
  std::vector<int> values;
  for (std::string_view part : split(spec, ',')) {
    const auto v = parse_number<int>(part);
    if (!v || *v < 0) {
      throw std::invalid_argument("set '" + std::string(spec) +
                                  "' must be a comma list of nonnegative integers");
    }
    values.push_back(*v);
  }
  return values;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of lacunary generating functions for Laguerre polynomials",
               "lacver"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"text", "json", "csv"};
  std::string format = "text";
  int max_terms = 0;
  double tol = 0.0;
  Defaults defaults;
  try {
    defaults = read_environment();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  max_terms = defaults.max_terms;
  tol = defaults.tol;

  auto add_format = [&](CLI::App* cmd) {
    return cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
  };

  CLI::App* list = app.add_subcommand("list", "List the identities");
  add_format(list);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Compare both sides at one point");
  PointFlags vflags;
  vflags.attach(*verify_cmd);
  verify_cmd->add_option("--tol", tol, "Relative tolerance")->capture_default_str();
  verify_cmd->add_option("--max-terms", max_terms, "Series term cap")->capture_default_str();
  add_format(verify_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Compare both sides over a parameter grid");
  std::string sweep_id;
  std::string x_grid;
  std::string t_grid;
  std::string alpha_grid;
  std::string k_set;
  std::string m_set;
  std::string out_path;
  sweep_cmd->add_option("--id", sweep_id, "Identity (eq1..eq12 or all)")->required();
  sweep_cmd->add_option("--x-grid", x_grid, "x values as a:b:n")->required();
  sweep_cmd->add_option("--t-grid", t_grid, "t values as a:b:n")->required();
  CLI::Option* alpha_grid_opt = sweep_cmd->add_option("--alpha-grid", alpha_grid, "alpha values as a:b:n");
  CLI::Option* k_set_opt = sweep_cmd->add_option("--k-set", k_set, "k values as a comma list");
  CLI::Option* m_set_opt = sweep_cmd->add_option("--m-set", m_set, "m values as a comma list");
  sweep_cmd->add_option("--tol", tol, "Relative tolerance")->capture_default_str();
  sweep_cmd->add_option("--max-terms", max_terms, "Series term cap")->capture_default_str();
  sweep_cmd->add_option("--out", out_path,
                        "Write records to this file (format from .csv/.json unless --format)");
  CLI::Option* sweep_format_opt = add_format(sweep_cmd);

  CLI::App* terms_cmd = app.add_subcommand("terms", "Show one side term by term");
  PointFlags tflags;
  tflags.attach(*terms_cmd);
  std::string side;
  terms_cmd->add_option("--side", side, "lhs or rhs")
      ->required()
      ->check(CLI::IsMember({"lhs", "rhs"}));
  terms_cmd->add_option("--max-terms", max_terms, "Series term cap")->capture_default_str();
  add_format(terms_cmd);

  CLI::App* check_cmd = app.add_subcommand("check", "Run the cross-identity consistency suite");
  check_cmd->add_option("--max-terms", max_terms, "Series term cap")->capture_default_str();
  add_format(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    ReportFormat fmt = to_format(format);

    if (list->parsed()) {
      write_descriptors(out, registry(), fmt);
      return kExitPass;
    }

    if (verify_cmd->parsed()) {
      const VerificationRecord rec =
          verify(vflags.identity(), vflags.params(), tol, policy_with(max_terms));
      write_record(out, rec, fmt);
      return rec.pass ? kExitPass : kExitFail;
    }

    if (sweep_cmd->parsed()) {
      std::optional<IdentityId> target;
      if (sweep_id != "all") {
        target = parse_identity_id(sweep_id);
        if (!target) throw UsageError("unknown identity '" + sweep_id + "' (expected eq1..eq12 or all)");
      }
      ParamGrid grid;
      try {
        grid.x_values = parse_grid(x_grid);
        grid.t_values = parse_grid(t_grid);
        if (alpha_grid_opt->count() > 0) grid.alpha_values = parse_grid(alpha_grid);
        if (k_set_opt->count() > 0) grid.k_values = parse_int_set(k_set);
        if (m_set_opt->count() > 0) grid.m_values = parse_int_set(m_set);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!(tol > 0.0)) throw UsageError("--tol must be positive");
      if (!out_path.empty() && sweep_format_opt->count() == 0) {
        if (out_path.ends_with(".csv")) fmt = ReportFormat::csv;
        if (out_path.ends_with(".json")) fmt = ReportFormat::json;
      }

      const auto records = sweep(target, grid, tol, policy_with(max_terms));
      const SweepSummary summary = summarize(records);
      if (out_path.empty()) {
        write_records(out, records, fmt);
        (fmt == ReportFormat::text ? out : err) << summary_line(summary) << '\n';
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open '" + out_path + "' for writing");
        write_records(file, records, fmt);
        if (!file) throw UsageError("failed writing '" + out_path + "'");
        out << summary_line(summary) << '\n';
      }
      return summary.ok() ? kExitPass : kExitFail;
    }

    if (terms_cmd->parsed()) {
      const IdentityId id = tflags.identity();
      const EvalParams p = tflags.params();
      require_valid(id, p);
      write_terms(out, id, p, side, policy_with(max_terms), fmt);
      return kExitPass;
    }

    if (check_cmd->parsed()) {
      const auto records = cross_checks(policy_with(max_terms));
      const SweepSummary summary = summarize(records);
      write_records(out, records, fmt);
      (fmt == ReportFormat::text ? out : err) << summary_line(summary) << '\n';
      return summary.ok() ? kExitPass : kExitFail;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace lacver::cli
