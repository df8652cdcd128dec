#ifndef LACVER_REPORT_HPP
#define LACVER_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lacver/harness.hpp"
#include "lacver/identities.hpp"

namespace lacver {

enum class ReportFormat { text, json, csv };

std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Fixed CSV header for verification records.
inline constexpr std::string_view kRecordCsvHeader =
    "identity,x,t,alpha,k,m,lhs,rhs,abs_err,rel_err,lhs_terms,rhs_terms,pass";

/// %.17g; round-trips any double.
std::string format_number(double v);

nlohmann::ordered_json to_json(const SeriesResult& s);
nlohmann::ordered_json to_json(const EvalParams& p);
nlohmann::ordered_json to_json(const VerificationRecord& rec);
nlohmann::ordered_json to_json(const IdentityDescriptor& d);

struct SweepSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errored = 0;

  bool ok() const noexcept { return failed == 0 && errored == 0; }
};

SweepSummary summarize(std::span<const VerificationRecord> records);

/// "passed P / failed F / errored E"
std::string summary_line(const SweepSummary& s);

void write_records(std::ostream& os, std::span<const VerificationRecord> records,
                   ReportFormat format);

/// Single record; text mode prints a key/value block instead of a table.
void write_record(std::ostream& os, const VerificationRecord& rec, ReportFormat format);

void write_descriptors(std::ostream& os, std::span<const IdentityDescriptor> descriptors,
                       ReportFormat format);

}  // namespace lacver

#endif  // LACVER_REPORT_HPP
