#include "lacver/report.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "lacver/harness.hpp"

namespace lacver {
namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<VerificationRecord> sample_records() {
  ParamGrid g;
  g.x_values = {1.0};
  g.t_values = {0.2, 2.0};
  g.k_values = std::vector<int>{1};
  auto recs = sweep(IdentityId::eq4, g);
  auto more = sweep(IdentityId::eq10, g);
  recs.insert(recs.end(), more.begin(), more.end());
  return recs;
}

TEST(FormatNumber, SeventeenDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(format_number(1e-7), "9.9999999999999995e-08");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(ParseFormat, Names) {
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::csv);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::json);
  EXPECT_EQ(parse_report_format("text"), ReportFormat::text);
  EXPECT_FALSE(parse_report_format("xml").has_value());
}

TEST(Csv, HeaderAndColumns) {
  const auto recs = sample_records();
  std::ostringstream os;
  write_records(os, recs, ReportFormat::csv);
  const auto rows = lines(os.str());
  ASSERT_EQ(rows.size(), recs.size() + 1);
  EXPECT_EQ(rows[0], "identity,x,t,alpha,k,m,lhs,rhs,abs_err,rel_err,lhs_terms,rhs_terms,pass");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(std::count(rows[i].begin(), rows[i].end(), ','), 12) << rows[i];
  }
  EXPECT_EQ(rows[1].rfind("eq4,1,0.20000000000000001,,1,,", 0), 0u) << rows[1];
  EXPECT_TRUE(rows[1].ends_with(",true"));
  // eq10 at t = 2 is outside its domain.
  EXPECT_EQ(rows[4], "eq10,1,2,,,,,,,,,,error");
}

TEST(Json, RoundTripsAndCarriesFields) {
  const auto recs = sample_records();
  std::ostringstream os;
  write_records(os, recs, ReportFormat::json);
  const auto doc = nlohmann::ordered_json::parse(os.str());
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), recs.size());
  EXPECT_EQ(doc.dump(2) + "\n", os.str());

  const auto& first = doc[0];
  EXPECT_EQ(first["id"], "eq4");
  EXPECT_EQ(first["params"]["k"], 1);
  EXPECT_FALSE(first["params"].contains("alpha"));
  EXPECT_EQ(first["lhs"]["value"].get<double>(), recs[0].lhs.value);
  EXPECT_EQ(first["rhs"]["terms_used"].get<std::size_t>(), recs[0].rhs.terms_used);
  EXPECT_TRUE(first["pass"].get<bool>());
  for (const char* key : {"id", "params", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass"}) {
    EXPECT_TRUE(first.contains(key)) << key;
  }
  const auto& err = doc[3];
  EXPECT_TRUE(err["lhs"].is_null());
  EXPECT_FALSE(err["pass"].get<bool>());
  EXPECT_TRUE(err["error"].is_string());
}

TEST(Json, DescriptorList) {
  std::ostringstream os;
  write_descriptors(os, registry(), ReportFormat::json);
  const auto doc = nlohmann::json::parse(os.str());
  ASSERT_EQ(doc.size(), 12u);
  EXPECT_EQ(doc[7]["id"], "eq8");
  EXPECT_EQ(doc[7]["required_params"][0], "m");
  EXPECT_EQ(doc[0]["kind"], "EGF");
  EXPECT_EQ(doc[9]["t_domain"]["hi_open"], true);
}

TEST(Descriptors, CsvAndText) {
  std::ostringstream csv;
  write_descriptors(csv, registry(), ReportFormat::csv);
  EXPECT_EQ(lines(csv.str()).size(), 13u);
  std::ostringstream text;
  write_descriptors(text, registry(), ReportFormat::text);
  EXPECT_EQ(lines(text.str()).size(), 13u);
}

TEST(Summary, Counts) {
  const auto recs = sample_records();
  const SweepSummary s = summarize(recs);
  EXPECT_EQ(s.passed, 3u);
  EXPECT_EQ(s.failed, 0u);
  EXPECT_EQ(s.errored, 1u);
  EXPECT_FALSE(s.ok());
  EXPECT_EQ(summary_line(s), "passed 3 / failed 0 / errored 1");
}

TEST(TextRecord, Fields) {
  const VerificationRecord r = verify(IdentityId::eq1, EvalParams{1.0, 0.3, {}, {}, {}});
  std::ostringstream os;
  write_record(os, r, ReportFormat::text);
  const std::string s = os.str();
  EXPECT_NE(s.find("identity  eq1"), std::string::npos);
  EXPECT_NE(s.find("result    PASS"), std::string::npos);
}

}  // namespace
}  // namespace lacver
