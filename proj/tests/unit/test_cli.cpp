#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "harmsum/cli.hpp"
#include "harmsum/error.hpp"

namespace harmsum::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "harmsum");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

VerificationReport sample(std::string id, Status s) {
  VerificationReport r;
  r.id = std::move(id);
  r.params = {{"k", Rational(2)}, {"x", Rational(7, 2)}};
  r.lhs = "0.5684157264184777734387";
  r.rhs = "0.5684157264184777734388";
  r.matched_digits = 21;
  r.method = "lhs:cvz rhs:closed-form";
  r.elapsed_ms = 12.5;
  r.status = s;
  return r;
}

TEST(CliFormat, JsonRoundTrip) {
  const std::vector<VerificationReport> in{sample("THM_HARDY_ALT", Status::Pass), sample("THM_S1", Status::Fail),
                                           sample("THM_S2", Status::Error)};
  const std::string json = format_report(in, OutputMode::Json);
  const auto out = parse_reports(json);
  ASSERT_EQ(out.size(), in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    EXPECT_EQ(out[i].id, in[i].id);
    EXPECT_EQ(out[i].params, in[i].params);
    EXPECT_EQ(out[i].lhs, in[i].lhs);
    EXPECT_EQ(out[i].rhs, in[i].rhs);
    EXPECT_EQ(out[i].matched_digits, in[i].matched_digits);
    EXPECT_EQ(out[i].method, in[i].method);
    EXPECT_DOUBLE_EQ(out[i].elapsed_ms, in[i].elapsed_ms);
    EXPECT_EQ(out[i].status, in[i].status);
  }
  EXPECT_EQ(format_report(out, OutputMode::Json), json);
}

TEST(CliFormat, JsonFieldsAreExactlyTheSchema) {
  const auto doc = nlohmann::json::parse(format_report({sample("THM_HARDY_ALT", Status::Pass)}, OutputMode::Json));
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), 1u);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc[0].items()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"elapsed_ms", "id", "lhs", "matched_digits", "method", "params", "rhs",
                                            "status"}));
  EXPECT_EQ(doc[0]["status"], "pass");
  EXPECT_EQ(doc[0]["params"]["x"], "7/2");
  EXPECT_TRUE(doc[0]["lhs"].is_string());
}

TEST(CliFormat, EmptyReports) {
  EXPECT_EQ(format_report({}, OutputMode::Json), "[]\n");
  const std::string text = format_report({}, OutputMode::Text);
  EXPECT_NE(text.find("id"), std::string::npos);
  EXPECT_NE(text.find("status"), std::string::npos);
  EXPECT_EQ(parse_reports("[]").size(), 0u);
}

TEST(CliFormat, OmitTiming) {
  const auto r = sample("THM_S1", Status::Pass);
  const std::string json = format_report({r}, OutputMode::Json, {true});
  EXPECT_DOUBLE_EQ(parse_reports(json)[0].elapsed_ms, 0.0);
}

TEST(CliFormat, ParseErrors) {
  EXPECT_THROW(parse_reports("{"), ParseError);
  EXPECT_THROW(parse_reports("{}"), ParseError);
  EXPECT_THROW(parse_reports(R"([{"id": "X"}])"), ParseError);
}

TEST(CliBinding, Grammar) {
  EXPECT_EQ(parse_binding("x=7/2"), std::make_pair(std::string("x"), Rational(7, 2)));
  EXPECT_EQ(parse_binding("k=-3"), std::make_pair(std::string("k"), Rational(-3)));
  EXPECT_THROW(parse_binding("x=0.5"), ParseError);
  EXPECT_THROW(parse_binding("x"), ParseError);
  EXPECT_THROW(parse_binding("=1"), ParseError);
  EXPECT_THROW(parse_binding("x=1/0"), ParseError);
}

TEST(CliRun, ExitCodes) {
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"special", "--fn", "zeta", "--arg", "0.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"special", "--fn", "nope", "--arg", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--id", "NO_SUCH_ID"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--id", "THM_HARDY_ALT", "--param", "k=0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"integrate", "--id", "THM_S1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"euler-sum", "--p", "1", "--q", "3"}).code, kExitUsage);
  const Outcome err = invoke({"special", "--fn", "log", "--arg", "-1"});
  EXPECT_NE(err.code, kExitOk);
  EXPECT_FALSE(err.err.empty());
}

TEST(CliRun, VerifyOne) {
  const Outcome r = invoke({"verify", "--only", "THM_S1", "--digits", "25"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("THM_S1"), std::string::npos);
  EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST(CliRun, VerifyNothingSelected) {
  const Outcome r = invoke({"verify", "--only", "NO_SUCH*", "--json", "-", "--no-timing"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("NO_SUCH*"), std::string::npos) << r.err;
}

TEST(CliRun, EulerSum) {
  const Outcome r = invoke({"euler-sum", "--p", "1", "--q", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("5/8*zeta(3)"), std::string::npos) << r.out;
  const Outcome n = invoke({"euler-sum", "--p", "1", "--q", "2", "--numeric", "--digits", "20"});
  EXPECT_NE(n.out.find("0.75128556447474642837"), std::string::npos) << n.out;
}

TEST(CliRun, Special) {
  const Outcome r = invoke({"special", "--fn", "zeta", "--arg", "3", "--digits", "30"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1.20205690315959428539973816151"), std::string::npos) << r.out;
  const Outcome li = invoke({"special", "--fn", "polylog", "--order", "2", "--arg", "1/2", "--digits", "20"});
  EXPECT_NE(li.out.find("0.58224052646501250590"), std::string::npos) << li.out;
}

TEST(CliRun, Integrate) {
  const Outcome r = invoke({"integrate", "--id", "LEMMA_LOG"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("-0.8224670334241132182362"), std::string::npos) << r.out;
}

TEST(CliRun, DeterministicJson) {
  const std::vector<std::string> args{"verify", "--only", "HARDY_BASE_ALT", "--no-timing", "--json", "-"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const auto start = a.out.find('[');
  ASSERT_NE(start, std::string::npos);
  const auto reports = parse_reports(std::string_view(a.out).substr(start));
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].status, Status::Pass);
  EXPECT_EQ(reports[0].elapsed_ms, 0.0);
}

TEST(CliRun, EvalPrintsBothSides) {
  const Outcome r = invoke({"eval", "--id", "THM_HARDY_ALT", "--param", "k=2", "--param", "x=7/2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("lhs"), std::string::npos);
  EXPECT_NE(r.out.find("rhs"), std::string::npos);
  EXPECT_NE(r.out.find("k=2, x=7/2"), std::string::npos);
  EXPECT_NE(r.out.find("0.5684157264184777734387"), std::string::npos) << r.out;
}

TEST(CliRun, ListShowsSchemas) {
  const Outcome r = invoke({"list"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("THM_HARDY_ALT"), std::string::npos);
  EXPECT_NE(r.out.find("param k: integer >= 1"), std::string::npos);
  EXPECT_NE(r.out.find("[integral]"), std::string::npos);
}

}  // namespace
}  // namespace harmsum::cli
