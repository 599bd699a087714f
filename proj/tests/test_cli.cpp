#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "commands.hpp"

using namespace linefree;
using namespace linefree::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out, err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

CommandOptions fmt(OutputFormat f) {
  CommandOptions o;
  o.format = f;
  return o;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, Analyze) {
  auto r = run([](auto& o, auto& e) { return cmd_analyze("builtin:table1", std::string("A(17,6)"), {}, o, e); });
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_EQ(r.out, "A(17,6): d=17 t=(16,15,10,0,1) mu=191 simplicial=yes\n");

  auto missing = run([](auto& o, auto& e) { return cmd_analyze("builtin:table1", std::string("A(99,1)"), {}, o, e); });
  EXPECT_EQ(missing.code, exit_code::parse_error);
  EXPECT_NE(missing.err.find("A(99,1)"), std::string::npos);

  auto bad = run([](auto& o, auto& e) { return cmd_analyze("/nonexistent.cat", std::nullopt, {}, o, e); });
  EXPECT_EQ(bad.code, exit_code::parse_error);
}

TEST(Cli, AnalyzeJson) {
  auto r = run([](auto& o, auto& e) {
    return cmd_analyze("builtin:table1", std::string("A(7,1)"), fmt(OutputFormat::Json), o, e);
  });
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["mu"], 27);
  EXPECT_EQ(j[0]["disc_sign"], "pos");
  EXPECT_EQ(j[0]["roots"], nlohmann::json({2, 4}));
  EXPECT_EQ(j[0]["screen"], true);
  EXPECT_TRUE(j[0]["mdr"].is_null());
}

TEST(Cli, Screen) {
  auto r = run([](auto& o, auto& e) { return cmd_screen("builtin:table1", {}, o, e); });
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_NE(r.out.find("12 of 78 entries pass the screen"), std::string::npos);
}

TEST(Cli, ClassifyFixtures) {
  auto r = run([](auto& o, auto& e) { return cmd_classify("builtin:fixtures", std::string("non-Fano"), {}, o, e); });
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_NE(r.out.find("non-Fano: FREE exponents (3,3)"), std::string::npos);
  EXPECT_NE(r.out.find("tau=27"), std::string::npos);
}

TEST(Cli, ClassifyWithoutCoordinates) {
  auto one = run([](auto& o, auto& e) { return cmd_classify("builtin:table1", std::string("A(17,6)"), {}, o, e); });
  EXPECT_EQ(one.code, exit_code::no_coordinates);
  auto all = run([](auto& o, auto& e) { return cmd_classify("builtin:table1", std::nullopt, {}, o, e); });
  EXPECT_EQ(all.code, exit_code::no_coordinates);
}

TEST(Cli, ClassifyDegreeBelowBoundIsAnError) {
  CommandOptions o;
  o.max_degree = 1;
  auto r = run([&](auto& out, auto& e) { return cmd_classify("builtin:fixtures", std::string("generic-4"), o, out, e); });
  EXPECT_EQ(r.code, exit_code::parse_error);
}

TEST(Cli, ClassifyJsonIsIndependentOfThreadCount) {
  CommandOptions one = fmt(OutputFormat::Json), many = fmt(OutputFormat::Json);
  one.threads = 1;
  many.threads = 4;
  auto a = run([&](auto& o, auto& e) { return cmd_classify("builtin:fixtures", std::nullopt, one, o, e); });
  auto b = run([&](auto& o, auto& e) { return cmd_classify("builtin:fixtures", std::nullopt, many, o, e); });
  EXPECT_EQ(a.code, exit_code::ok);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.size(), 7u);
  EXPECT_EQ(j[4]["verdict"], "nearly free");
  EXPECT_EQ(j[4]["exponents"], nlohmann::json({2, 2}));
}

TEST(Cli, Table) {
  auto csv = run([](auto& o, auto& e) { return cmd_table(fmt(OutputFormat::Csv), o, e); });
  EXPECT_EQ(csv.code, exit_code::ok);
  EXPECT_EQ(count_lines(csv.out), 79u);
  EXPECT_NE(csv.err.find("warning: A(7,1)"), std::string::npos);
  EXPECT_EQ(csv.err.find("mismatch"), std::string::npos);

  auto md = run([](auto& o, auto& e) { return cmd_table(fmt(OutputFormat::Markdown), o, e); });
  EXPECT_EQ(md.out.rfind("| A(n,k) | (t2,t3,...) | mu | disc | roots | check |", 0), 0u);
  EXPECT_NE(md.out.find("known discrepancy"), std::string::npos);

  auto human = run([](auto& o, auto& e) { return cmd_table({}, o, e); });
  EXPECT_NE(human.out.find("78 rows, 1 known discrepancy, 0 mismatches"), std::string::npos);
}
