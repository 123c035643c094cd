// Copyright 2026 The ybpoisson Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "ybp/error.hpp"
#include "ybp/harness.hpp"

namespace ybp {
namespace {

const std::string kData = YBP_TEST_DATA;

JobSpec job(const std::string& command, const std::vector<std::pair<std::string, std::string>>& kv) {
  JobSpec s;
  s.command = command;
  for (const auto& [k, v] : kv) set_job_option(s, k, v);
  return s;
}

TEST(Report, EmptySuitePasses) {
  const Report r = run_suite({});
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.has_error());
  EXPECT_EQ(r.to_text(), "ybp report 1\nversion " + version() + "\nresult pass\n");
}

TEST(Jobs, YbeCheck) {
  const Report ok = run_suite({job("ybe.check", {{"r", kData + "/skew_aybe.ybp"}, {"kind", "aybe"}})});
  EXPECT_TRUE(ok.passed());
  const Report bad = run_suite({job("ybe.check", {{"r", kData + "/skew_bad.ybp"}, {"kind", "cybe"}})});
  EXPECT_FALSE(bad.passed());
  EXPECT_FALSE(bad.has_error());
  ASSERT_EQ(bad.jobs.size(), 1u);
  EXPECT_FALSE(bad.jobs[0].entries.at(0).witness.empty());
}

TEST(Jobs, ExpectFailInvertsTheResult) {
  JobSpec s = job("poisson.verify", {{"r", kData + "/skew_bad.ybp"}, {"max-degree", "3"}});
  EXPECT_FALSE(run_suite({s}).passed());
  set_job_option(s, "expect", "fail");
  EXPECT_TRUE(run_suite({s}).passed());
}

TEST(Jobs, ErrorsAreClassified) {
  const Report r = run_suite({job("ybe.check", {{"r", kData + "/bad_scalar.ybp"}, {"kind", "cybe"}}),
                              job("ybe.cae", {{"r", kData + "/identity.ybp"}}),
                              job("no.such.command", {})});
  ASSERT_EQ(r.jobs.size(), 3u);
  EXPECT_TRUE(r.has_error());
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.jobs[0].error_kind, "parse");
  // an unmet precondition is a verdict, not an error
  EXPECT_TRUE(r.jobs[1].error.empty());
  EXPECT_EQ(r.jobs[1].entries.at(0).verdict, Verdict::kPreconditionUnmet);
  EXPECT_TRUE(r.jobs[1].passed());
  EXPECT_EQ(r.jobs[2].error_kind, "input");
}

TEST(Bounds, RejectedBeforeWork) {
  try {
    check_bounds(job("fixture.search", {{"kind", "skew"}, {"dim", "3"}, {"values", "-1,0,1"}}));
    FAIL() << "expected a bounds error";
  } catch (const BoundsError& e) {
    EXPECT_NE(std::string(e.what()).find("candidates"), std::string::npos) << e.what();
  }
  EXPECT_THROW(check_bounds(job("schurweyl.decompose", {{"R", kData + "/identity.ybp"}, {"m", "5"}})), BoundsError);
  EXPECT_NO_THROW(check_bounds(job("schurweyl.decompose", {{"R", kData + "/identity.ybp"}, {"m", "3"}})));
  EXPECT_EQ(fixture_candidates(FixtureKind::kSkew, 2, 3), 729u);
}

TEST(Options, Conventions) {
  JobSpec s;
  set_job_option(s, "shuffle", "literal");
  EXPECT_EQ(s.shuffle_reading, ShuffleReading::kLiteral);
  set_job_option(s, "sum", "all");
  EXPECT_FALSE(s.linfty.shuffles);
  set_job_option(s, "double-leibniz", "trivial");
  EXPECT_EQ(s.double_sign, DoubleLeibnizSign::kTrivial);
  EXPECT_THROW(set_job_option(s, "shuffle", "sideways"), InputError);
  set_job_option(s, "r", "a.ybp");
  set_job_option(s, "r", "b.ybp");
  ASSERT_EQ(s.inputs.size(), 1u);
  EXPECT_EQ(s.inputs[0].path, "b.ybp");
  set_job_option(s, "max-m", "3");
  EXPECT_EQ(s.params.at("max-m"), "3");
}

TEST(Suite, FileRunsAndIsDeterministic) {
  const auto jobs = parse_suite(kData + "/suite.ybp");
  ASSERT_EQ(jobs.size(), 7u);
  EXPECT_TRUE(jobs[2].expect_fail);
  const Report a = run_suite(jobs), b = run_suite(jobs);
  EXPECT_TRUE(a.passed()) << a.to_text();
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_THROW(parse_suite(kData + "/zero.ybp"), ParseError);
}

TEST(Suite, BuiltinPasses) {
  const Report r = run_suite(builtin_suite());
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_GE(r.jobs.size(), 25u);
}

}  // namespace
}  // namespace ybp
