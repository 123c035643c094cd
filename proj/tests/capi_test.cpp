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

#include <string>

#include "ybp/ybp.h"

namespace {

const std::string kData = YBP_TEST_DATA;

TEST(CApi, StatusNames) {
  EXPECT_STREQ(ybp_status_name(YBP_OK), "ok");
  EXPECT_STREQ(ybp_status_name(YBP_ERR_PARSE), "parse error");
  EXPECT_STRNE(ybp_version(), "");
}

TEST(CApi, MapResiduals) {
  ybp_map* r = nullptr;
  ASSERT_EQ(ybp_map_load((kData + "/skew_bad.ybp").c_str(), &r), YBP_OK);
  EXPECT_EQ(ybp_map_dim(r), 2);
  EXPECT_EQ(ybp_map_domain(r), 2);
  EXPECT_EQ(ybp_map_nnz(r), 4u);
  ybp_map* res = nullptr;
  ASSERT_EQ(ybp_map_residual(r, "cybe", &res), YBP_OK);
  EXPECT_EQ(ybp_map_codomain(res), 3);
  EXPECT_GT(ybp_map_nnz(res), 0u);
  char* text = nullptr;
  ASSERT_EQ(ybp_map_to_text(res, &text), YBP_OK);
  ybp_map* back = nullptr;
  ASSERT_EQ(ybp_map_parse(text, &back), YBP_OK);
  EXPECT_EQ(ybp_map_nnz(back), ybp_map_nnz(res));
  ybp_string_free(text);
  ybp_map_free(back);
  ybp_map_free(res);
  EXPECT_EQ(ybp_map_residual(r, "nope", &res), YBP_ERR_INPUT);
  EXPECT_STRNE(ybp_last_error(), "");
  ybp_map_free(r);
}

TEST(CApi, ErrorCodes) {
  ybp_map* m = nullptr;
  EXPECT_EQ(ybp_map_load((kData + "/bad_scalar.ybp").c_str(), &m), YBP_ERR_PARSE);
  EXPECT_NE(std::string(ybp_last_error()).find("line 5"), std::string::npos);
  EXPECT_EQ(ybp_map_load(nullptr, &m), YBP_ERR_INPUT);
  char* kind = nullptr;
  ASSERT_EQ(ybp_validate_file((kData + "/a2.ybp").c_str(), &kind), YBP_OK);
  EXPECT_STREQ(kind, "quiver");
  ybp_string_free(kind);
}

TEST(CApi, Jobs) {
  ybp_job* j = nullptr;
  ASSERT_EQ(ybp_job_new("ybe.cae", &j), YBP_OK);
  ASSERT_EQ(ybp_job_set(j, "r", (kData + "/skew_bad.ybp").c_str()), YBP_OK);
  ybp_report* rep = nullptr;
  const ybp_job* jobs[] = {j};
  EXPECT_EQ(ybp_run(jobs, 1, &rep), YBP_OK);
  EXPECT_EQ(ybp_report_passed(rep), 1);
  EXPECT_EQ(ybp_report_job_count(rep), 1u);
  EXPECT_NE(std::string(ybp_report_text(rep)).find("cae-identity: pass"), std::string::npos);
  ybp_report_free(rep);

  ASSERT_EQ(ybp_job_set(j, "r", (kData + "/identity.ybp").c_str()), YBP_OK);
  EXPECT_EQ(ybp_run(jobs, 1, &rep), YBP_OK);
  EXPECT_NE(std::string(ybp_report_text(rep)).find("precondition-unmet"), std::string::npos);
  ybp_report_free(rep);
  ybp_job_free(j);

  ASSERT_EQ(ybp_job_new("ybe.check", &j), YBP_OK);
  ybp_job_set(j, "r", (kData + "/skew_bad.ybp").c_str());
  ybp_job_set(j, "kind", "cybe");
  const ybp_job* one[] = {j};
  EXPECT_EQ(ybp_run(one, 1, &rep), YBP_CHECK_FAILED);
  ybp_report_free(rep);
  EXPECT_EQ(ybp_job_set(j, "shuffle", "sideways"), YBP_ERR_INPUT);
  ybp_job_free(j);
}

TEST(CApi, Suites) {
  ybp_report* rep = nullptr;
  EXPECT_EQ(ybp_run_suite_file((kData + "/suite.ybp").c_str(), &rep), YBP_OK);
  EXPECT_EQ(ybp_report_job_count(rep), 7u);
  ybp_report_free(rep);
  EXPECT_EQ(ybp_run_builtin_suite(&rep), YBP_OK);
  const std::string first = ybp_report_text(rep);
  ybp_report_free(rep);
  ASSERT_EQ(ybp_run_builtin_suite(&rep), YBP_OK);
  EXPECT_EQ(first, ybp_report_text(rep));
  ybp_report_free(rep);
}

TEST(CApi, FixtureSearch) {
  size_t count = 0;
  char* text = nullptr;
  ASSERT_EQ(ybp_fixture_search("skew-aybe", 2, "-1,0,1", &count, &text), YBP_OK);
  EXPECT_EQ(count, 17u);
  ybp_string_free(text);
  EXPECT_EQ(ybp_fixture_search("skew", 3, "-1,0,1", &count, &text), YBP_ERR_BOUNDS);
  EXPECT_EQ(ybp_fixture_search("bogus", 2, "0", &count, &text), YBP_ERR_INPUT);
}

}  // namespace
