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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ybp/io.hpp"
#include "ybp/linfty.hpp"
#include "ybp/tensor_map.hpp"
#include "ybp/ybe_infty.hpp"

namespace ybp {

std::string version();

/// Desk-scale limits enforced before any job runs.
struct Bounds {
  static constexpr int kMaxDim = 3;
  static constexpr int kMaxTensorDegree = 4;
  static constexpr int kMaxM = 4;
  static constexpr std::uint64_t kMaxCandidates = 1u << 20;
};

/// One input of a job: a file, or text given in place (path is then only a name).
struct JobInput {
  std::string role;
  std::string path;
  std::string text;
  ParsedObject load() const;
};

struct JobSpec {
  /// ybe.check, ybe.cae, poisson.extend, poisson.verify, quiver.build,
  /// double.verify, double.almcybe, double.aybe, operad.classify,
  /// operad.nullspace, linfty.check, linfty.cancellation, ybe-infty.check,
  /// schurweyl.decompose, schurweyl.hrdim, fixture.search
  std::string command;
  std::vector<JobInput> inputs;
  std::map<std::string, std::string> params;
  ShuffleReading shuffle_reading = ShuffleReading::kDefault;
  LinftyConvention linfty = default_convention();
  DoubleLeibnizSign double_sign = DoubleLeibnizSign::kPowerN;
  bool emit_witness = false;
  bool expect_fail = false;
  std::string output;  // written by the caller, not by run_job
};

enum class Verdict { kPass, kFail, kPreconditionUnmet };
std::string to_string(Verdict v);

struct ReportEntry {
  std::string check;
  Verdict verdict = Verdict::kPass;
  std::string witness;
  std::vector<std::string> details;
};

struct JobReport {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> conventions;
  std::vector<ReportEntry> entries;
  /// Negative control: the job passes when some check fails.
  bool expect_fail = false;
  std::string error;  // set when the job raised instead of finishing
  /// input, parse, precondition, bounds, truncation or internal
  std::string error_kind;
  bool passed() const;
};

struct Report {
  std::vector<JobReport> jobs;
  /// No failed entry and no job error.
  bool passed() const;
  bool has_error() const;
  std::string to_text() const;
};

/// Input roles: r, R, algebra, bracket, relation, family, quiver (value is a
/// path). Convention keys: shuffle (default|literal), skew (koszul|sign_odd),
/// leibniz (literal|shifted|operator), jacobi (minus-one-to-i|ij-minus-one|plus),
/// sum (shuffles|all), double-leibniz (power-n|trivial), emit-witness (yes|no),
/// expect (pass|fail), output. Anything else is a parameter.
void set_job_option(JobSpec& spec, const std::string& key, const std::string& value);

/// Throws BoundsError (with the estimated cost) or InputError before any work.
void check_bounds(const JobSpec& spec);

/// Runs one job. Errors raised by the job propagate.
JobReport run_job(const JobSpec& spec);

/// Runs the jobs concurrently and assembles the report in job order; a job
/// that raises is recorded with its error and the rest still run.
Report run_suite(const std::vector<JobSpec>& jobs);

/// Parses a suite file:
///   ybp suite 1
///   job <command> ; role=path ... ; key=value ...
/// Paths are relative to the suite file.
std::vector<JobSpec> parse_suite(const std::string& path);

/// Fixed batch covering every module, all inputs in place.
std::vector<JobSpec> builtin_suite();

enum class FixtureKind { kSkew, kSkewCybe, kSkewAybe };
std::string to_string(FixtureKind k);
FixtureKind parse_fixture_kind(const std::string& s);

/// Number of candidate maps fixture_search would enumerate.
std::uint64_t fixture_candidates(FixtureKind kind, int dim, size_t value_count);

/// Skew r on V (x) V with entries in `values`, enumerated as an odometer over
/// the swap orbits of (out, in) pairs in lexicographic order (last orbit
/// fastest), filtered by the exact residual. Throws BoundsError above the
/// candidate limit.
std::vector<TensorMap> fixture_search(FixtureKind kind, int dim, const std::vector<Scalar>& values);

}  // namespace ybp
