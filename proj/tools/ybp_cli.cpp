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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ybp/ybp.h"

namespace {

// One CLI option forwarded to the job as key=value.
struct Opt {
  std::string flag;
  std::string key;
  std::string help;
  bool required = false;
};

struct Verb {
  std::string verb, sub, command, help;
  std::vector<Opt> opts;
  std::vector<std::pair<std::string, std::string>> switches = {};  // --flag -> key=value when set
};

const std::vector<Opt> kLinftyFlags{
    {"--skew", "skew", "koszul | sign_odd"},
    {"--leibniz", "leibniz", "literal | shifted | operator"},
    {"--jacobi", "jacobi", "minus-one-to-i | ij-minus-one | plus"},
    {"--sum", "sum", "shuffles | all"},
};

std::vector<Opt> with_linfty(std::vector<Opt> v) {
  v.insert(v.end(), kLinftyFlags.begin(), kLinftyFlags.end());
  return v;
}

std::vector<Verb> verbs() {
  return {
      {"ybe", "check", "ybe.check", "Yang-Baxter residual of a map",
       {{"--kind", "kind", "cybe | aybe | qybe", true}, {"--input", "r", "tensormap file", true}}},
      {"ybe", "cae", "ybe.cae", "CYBE = AYBE - (132) AYBE (132) for a skew map",
       {{"--input", "r", "tensormap file", true}}},
      {"ybe", "search", "fixture.search", "enumerate skew fixtures on V (x) V",
       {{"--kind", "kind", "skew | skew-cybe | skew-aybe", true},
        {"--dim", "dim", "dim V", true},
        {"--values", "values", "comma separated entries (default -1,0,1)"}}},
      {"poisson", "extend", "poisson.extend", "bracket of two monomials",
       {{"--r", "r", "tensormap file", true}, {"--lhs", "lhs", "word", true}, {"--rhs", "rhs", "word", true}}},
      {"poisson", "verify", "poisson.verify", "twisted Poisson axioms of the extended bracket",
       {{"--r", "r", "tensormap file", true}, {"--max-degree", "max-degree", "total degree cap (default 3)"}}},
      {"quiver", "build", "quiver.build", "truncated path / preprojective algebra",
       {{"--type", "type", "path | preprojective | deformed | polynomial", true},
        {"--cap", "cap", "degree cap", true},
        {"--quiver", "quiver", "quiver file"},
        {"--lambda", "lambda", "comma separated, one per vertex (deformed)"}}},
      {"double", "verify", "double.verify", "double Poisson axioms",
       {{"--algebra", "algebra", "algebra file", true}, {"--bracket", "bracket", "doublebracket file", true}}},
      {"double", "almcybe", "double.almcybe", "almost-CYBE identity",
       {{"--algebra", "algebra", "algebra file", true}, {"--bracket", "bracket", "doublebracket file", true}}},
      {"double", "aybe", "double.aybe", "double Lie axioms against skew + AYBE",
       {{"--r", "r", "tensormap file", true}}},
      {"operad", "classify", "operad.classify", "name the operad of a relation space",
       {{"--sym", "sym", "none | sym | skew"}, {"--relation", "relation", "relation file", true}}},
      {"operad", "nullspace", "operad.nullspace", "solutions of the Leibniz constraint system",
       {{"--sym", "sym", "none | sym | skew", true}}},
      {"linfty", "check", "linfty.check", "L-infinity relations of a bracket family",
       with_linfty({{"--family", "family", "linfty file", true}, {"--max-m", "max-m", "largest m (default 3)"}}),
       {{"--products", "products=yes"}}},
      {"linfty", "cancellation", "linfty.cancellation", "formal cancellation of product terms",
       with_linfty({{"--max-m", "max-m", "largest m (default 3)"}})},
      {"ybe-infty", "check", "ybe-infty.check", "CYBE / AYBE infinity residual",
       {{"--kind", "kind", "cybe | aybe", true},
        {"--algebra", "algebra", "structure file", true},
        {"--family", "family", "rnfamily file", true},
        {"--n", "n", "tensor degree", true}},
       {{"--literal-shuffles", "shuffle=literal"}}},
      {"schurweyl", "decompose", "schurweyl.decompose", "partition table of V^{(x)m}",
       {{"--R", "R", "tensormap file", true}, {"--m", "m", "tensor power", true}}},
      {"schurweyl", "hrdim", "schurweyl.hrdim", "dim HR_m by relations and by commutant",
       {{"--R", "R", "tensormap file", true}, {"--m", "m", "tensor power", true}}},
  };
}

const std::map<std::string, std::string> kVerbHelp{
    {"ybe", "classical, associative and quantum Yang-Baxter residuals"},
    {"poisson", "twisted Poisson bracket built from r"},
    {"quiver", "path and preprojective algebras"},
    {"double", "double Poisson brackets"},
    {"operad", "quadratic operads and the Leibniz constraint"},
    {"linfty", "L-infinity bracket families"},
    {"ybe-infty", "infinity versions of CYBE and AYBE"},
    {"schurweyl", "R-matrix Schur-Weyl decomposition"},
};

int exit_code(ybp_status s) {
  if (s == YBP_OK) return 0;
  if (s == YBP_CHECK_FAILED) return 1;
  return 2;
}

int emit(ybp_status s, ybp_report* rep, const std::string& output) {
  if (rep) {
    const char* text = ybp_report_text(rep);
    if (output.empty()) {
      std::fputs(text, stdout);
    } else {
      std::ofstream out(output);
      out << text;
      if (!out) {
        std::cerr << "ybp: cannot write " << output << "\n";
        ybp_report_free(rep);
        return 2;
      }
    }
    ybp_report_free(rep);
  }
  if (s != YBP_OK && s != YBP_CHECK_FAILED) std::cerr << "ybp: " << ybp_status_name(s) << ": " << ybp_last_error() << "\n";
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Yang-Baxter equations, twisted and double Poisson brackets"};
  app.set_version_flag("--version", std::string(ybp_version()));
  app.require_subcommand(1);
  app.fallthrough();
  bool emit_witness = false;
  std::string output;
  app.add_flag("--emit-witness", emit_witness, "dump full residual maps");
  app.add_option("--output", output, "write the report here instead of stdout");

  const auto table = verbs();
  std::map<std::string, CLI::App*> tops;
  std::vector<std::map<std::string, std::string>> values(table.size());
  std::vector<std::map<std::string, bool>> flags(table.size());
  std::vector<CLI::App*> subs;
  for (size_t i = 0; i < table.size(); ++i) {
    const Verb& v = table[i];
    CLI::App*& top = tops[v.verb];
    if (!top) {
      top = app.add_subcommand(v.verb, kVerbHelp.at(v.verb));
      top->require_subcommand(1);
    }
    CLI::App* sub = top->add_subcommand(v.sub, v.help);
    for (const Opt& o : v.opts) {
      auto* opt = sub->add_option(o.flag, values[i][o.key], o.help);
      if (o.required) opt->required();
    }
    for (const auto& [flag, kv] : v.switches) sub->add_flag(flag, flags[i][kv]);
    subs.push_back(sub);
  }

  CLI::App* suite = app.add_subcommand("suite", "run a suite file, or the builtin suite");
  std::string suite_file;
  suite->add_option("--file", suite_file, "suite file (ybp suite 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (suite->parsed()) {
    ybp_report* rep = nullptr;
    ybp_status s = suite_file.empty() ? ybp_run_builtin_suite(&rep) : ybp_run_suite_file(suite_file.c_str(), &rep);
    return emit(s, rep, output);
  }

  for (size_t i = 0; i < table.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    ybp_job* job = nullptr;
    ybp_status s = ybp_job_new(table[i].command.c_str(), &job);
    auto set = [&](const std::string& k, const std::string& v) {
      if (s == YBP_OK) s = ybp_job_set(job, k.c_str(), v.c_str());
    };
    for (const Opt& o : table[i].opts) {
      if (subs[i]->count(o.flag) > 0) set(o.key, values[i][o.key]);
    }
    for (const auto& [kv, on] : flags[i]) {
      if (on) set(kv.substr(0, kv.find('=')), kv.substr(kv.find('=') + 1));
    }
    if (emit_witness) set("emit-witness", "yes");
    ybp_report* rep = nullptr;
    if (s == YBP_OK) {
      const ybp_job* jobs[] = {job};
      s = ybp_run(jobs, 1, &rep);
    }
    ybp_job_free(job);
    return emit(s, rep, output);
  }
  return 2;
}
