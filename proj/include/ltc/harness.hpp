// Copyright 2026 The ltc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltc/corpus.hpp"
#include "ltc/io.hpp"
#include "ltc/tester.hpp"

namespace ltc::harness {

/// How to assemble a TestInstance from CLI-level specs.
///  - graph family + base code C: small = C^{e_small}, full = C^{e_full}.
///  - graph (family or file) + small code only: full = TPC(G, C_small),
///    derived by elimination when small enough.
struct InstanceRequest {
  std::string graph;
  std::optional<std::string> code;
  std::optional<std::string> small;
};

TestInstance build_instance(const InstanceRequest& request);

// --- Robustness sweep --------------------------------------------------------

struct SweepConfig {
  InstanceRequest instance;
  std::string corpus = "mixed:100";
  std::uint64_t seed = 1;
  Rational alpha = pow2(-16);
  bool include_views = false;
  bool sampled = false;
  std::uint64_t samples = 64;  // views per word in sampled mode
};

struct WordOutcome {
  CorpusWord source;
  RobustnessReport report;
  std::optional<Estimate> estimate;  // sampled mode only
  BoundCheck self_improvement;
  BoundCheck soundness_error;
};

struct SweepSummary {
  std::size_t words = 0;
  std::size_t violations = 0;        // words with holds == false
  std::size_t undetermined = 0;      // words whose δ was only an interval
  std::size_t bound_violations = 0;  // self-improvement / soundness bound failures
  std::optional<Rational> min_ratio;
  std::optional<HypothesisFlags> hypotheses;
};

struct SweepResult {
  std::string instance;
  SweepConfig config;
  std::vector<WordOutcome> words;
  SweepSummary summary;
  std::optional<std::string> aborted;

  bool passed() const noexcept {
    return !aborted && summary.violations == 0 && summary.bound_violations == 0;
  }
};

SweepResult run_sweep(const SweepConfig& config);
SweepResult run_sweep(const TestInstance& inst, const SweepConfig& config);

io::Json sweep_to_json(const SweepResult& result);
std::string sweep_to_csv(const SweepResult& result);

io::Json report_to_json(const RobustnessReport& report);

// --- Composition check -------------------------------------------------------

struct ComposeConfig {
  std::string code;   // base code C
  std::size_t m = 4;  // G1 = G^n_m, G2 = G^n_{m-1}, C2 = C^{m-2}
  std::string corpus = "uniform:200";
  std::uint64_t seed = 1;
};

struct ComposeWord {
  CorpusWord source;
  Rational composed;
  Rational nested;
  Rational rho_outer;  // ρ of (G1, C^{m-1})
  Rational delta;      // δ_{C^m}
  std::optional<Rational> inner_ratio_min;  // min_j ρ^{G2}(v_j)/δ_{C1}(v_j)
  bool ordering_holds = true;  // composed >= inner_ratio_min * rho_outer
};

struct ComposeResult {
  std::string instance;
  std::vector<ComposeWord> words;
  std::size_t identity_failures = 0;
  std::size_t ordering_failures = 0;
  std::optional<Rational> c_outer;     // measured c1
  std::optional<Rational> c_inner;     // measured c2
  std::optional<Rational> c_composed;  // measured c_{1©2}
  bool product_bound_holds = true;     // c_composed >= c1 * c2

  bool passed() const noexcept {
    return identity_failures == 0 && ordering_failures == 0 && product_bound_holds;
  }
};

ComposeResult run_compose_check(const ComposeConfig& config);
io::Json compose_to_json(const ComposeResult& result);

// --- Expansion check ---------------------------------------------------------

struct ExpansionConfig {
  std::string graph = "product:n=2,m=3";
  bool exhaustive = true;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
};

struct ExpansionReport {
  std::string graph;
  std::string mode;
  std::uint64_t seed = 0;
  ExpansionSweep sweep;
};

ExpansionReport run_expansion_check(const ExpansionConfig& config);
io::Json expansion_to_json(const ExpansionReport& report);

// --- Query accounting --------------------------------------------------------

struct QueryAccount {
  std::size_t n = 0;
  std::size_t t = 0;
  Rational alpha0;
  BigInt queries;      // q = n^2, the degree of H^n_t
  BigInt repetitions;  // c = ceil(alpha0^{-t})
  BigInt total;        // q * c
  std::optional<BigInt> block_length;  // N = n^{2^t} when it fits 4096 bits
  double log2_block_length = 0;
  double log2_total = 0;
  double polylog_exponent = 0;  // total = (log2 N)^e
  std::optional<std::size_t> built_degree;
};

/// Throws InvalidArgument for t < 2 or alpha0 outside (0, 1].
QueryAccount query_account(std::size_t n, std::size_t t, const Rational& alpha0,
                           bool build_graph = false);
io::Json query_account_to_json(const QueryAccount& account);

}  // namespace ltc::harness
