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
#include <utility>
#include <vector>

#include "ltc/code.hpp"
#include "ltc/kernels.hpp"
#include "ltc/rational.hpp"
#include "ltc/tanner.hpp"
#include "ltc/tensor.hpp"

namespace ltc {

/// Parameters of a base code C when the instance tests a tensor power of it.
/// Used only for hypothesis flags and the bound checks.
struct ProductParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t m = 0;  // exponent of the full code C^m
  /// True when the graph is G^n_m itself, i.e. the m-Product Tester.
  bool product_tester = false;
};

/// The natural tester of TPC(G, C_small): pick a right vertex uniformly and
/// check the view against C_small. `full` (when present) is the code the
/// tester is meant to test, used for δ.
struct TestInstance {
  OrderedGraph graph;
  LinearCode small;
  std::optional<LinearCode> full;
  std::string label;
  std::optional<ProductParams> product;

  /// Throws DegreeMismatch / LengthMismatch on inconsistent parts.
  TestInstance(OrderedGraph g, LinearCode small_code, std::optional<LinearCode> full_code,
               std::string name, std::optional<ProductParams> params = std::nullopt);
};

/// (G^n_m, C^{m-1}) with full code C^m (omitted when too large to build).
TestInstance make_product_instance(const LinearCode& base, std::size_t m);

/// Hamming distance of every view from C_small, in view order.
struct ViewCensus {
  std::vector<std::size_t> distances;
  std::size_t degree = 0;

  std::size_t views() const noexcept { return distances.size(); }
  std::uint64_t total() const noexcept;
  Rational view_rho(std::size_t j) const;
};

ViewCensus view_census(const TestInstance& inst, const Word& w,
                       kernels::Exec exec = kernels::Exec::kParallel);

/// ρ(w, j) = δ_{C_small}(w|ℓ_j).
Rational view_robustness(const TestInstance& inst, const Word& w, std::size_t j);

/// ρ(w) = E_j ρ(w, j) under the uniform distribution over right vertices.
Rational expected_robustness(const TestInstance& inst, const Word& w,
                             kernels::Exec exec = kernels::Exec::kParallel);
Rational expected_robustness(const ViewCensus& census);

struct Estimate {
  Rational mean;          // exact mean over the drawn views
  double standard_error;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples;
};

/// Unbiased estimate of ρ(w) from `samples` views drawn with replacement.
Estimate expected_robustness_sampled(const TestInstance& inst, const Word& w,
                                     std::uint64_t seed, std::uint64_t samples);

/// Fraction of views with ρ(w, j) > tau.
Rational tau_soundness_error(const ViewCensus& census, const Rational& tau);
Rational tau_soundness_error(const TestInstance& inst, const Word& w, const Rational& tau);

/// δ_C(w) for the instance's full code, or the interval [lower, 1] when the
/// full-code oracle is absent or infeasible.
struct DeltaBound {
  Rational lower;
  Rational upper;
  bool exact = false;
};

/// True iff every coordinate has weight 1/n (then ρ(w) <= δ_C(w) for every w).
bool has_uniform_coordinate_weights(const OrderedGraph& g);

DeltaBound full_code_delta(const TestInstance& inst, const Word& w, const Rational& rho);

struct RobustnessReport {
  std::string instance;
  Rational rho;
  DeltaBound delta;
  std::optional<Rational> ratio;  // ρ/δ, absent when δ is 0 or not exact
  std::optional<Rational> alpha;
  std::optional<bool> holds;      // absent when undetermined
  std::optional<Rational> tau;
  std::optional<Rational> epsilon;
  std::vector<std::pair<std::size_t, Rational>> per_view;
};

/// Checks ρ(w) >= alpha * δ_C(w). When δ is only an interval, holds is set
/// only if the inequality is decided by the interval.
RobustnessReport certify_robustness(const TestInstance& inst, const Word& w,
                                    const Rational& alpha, bool include_views = false,
                                    kernels::Exec exec = kernels::Exec::kParallel);

/// Assemble a report from a census (no recomputation).
RobustnessReport make_report(const TestInstance& inst, const Word& w, const ViewCensus& census,
                             const std::optional<Rational>& alpha, bool include_views);

struct Amplification {
  BigInt repetitions;       // c = ceil(1/alpha)
  Rational single_reject;   // p = Pr_j[ρ(w, j) > 0]
  Rational reject_prob;     // 1 - (1 - p)^c
  DeltaBound delta;
  std::optional<bool> holds;  // reject_prob >= δ/2
};

/// Tester repeated c = ceil(1/alpha) times, accepting iff every run accepts.
/// Throws TooLarge if c > 2^16.
Amplification amplified_rejection(const TestInstance& inst, const Word& w,
                                  const Rational& alpha,
                                  kernels::Exec exec = kernels::Exec::kParallel);

struct CoordinateWeights {
  std::vector<Rational> weights;  // wt(i) = Σ_{j ∋ i} p_j / q_j
  Rational min_weight;
  std::size_t argmin = 0;
  Rational total;
};

/// Uniform test distribution p_j = 1/m, q_j = t.
CoordinateWeights coordinate_weights(const OrderedGraph& g);

struct WeightWitness {
  std::size_t coordinate;
  Rational weight;
  Rational rho;
  Rational delta;
  bool rho_at_most_delta;
};

/// The weight-one word at the minimum-weight coordinate: its ρ equals the
/// weight and (for small codes of distance >= 2) ρ <= δ, so no tester of this
/// shape is more than 1-robust. Requires the full-code oracle.
WeightWitness robustness_upper_witness(const TestInstance& inst);

// --- Hypotheses and bound checks for product instances ---------------------

struct HypothesisFlags {
  bool product_tester;   // ((d-1)/n)^m >= 7/8
  bool self_improving;   // (d/n)^(m-1) >= 7/8
  bool four_two;         // ((d-1)/n)^4 >= 7/8
  bool square_recursion; // d - 1 >= (1 - 1/(10m)) n
  bool final_family;     // d/n >= 1 - 1/(7m)
};

HypothesisFlags hypotheses(const ProductParams& p);

struct BoundCheck {
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

/// If δ(r, c) <= 1/4 for the nearest c and (d/n)^(m-1) >= 7/8, require
/// δ(r, c) <= 8 ρ(r).
BoundCheck check_self_improvement(const ProductParams& p, const Rational& rho,
                                  const Rational& delta);

/// For every tau with tau + 2 ε(tau) <= (1/12)((d-1)/n)^m, require
/// δ <= 16 (n/d)^(m-1) (tau + ε(tau)). Taus checked: 0 and each distinct
/// view robustness, which covers [0, 1].
BoundCheck check_soundness_error_bound(const ProductParams& p, const ViewCensus& census,
                                       const Rational& delta);

// --- Composition -------------------------------------------------------------

struct NestedRobustness {
  Rational composed;  // E_{(j,j')} δ_{C2}(w|ℓ''_{(j,j')}) on G1 © G2
  Rational nested;    // E_j E_{j'} δ_{C2}((w|ℓ_j)|ℓ'_{j'})
  std::vector<Rational> inner;  // ρ^{G2}(w|ℓ_j) for each G1 view j
};

/// Both sides of the composition identity, computed independently: the
/// composed side walks the lists of `composed` (= graph_compose(g1, g2)), the
/// nested side takes the G1 view first and then the G2 views of it.
NestedRobustness composition_identity(const OrderedGraph& g1, const OrderedGraph& g2,
                                      const OrderedGraph& composed,
                                      const LinearCode& c2, const Word& w,
                                      kernels::Exec exec = kernels::Exec::kParallel);

}  // namespace ltc
