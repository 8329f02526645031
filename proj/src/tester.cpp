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

#include "ltc/tester.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "ltc/rng.hpp"

namespace ltc {

namespace {

Rational frac(std::uint64_t num, std::uint64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

Rational rational_pow(const Rational& base, std::size_t e) {
  Rational result = 1;
  Rational b = base;
  while (e != 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

void require_word(const TestInstance& inst, const Word& w) {
  require_same_field(inst.small.field(), w.field);
  if (w.size() != inst.graph.left_count()) {
    throw Error(ErrorKind::kLengthMismatch,
                "word length " + std::to_string(w.size()) + " vs " +
                    std::to_string(inst.graph.left_count()) + " left vertices");
  }
}

}  // namespace

TestInstance::TestInstance(OrderedGraph g, LinearCode small_code,
                           std::optional<LinearCode> full_code, std::string name,
                           std::optional<ProductParams> params)
    : graph(std::move(g)),
      small(std::move(small_code)),
      full(std::move(full_code)),
      label(std::move(name)),
      product(params) {
  if (small.length() != graph.degree()) {
    throw Error(ErrorKind::kDegreeMismatch,
                "small code length " + std::to_string(small.length()) + " vs degree " +
                    std::to_string(graph.degree()));
  }
  if (full) {
    require_same_field(full->field(), small.field());
    if (full->length() != graph.left_count()) {
      throw Error(ErrorKind::kLengthMismatch, "full code length differs from n_left");
    }
  }
}

TestInstance make_product_instance(const LinearCode& base, std::size_t m) {
  if (m < 2) throw Error(ErrorKind::kInvalidArgument, "product tester needs m >= 2");
  OrderedGraph g = build_product_graph(base.length(), m);
  LinearCode small = tensor_power(base, m - 1).as_linear_code();
  std::optional<LinearCode> full;
  try {
    full = tensor_power(base, m).as_linear_code();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kTooLarge) throw;
  }
  ProductParams params{base.length(), base.dimension(),
                       base.known_distance() ? *base.known_distance() : min_distance(base), m,
                       true};
  std::string label = "product(n=" + std::to_string(base.length()) +
                      ",k=" + std::to_string(base.dimension()) +
                      ",q=" + std::to_string(base.field().order()) +
                      ",m=" + std::to_string(m) + ")";
  return TestInstance(std::move(g), std::move(small), std::move(full), std::move(label), params);
}

std::uint64_t ViewCensus::total() const noexcept {
  std::uint64_t s = 0;
  for (std::size_t d : distances) s += d;
  return s;
}

Rational ViewCensus::view_rho(std::size_t j) const { return frac(distances.at(j), degree); }

ViewCensus view_census(const TestInstance& inst, const Word& w, kernels::Exec exec) {
  require_word(inst, w);
  ViewCensus census;
  census.degree = inst.graph.degree();
  census.distances.resize(inst.graph.right_count());
  kernels::for_each_index(inst.graph.right_count(), exec, [&](std::size_t j) {
    const std::vector<Symbol> v = view(inst.graph, w.symbols, j);
    census.distances[j] =
        kernels::nearest_codeword(inst.small.field(), inst.small.generator(), v,
                                  kernels::Exec::kSerial)
            .distance;
  });
  return census;
}

Rational view_robustness(const TestInstance& inst, const Word& w, std::size_t j) {
  require_word(inst, w);
  if (j >= inst.graph.right_count()) {
    throw Error(ErrorKind::kIndexOutOfRange, "right vertex " + std::to_string(j));
  }
  const Word v(w.field, view(inst.graph, w.symbols, j));
  return nearest_codeword(inst.small, v).delta;
}

Rational expected_robustness(const ViewCensus& census) {
  return frac(census.total(), static_cast<std::uint64_t>(census.views()) * census.degree);
}

Rational expected_robustness(const TestInstance& inst, const Word& w, kernels::Exec exec) {
  return expected_robustness(view_census(inst, w, exec));
}

Estimate expected_robustness_sampled(const TestInstance& inst, const Word& w,
                                     std::uint64_t seed, std::uint64_t samples) {
  require_word(inst, w);
  if (samples == 0) throw Error(ErrorKind::kInvalidArgument, "sampled mode needs samples > 0");
  Rng rng(derive_seed(seed, 0x0b5e, 0));
  std::vector<std::size_t> picks(samples);
  for (auto& j : picks) j = uniform_below(rng, inst.graph.right_count());
  std::vector<std::size_t> dist(samples);
  kernels::for_each_index(samples, kernels::Exec::kParallel, [&](std::size_t s) {
    dist[s] = kernels::nearest_codeword(inst.small.field(), inst.small.generator(),
                                        view(inst.graph, w.symbols, picks[s]),
                                        kernels::Exec::kSerial)
                  .distance;
  });
  std::uint64_t sum = 0;
  for (std::size_t d : dist) sum += d;
  const double t = static_cast<double>(inst.graph.degree());
  const double mean = static_cast<double>(sum) / (static_cast<double>(samples) * t);
  double se = 0.0;
  if (samples > 1) {
    double ss = 0.0;
    for (std::size_t d : dist) {
      const double x = static_cast<double>(d) / t - mean;
      ss += x * x;
    }
    se = std::sqrt(ss / static_cast<double>(samples - 1) / static_cast<double>(samples));
  }
  return {frac(sum, samples * inst.graph.degree()), se, samples};
}

Rational tau_soundness_error(const ViewCensus& census, const Rational& tau) {
  std::uint64_t above = 0;
  for (std::size_t j = 0; j < census.views(); ++j) {
    if (census.view_rho(j) > tau) ++above;
  }
  return frac(above, census.views());
}

Rational tau_soundness_error(const TestInstance& inst, const Word& w, const Rational& tau) {
  return tau_soundness_error(view_census(inst, w), tau);
}

bool has_uniform_coordinate_weights(const OrderedGraph& g) {
  const std::vector<std::size_t> deg = g.left_degrees();
  return std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == deg.front(); });
}

DeltaBound full_code_delta(const TestInstance& inst, const Word& w, const Rational& rho) {
  if (inst.full) {
    try {
      const Nearest nc = nearest_codeword(*inst.full, w);
      return {nc.delta, nc.delta, true};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kTooLargeToEnumerate) throw;
    }
  }
  // Uniform coordinate weights give ρ(w) <= δ(w, c) for every codeword c.
  Rational lower = has_uniform_coordinate_weights(inst.graph) ? rho : Rational(0);
  return {lower, Rational(1), false};
}

RobustnessReport make_report(const TestInstance& inst, const Word& w, const ViewCensus& census,
                             const std::optional<Rational>& alpha, bool include_views) {
  RobustnessReport r;
  r.instance = inst.label;
  r.rho = expected_robustness(census);
  r.delta = full_code_delta(inst, w, r.rho);
  if (r.delta.exact && r.delta.lower != 0) r.ratio = r.rho / r.delta.lower;
  if (alpha) {
    r.alpha = *alpha;
    if (r.rho >= *alpha * r.delta.upper) {
      r.holds = true;
    } else if (r.rho < *alpha * r.delta.lower) {
      r.holds = false;
    }
  }
  if (include_views) {
    for (std::size_t j = 0; j < census.views(); ++j) r.per_view.emplace_back(j, census.view_rho(j));
  }
  return r;
}

RobustnessReport certify_robustness(const TestInstance& inst, const Word& w,
                                    const Rational& alpha, bool include_views,
                                    kernels::Exec exec) {
  return make_report(inst, w, view_census(inst, w, exec), alpha, include_views);
}

Amplification amplified_rejection(const TestInstance& inst, const Word& w,
                                  const Rational& alpha, kernels::Exec exec) {
  if (alpha <= 0) throw Error(ErrorKind::kInvalidArgument, "alpha must be positive");
  Amplification a;
  a.repetitions = ceil_nonneg(Rational(1) / alpha);
  if (a.repetitions > (BigInt(1) << 16)) {
    throw Error(ErrorKind::kTooLarge, "amplification factor " + a.repetitions.str() + " > 2^16");
  }
  const ViewCensus census = view_census(inst, w, exec);
  std::uint64_t rejecting = 0;
  for (std::size_t d : census.distances) rejecting += d > 0;
  a.single_reject = frac(rejecting, census.views());
  a.reject_prob = 1 - rational_pow(1 - a.single_reject, a.repetitions.convert_to<std::size_t>());
  a.delta = full_code_delta(inst, w, expected_robustness(census));
  if (a.reject_prob >= a.delta.upper / 2) {
    a.holds = true;
  } else if (a.reject_prob < a.delta.lower / 2) {
    a.holds = false;
  }
  return a;
}

CoordinateWeights coordinate_weights(const OrderedGraph& g) {
  const std::vector<std::size_t> deg = g.left_degrees();
  const std::uint64_t den = static_cast<std::uint64_t>(g.right_count()) * g.degree();
  CoordinateWeights cw;
  cw.weights.reserve(deg.size());
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    cw.weights.push_back(frac(deg[i], den));
    sum += deg[i];
    if (deg[i] < deg[cw.argmin]) cw.argmin = i;
  }
  cw.min_weight = cw.weights[cw.argmin];
  cw.total = frac(sum, den);
  return cw;
}

WeightWitness robustness_upper_witness(const TestInstance& inst) {
  if (!inst.full) {
    throw Error(ErrorKind::kInvalidArgument, "weight witness needs the full-code oracle");
  }
  const CoordinateWeights cw = coordinate_weights(inst.graph);
  Word w = Word::zeros(inst.small.field(), inst.graph.left_count());
  w.symbols[cw.argmin] = 1;
  const Rational rho = expected_robustness(inst, w);
  const Rational delta = nearest_codeword(*inst.full, w).delta;
  return {cw.argmin, cw.min_weight, rho, delta, rho <= delta};
}

HypothesisFlags hypotheses(const ProductParams& p) {
  const Rational seven_eighths = ratio(7, 8);
  const auto n = static_cast<std::int64_t>(p.n);
  const auto d = static_cast<std::int64_t>(p.d);
  const auto m = static_cast<std::int64_t>(p.m);
  HypothesisFlags h{};
  h.product_tester = rational_pow(ratio(d - 1, n), p.m) >= seven_eighths;
  h.self_improving = p.m >= 1 && rational_pow(ratio(d, n), p.m - 1) >= seven_eighths;
  h.four_two = rational_pow(ratio(d - 1, n), 4) >= seven_eighths;
  h.square_recursion = Rational(d - 1) >= (1 - ratio(1, 10 * m)) * n;
  h.final_family = ratio(d, n) >= 1 - ratio(1, 7 * m);
  return h;
}

BoundCheck check_self_improvement(const ProductParams& p, const Rational& rho,
                                  const Rational& delta) {
  BoundCheck c;
  const bool distance_ok =
      rational_pow(ratio(static_cast<std::int64_t>(p.d), static_cast<std::int64_t>(p.n)),
                   p.m - 1) >= ratio(7, 8);
  c.applicable = distance_ok && delta <= ratio(1, 4);
  if (!c.applicable) return c;
  c.holds = delta <= 8 * rho;
  if (!c.holds) {
    c.detail = "delta " + to_fraction_string(delta) + " > 8 * rho " + to_fraction_string(rho);
  }
  return c;
}

BoundCheck check_soundness_error_bound(const ProductParams& p, const ViewCensus& census,
                                       const Rational& delta) {
  BoundCheck c;
  const auto n = static_cast<std::int64_t>(p.n);
  const auto d = static_cast<std::int64_t>(p.d);
  const Rational limit = ratio(1, 12) * rational_pow(ratio(d - 1, n), p.m);
  const Rational factor = 16 * rational_pow(ratio(n, d), p.m - 1);
  std::set<Rational> taus{Rational(0)};
  for (std::size_t j = 0; j < census.views(); ++j) taus.insert(census.view_rho(j));
  for (const Rational& tau : taus) {
    const Rational eps = tau_soundness_error(census, tau);
    if (tau + 2 * eps > limit) continue;
    c.applicable = true;
    if (delta > factor * (tau + eps)) {
      c.holds = false;
      c.detail = "tau " + to_fraction_string(tau) + ", eps " + to_fraction_string(eps) +
                 ": delta " + to_fraction_string(delta) + " exceeds bound";
      return c;
    }
  }
  return c;
}

NestedRobustness composition_identity(const OrderedGraph& g1, const OrderedGraph& g2,
                                      const OrderedGraph& composed,
                                      const LinearCode& c2, const Word& w,
                                      kernels::Exec exec) {
  if (composed.left_count() != g1.left_count() ||
      composed.right_count() != g1.right_count() * g2.right_count() ||
      composed.degree() != g2.degree() || g2.left_count() != g1.degree()) {
    throw Error(ErrorKind::kDegreeMismatch, "graphs do not form G1 © G2");
  }
  if (c2.length() != g2.degree()) {
    throw Error(ErrorKind::kDegreeMismatch, "C2 length differs from the G2 degree");
  }
  if (w.size() != g1.left_count()) throw Error(ErrorKind::kLengthMismatch, "word length");
  const Field& f = c2.field();
  auto small_distance = [&](const std::vector<Symbol>& v) {
    return kernels::nearest_codeword(f, c2.generator(), v, kernels::Exec::kSerial).distance;
  };

  std::vector<std::size_t> flat(composed.right_count());
  kernels::for_each_index(composed.right_count(), exec, [&](std::size_t jj) {
    flat[jj] = small_distance(view(composed, w.symbols, jj));
  });

  // Nested: one ρ^{G2} per G1 view, each an exact rational, then the mean.
  std::vector<Rational> per_outer(g1.right_count());
  kernels::for_each_index(g1.right_count(), exec, [&](std::size_t j) {
    const std::vector<Symbol> outer = view(g1, w.symbols, j);
    std::uint64_t sum = 0;
    for (std::size_t j2 = 0; j2 < g2.right_count(); ++j2) sum += small_distance(view(g2, outer, j2));
    per_outer[j] = frac(sum, static_cast<std::uint64_t>(g2.right_count()) * g2.degree());
  });

  NestedRobustness out;
  std::uint64_t total = 0;
  for (std::size_t d : flat) total += d;
  out.composed = frac(total, static_cast<std::uint64_t>(composed.right_count()) * composed.degree());
  Rational nested = 0;
  for (const Rational& r : per_outer) nested += r;
  out.nested = nested / static_cast<std::int64_t>(g1.right_count());
  out.inner = std::move(per_outer);
  return out;
}

}  // namespace ltc
