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


#include "ltc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ltc/error.hpp"
#include "ltc/kernels.hpp"
#include "ltc/rng.hpp"

namespace ltc::harness {

namespace {

using io::fraction;
using io::Json;

Json optional_fraction(const std::optional<Rational>& r) {
  return r ? Json(fraction(*r)) : Json(nullptr);
}

Json bound_json(const BoundCheck& c) {
  Json j;
  j["applicable"] = c.applicable;
  j["holds"] = c.holds;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json source_json(const CorpusWord& w) {
  Json j;
  j["kind"] = w.kind;
  j["item"] = w.item;
  j["index"] = w.index;
  if (w.weight > 0) j["weight"] = w.weight;
  if (w.planted_view) j["planted_view"] = *w.planted_view + 1;
  return j;
}

Json hypotheses_json(const HypothesisFlags& h) {
  Json j;
  j["product_tester"] = h.product_tester;
  j["self_improving"] = h.self_improving;
  j["four_two"] = h.four_two;
  j["square_recursion"] = h.square_recursion;
  j["final_family"] = h.final_family;
  return j;
}

Json report_body(const RobustnessReport& r, const Json* source) {
  Json j;
  j["instance"] = r.instance;
  if (source) j["word_source"] = *source;
  j["rho"] = fraction(r.rho);
  j["rho_decimal"] = to_decimal_string(r.rho);
  j["delta"] = r.delta.exact ? Json(fraction(r.delta.lower)) : Json(nullptr);
  j["delta_interval"] = Json::array({fraction(r.delta.lower), fraction(r.delta.upper)});
  j["ratio"] = optional_fraction(r.ratio);
  j["alpha"] = optional_fraction(r.alpha);
  j["holds"] = r.holds ? Json(*r.holds) : Json(nullptr);
  if (r.tau) j["tau"] = fraction(*r.tau);
  if (r.epsilon) j["epsilon"] = fraction(*r.epsilon);
  if (!r.per_view.empty()) {
    Json views = Json::array();
    for (const auto& [idx, rho] : r.per_view) views.push_back(Json::array({idx + 1, fraction(rho)}));
    j["views"] = std::move(views);
  }
  return j;
}

std::string csv_optional(const std::optional<Rational>& r) {
  return r ? fraction(*r) : std::string();
}

}  // namespace

TestInstance build_instance(const InstanceRequest& request) {
  const io::GraphFamily family = io::parse_graph_spec(request.graph);
  if (request.code) {
    if (family.kind == "file") {
      throw Error(ErrorKind::kInvalidArgument,
                  "a base code needs a graph family; pass the view code with --small");
    }
    const LinearCode base = io::parse_code_spec(*request.code).build();
    if (base.length() != family.n) {
      throw Error(ErrorKind::kLengthMismatch, "base code length " + std::to_string(base.length()) +
                                                  " != graph parameter n = " +
                                                  std::to_string(family.n));
    }
    if (family.kind == "product") {
      TestInstance inst = make_product_instance(base, family.m);
      inst.label = family.describe() + " code=" + *request.code;
      return inst;
    }
    OrderedGraph g = io::build_graph(family);
    LinearCode small = tensor_power(base, family.small_exponent()).as_linear_code();
    std::optional<LinearCode> full;
    try {
      full = tensor_power(base, family.full_exponent()).as_linear_code();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kTooLarge) throw;
    }
    ProductParams params{base.length(), base.dimension(),
                         base.known_distance() ? *base.known_distance() : min_distance(base),
                         family.full_exponent(), false};
    return TestInstance(std::move(g), std::move(small), std::move(full),
                        family.describe() + " code=" + *request.code, params);
  }
  if (!request.small) {
    throw Error(ErrorKind::kInvalidArgument, "either a base code or a small code is required");
  }
  OrderedGraph g = io::build_graph(family);
  LinearCode small = io::parse_code_spec(*request.small).build();
  std::optional<LinearCode> full;
  try {
    full = tpc_as_linear_code(TannerCode(g, small));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kTooLarge) throw;
  }
  std::optional<ProductParams> params;
  if (family.kind == "product" && family.m == 2) {
    params = ProductParams{small.length(), small.dimension(),
                           small.known_distance() ? *small.known_distance() : min_distance(small),
                           2, true};
  }
  std::string label = family.describe() + " small=" + *request.small;
  return TestInstance(std::move(g), std::move(small), std::move(full), std::move(label), params);
}

SweepResult run_sweep(const SweepConfig& config) {
  const TestInstance inst = build_instance(config.instance);
  return run_sweep(inst, config);
}

SweepResult run_sweep(const TestInstance& inst, const SweepConfig& config) {
  SweepResult result;
  result.instance = inst.label;
  result.config = config;
  const std::vector<CorpusWord> corpus =
      generate_corpus(inst, parse_corpus_spec(config.corpus), config.seed);

  std::vector<std::optional<WordOutcome>> slots(corpus.size());
  std::vector<std::string> errors(corpus.size());
  kernels::for_each_index(corpus.size(), kernels::Exec::kParallel, [&](std::uint64_t i) {
    const CorpusWord& cw = corpus[i];
    try {
      WordOutcome out{cw, {}, std::nullopt, {}, {}};
      if (config.sampled) {
        const Estimate est = expected_robustness_sampled(
            inst, cw.word, derive_seed(config.seed, 0xE57, i), config.samples);
        out.report.instance = inst.label;
        out.report.rho = est.mean;
        out.report.delta = full_code_delta(inst, cw.word, est.mean);
        if (out.report.delta.exact && out.report.delta.lower != 0) {
          out.report.ratio = est.mean / out.report.delta.lower;
        }
        out.report.alpha = config.alpha;
        out.estimate = est;
      } else {
        const ViewCensus census = view_census(inst, cw.word, kernels::Exec::kSerial);
        out.report = make_report(inst, cw.word, census, config.alpha, config.include_views);
        if (inst.product && inst.product->product_tester && out.report.delta.exact) {
          out.self_improvement =
              check_self_improvement(*inst.product, out.report.rho, out.report.delta.lower);
          out.soundness_error =
              check_soundness_error_bound(*inst.product, census, out.report.delta.lower);
        }
      }
      slots[i] = std::move(out);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!slots[i]) {
      result.aborted = "word " + std::to_string(i) + " (" + corpus[i].kind + "): " + errors[i];
      break;
    }
    result.words.push_back(std::move(*slots[i]));
  }

  SweepSummary& s = result.summary;
  s.words = result.words.size();
  for (const WordOutcome& w : result.words) {
    if (w.report.holds && !*w.report.holds) ++s.violations;
    if (!w.report.delta.exact) ++s.undetermined;
    if ((w.self_improvement.applicable && !w.self_improvement.holds) ||
        (w.soundness_error.applicable && !w.soundness_error.holds)) {
      ++s.bound_violations;
    }
    if (w.report.ratio && (!s.min_ratio || *w.report.ratio < *s.min_ratio)) {
      s.min_ratio = *w.report.ratio;
    }
  }
  if (inst.product) s.hypotheses = hypotheses(*inst.product);
  return result;
}

Json report_to_json(const RobustnessReport& report) { return report_body(report, nullptr); }

Json sweep_to_json(const SweepResult& result) {
  Json j;
  j["instance"] = result.instance;
  Json cfg;
  cfg["graph"] = result.config.instance.graph;
  cfg["code"] = result.config.instance.code ? Json(*result.config.instance.code) : Json(nullptr);
  cfg["small"] = result.config.instance.small ? Json(*result.config.instance.small) : Json(nullptr);
  cfg["corpus"] = result.config.corpus;
  cfg["seed"] = result.config.seed;
  cfg["alpha"] = fraction(result.config.alpha);
  cfg["mode"] = result.config.sampled ? "sampled" : "exact";
  if (result.config.sampled) cfg["samples"] = result.config.samples;
  j["config"] = std::move(cfg);
  const SweepSummary& s = result.summary;
  Json sum;
  sum["words"] = s.words;
  sum["violations"] = s.violations;
  sum["undetermined"] = s.undetermined;
  sum["bound_violations"] = s.bound_violations;
  sum["min_ratio"] = optional_fraction(s.min_ratio);
  sum["min_ratio_decimal"] = s.min_ratio ? Json(to_decimal_string(*s.min_ratio)) : Json(nullptr);
  sum["passed"] = result.passed();
  j["summary"] = std::move(sum);
  j["hypotheses"] = s.hypotheses ? hypotheses_json(*s.hypotheses) : Json(nullptr);
  j["aborted"] = result.aborted ? Json(*result.aborted) : Json(nullptr);
  Json reports = Json::array();
  for (const WordOutcome& w : result.words) {
    const Json src = source_json(w.source);
    Json r = report_body(w.report, &src);
    if (w.estimate) {
      r["rho_is_estimate"] = true;
      r["standard_error"] = w.estimate->standard_error;
      r["samples"] = w.estimate->samples;
    }
    if (w.self_improvement.applicable || w.soundness_error.applicable) {
      Json checks;
      checks["self_improvement"] = bound_json(w.self_improvement);
      checks["soundness_error"] = bound_json(w.soundness_error);
      r["checks"] = std::move(checks);
    }
    reports.push_back(std::move(r));
  }
  j["reports"] = std::move(reports);
  return j;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "index,kind,item,weight,rho,delta,delta_lower,delta_upper,ratio,alpha,holds,"
         "rho_decimal\n";
  std::size_t index = 0;
  for (const WordOutcome& w : result.words) {
    const RobustnessReport& r = w.report;
    out << index++ << ',' << w.source.kind << ',' << w.source.item << ',' << w.source.weight << ','
        << fraction(r.rho) << ',' << (r.delta.exact ? fraction(r.delta.lower) : std::string())
        << ',' << fraction(r.delta.lower) << ',' << fraction(r.delta.upper) << ','
        << csv_optional(r.ratio) << ',' << csv_optional(r.alpha) << ','
        << (r.holds ? (*r.holds ? "true" : "false") : "") << ',' << to_decimal_string(r.rho, 12)
        << '\n';
  }
  return out.str();
}

ComposeResult run_compose_check(const ComposeConfig& config) {
  if (config.m < 3) throw Error(ErrorKind::kInvalidArgument, "composition check needs m >= 3");
  const LinearCode base = io::parse_code_spec(config.code).build();
  const std::size_t n = base.length();
  const std::size_t m = config.m;

  TestInstance outer = make_product_instance(base, m);
  if (!outer.full) throw Error(ErrorKind::kTooLarge, "full code C^m is too large to build");
  const OrderedGraph g2 = build_product_graph(n, m - 1);
  const OrderedGraph composed = graph_compose(outer.graph, g2);
  const LinearCode c2 = tensor_power(base, m - 2).as_linear_code();

  ComposeResult result;
  result.instance = "product:n=" + std::to_string(n) + ",m=" + std::to_string(m) + " © product:n=" +
                    std::to_string(n) + ",m=" + std::to_string(m - 1) + " code=" + config.code;
  const std::vector<CorpusWord> corpus =
      generate_corpus(outer, parse_corpus_spec(config.corpus), config.seed);

  std::vector<std::optional<ComposeWord>> slots(corpus.size());
  kernels::for_each_index(corpus.size(), kernels::Exec::kParallel, [&](std::uint64_t i) {
    const Word& w = corpus[i].word;
    ComposeWord cw{corpus[i], {}, {}, {}, {}, std::nullopt, true};
    const ViewCensus census = view_census(outer, w, kernels::Exec::kSerial);
    cw.rho_outer = expected_robustness(census);
    cw.delta = nearest_codeword(*outer.full, w, kernels::Exec::kSerial).delta;
    const NestedRobustness nr =
        composition_identity(outer.graph, g2, composed, c2, w, kernels::Exec::kSerial);
    cw.composed = nr.composed;
    cw.nested = nr.nested;
    for (std::size_t j = 0; j < census.views(); ++j) {
      if (census.distances[j] == 0) continue;
      const Rational r = nr.inner[j] / census.view_rho(j);
      if (!cw.inner_ratio_min || r < *cw.inner_ratio_min) cw.inner_ratio_min = r;
    }
    if (cw.inner_ratio_min) cw.ordering_holds = cw.composed >= *cw.inner_ratio_min * cw.rho_outer;
    slots[i] = std::move(cw);
  });

  std::vector<ComposeWord> words;
  words.reserve(slots.size());
  for (auto& slot : slots) words.push_back(std::move(*slot));
  for (const ComposeWord& w : words) {
    if (w.composed != w.nested) ++result.identity_failures;
    if (!w.ordering_holds) ++result.ordering_failures;
    if (w.delta == 0) continue;
    const Rational c1 = w.rho_outer / w.delta;
    const Rational cc = w.composed / w.delta;
    if (!result.c_outer || c1 < *result.c_outer) result.c_outer = c1;
    if (!result.c_composed || cc < *result.c_composed) result.c_composed = cc;
    if (w.inner_ratio_min && (!result.c_inner || *w.inner_ratio_min < *result.c_inner)) {
      result.c_inner = *w.inner_ratio_min;
    }
  }
  if (result.c_outer && result.c_inner && result.c_composed) {
    result.product_bound_holds = *result.c_composed >= *result.c_outer * *result.c_inner;
  }
  result.words = std::move(words);
  return result;
}

Json compose_to_json(const ComposeResult& result) {
  Json j;
  j["instance"] = result.instance;
  j["words"] = result.words.size();
  j["identity_failures"] = result.identity_failures;
  j["ordering_failures"] = result.ordering_failures;
  j["c_outer"] = optional_fraction(result.c_outer);
  j["c_inner"] = optional_fraction(result.c_inner);
  j["c_composed"] = optional_fraction(result.c_composed);
  j["product_bound_holds"] = result.product_bound_holds;
  j["passed"] = result.passed();
  Json rows = Json::array();
  for (const ComposeWord& w : result.words) {
    Json r;
    r["word_source"] = source_json(w.source);
    r["composed"] = fraction(w.composed);
    r["nested"] = fraction(w.nested);
    r["rho_outer"] = fraction(w.rho_outer);
    r["delta"] = fraction(w.delta);
    r["inner_ratio_min"] = optional_fraction(w.inner_ratio_min);
    r["ordering_holds"] = w.ordering_holds;
    rows.push_back(std::move(r));
  }
  j["reports"] = std::move(rows);
  return j;
}

ExpansionReport run_expansion_check(const ExpansionConfig& config) {
  const OrderedGraph g = io::build_graph(io::parse_graph_spec(config.graph));
  ExpansionReport report;
  report.graph = config.graph;
  report.seed = config.seed;
  if (config.exhaustive) {
    report.mode = "exhaustive";
    report.sweep = expansion_exhaustive(g);
  } else {
    report.mode = "sampled";
    report.sweep = expansion_sampled(g, config.samples, config.seed);
  }
  return report;
}

Json expansion_to_json(const ExpansionReport& report) {
  Json j;
  j["graph"] = report.graph;
  j["mode"] = report.mode;
  if (report.mode == "sampled") j["seed"] = report.seed;
  j["pairs"] = report.sweep.pairs;
  j["violations"] = report.sweep.violations;
  j["worst_slack"] = fraction(report.sweep.worst_slack);
  Json s = Json::array();
  for (std::size_t v : report.sweep.worst_s) s.push_back(v + 1);
  Json t = Json::array();
  for (std::size_t v : report.sweep.worst_t) t.push_back(v + 1);
  j["worst_s"] = std::move(s);
  j["worst_t"] = std::move(t);
  return j;
}

namespace {

double log2_big(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t top = boost::multiprecision::msb(x);
  if (top < 53) return std::log2(x.convert_to<double>());
  const BigInt head = x >> (top - 52);
  return static_cast<double>(top - 52) + std::log2(head.convert_to<double>());
}

}  // namespace

QueryAccount query_account(std::size_t n, std::size_t t, const Rational& alpha0,
                           bool build_graph) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "n must be at least 2");
  if (t < 2) throw Error(ErrorKind::kInvalidArgument, "t must be at least 2");
  if (alpha0 <= 0 || alpha0 > 1) {
    throw Error(ErrorKind::kInvalidArgument, "alpha0 must lie in (0, 1]");
  }
  if (t > 62) throw Error(ErrorKind::kTooLarge, "t too large");
  QueryAccount a;
  a.n = n;
  a.t = t;
  a.alpha0 = alpha0;
  a.queries = BigInt(n) * n;
  Rational inv = 1;
  for (std::size_t i = 0; i < t; ++i) inv /= alpha0;
  a.repetitions = ceil_nonneg(inv);
  a.total = a.queries * a.repetitions;
  const double exponent = std::ldexp(1.0, static_cast<int>(t));
  a.log2_block_length = exponent * std::log2(static_cast<double>(n));
  if (a.log2_block_length <= 4096) {
    a.block_length = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(std::size_t{1} << t));
  }
  a.log2_total = log2_big(a.total);
  a.polylog_exponent = a.log2_total / std::log2(a.log2_block_length);
  if (build_graph) a.built_degree = build_square_test_graph(n, t).degree();
  return a;
}

Json query_account_to_json(const QueryAccount& a) {
  Json j;
  j["n"] = a.n;
  j["t"] = a.t;
  j["alpha0"] = fraction(a.alpha0);
  j["queries"] = a.queries.str();
  j["repetitions"] = a.repetitions.str();
  j["total_queries"] = a.total.str();
  j["block_length"] = a.block_length ? Json(a.block_length->str()) : Json(nullptr);
  j["log2_block_length"] = a.log2_block_length;
  j["log2_total_queries"] = a.log2_total;
  j["polylog_exponent"] = a.polylog_exponent;
  j["built_degree"] = a.built_degree ? Json(*a.built_degree) : Json(nullptr);
  return j;
}

}  // namespace ltc::harness
