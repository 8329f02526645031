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


// Command-line front end for the ltc library.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltc/code.hpp"
#include "ltc/config.hpp"
#include "ltc/error.hpp"
#include "ltc/harness.hpp"
#include "ltc/io.hpp"
#include "ltc/rational.hpp"
#include "ltc/tanner.hpp"
#include "ltc/tensor.hpp"
#include "ltc/tester.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;

using ltc::io::Json;

struct Options {
  std::string code;
  std::string graph;
  std::string small;
  std::string word;
  std::string word_file;
  std::string message;
  std::string corpus;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;
  std::string alpha;
  std::string tau;
  bool exact = false;
  bool sampled = false;
  bool views = false;
  bool build = false;
  std::uint64_t threshold = 0;
  std::string out;
  std::string format = "json";
  std::size_t m = 0;
  std::size_t n = 2;
  std::size_t t = 2;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    ltc::io::write_text_file(opt.out, text.back() == '\n' ? text : text + "\n");
  }
}

void emit(const Options& opt, const Json& j) { emit(opt, j.dump(2)); }

ltc::LinearCode base_code(const Options& opt) {
  if (opt.code.empty()) throw CLI::ValidationError("--code", "is required");
  ltc::LinearCode c = ltc::io::parse_code_spec(opt.code).build();
  if (opt.m > 1) return ltc::tensor_power(c, opt.m).as_linear_code();
  return c;
}

std::optional<ltc::Rational> optional_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return ltc::parse_rational(text);
}

ltc::Word load_word(const Options& opt, const ltc::Field& field) {
  if (!opt.word.empty() && !opt.word_file.empty()) {
    throw CLI::ValidationError("--word", "use either --word or --word-file");
  }
  if (!opt.word.empty()) {
    ltc::Word w(field, ltc::io::parse_symbol_list(opt.word));
    field.check_symbols(w.symbols, "word");
    return w;
  }
  if (!opt.word_file.empty()) return ltc::io::word_from_json(field, ltc::io::read_json_file(opt.word_file));
  throw CLI::ValidationError("--word", "a word is required (--word or --word-file)");
}

ltc::harness::InstanceRequest instance_request(const Options& opt) {
  if (opt.graph.empty()) throw CLI::ValidationError("--graph", "is required");
  ltc::harness::InstanceRequest r;
  r.graph = opt.graph;
  if (!opt.code.empty()) r.code = opt.code;
  if (!opt.small.empty()) r.small = opt.small;
  return r;
}

int cmd_build_code(const Options& opt) {
  emit(opt, ltc::io::code_to_json(base_code(opt)));
  return kOk;
}

int cmd_min_distance(const Options& opt) {
  emit(opt, std::to_string(ltc::min_distance(base_code(opt))));
  return kOk;
}

int cmd_encode(const Options& opt) {
  const ltc::LinearCode c = base_code(opt);
  const std::vector<ltc::Symbol> msg = ltc::io::parse_symbol_list(opt.message);
  emit(opt, ltc::io::word_to_json(ltc::encode(c, msg)));
  return kOk;
}

int cmd_membership(const Options& opt) {
  bool member = false;
  if (opt.graph.empty()) {
    const ltc::LinearCode c = base_code(opt);
    member = ltc::is_codeword(c, load_word(opt, c.field()));
  } else {
    const ltc::io::GraphFamily family = ltc::io::parse_graph_spec(opt.graph);
    ltc::OrderedGraph g = ltc::io::build_graph(family);
    std::optional<ltc::LinearCode> small;
    if (!opt.small.empty()) {
      small = ltc::io::parse_code_spec(opt.small).build();
    } else if (!opt.code.empty() && family.kind != "file") {
      const ltc::LinearCode base = ltc::io::parse_code_spec(opt.code).build();
      small = ltc::tensor_power(base, family.small_exponent()).as_linear_code();
    } else {
      throw CLI::ValidationError("--small", "a view code is required");
    }
    const ltc::TannerCode tpc(std::move(g), *small);
    member = ltc::tpc_membership(tpc, load_word(opt, small->field()));
  }
  emit(opt, std::string(member ? "true" : "false"));
  return kOk;
}

int cmd_robustness(const Options& opt) {
  const ltc::TestInstance inst = ltc::harness::build_instance(instance_request(opt));
  const ltc::Word w = load_word(opt, inst.small.field());
  const std::optional<ltc::Rational> alpha = optional_rational(opt.alpha);
  if (opt.sampled) {
    const std::uint64_t samples = opt.samples ? opt.samples : 64;
    const ltc::Estimate est = ltc::expected_robustness_sampled(inst, w, opt.seed, samples);
    ltc::RobustnessReport r;
    r.instance = inst.label;
    r.rho = est.mean;
    r.delta = ltc::full_code_delta(inst, w, est.mean);
    if (r.delta.exact && r.delta.lower != 0) r.ratio = r.rho / r.delta.lower;
    Json j = ltc::harness::report_to_json(r);
    j["rho_is_estimate"] = true;
    j["standard_error"] = est.standard_error;
    j["samples"] = est.samples;
    j["seed"] = opt.seed;
    emit(opt, j);
    return kOk;
  }
  const ltc::ViewCensus census = ltc::view_census(inst, w);
  ltc::RobustnessReport r = ltc::make_report(inst, w, census, alpha, opt.views);
  if (!opt.tau.empty()) {
    r.tau = ltc::parse_rational(opt.tau);
    r.epsilon = ltc::tau_soundness_error(census, *r.tau);
  }
  emit(opt, ltc::harness::report_to_json(r));
  return r.holds && !*r.holds ? kPropertyFailure : kOk;
}

int cmd_sweep(const Options& opt) {
  ltc::harness::SweepConfig cfg;
  cfg.instance = instance_request(opt);
  if (!opt.corpus.empty()) cfg.corpus = opt.corpus;
  cfg.seed = opt.seed;
  if (!opt.alpha.empty()) cfg.alpha = ltc::parse_rational(opt.alpha);
  cfg.include_views = opt.views;
  cfg.sampled = opt.sampled;
  if (opt.samples) cfg.samples = opt.samples;
  const auto start = std::chrono::steady_clock::now();
  const ltc::harness::SweepResult result = ltc::harness::run_sweep(cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (opt.format == "csv") {
    emit(opt, ltc::harness::sweep_to_csv(result));
  } else {
    emit(opt, ltc::harness::sweep_to_json(result));
  }
  std::cerr << "sweep: " << result.summary.words << " words, " << result.summary.violations
            << " violations, " << result.summary.bound_violations << " bound violations, "
            << "min ratio "
            << (result.summary.min_ratio ? ltc::to_fraction_string(*result.summary.min_ratio)
                                         : std::string("n/a"))
            << ", wall time " << secs << " s\n";
  if (result.aborted) std::cerr << "sweep aborted: " << *result.aborted << '\n';
  return result.passed() ? kOk : kPropertyFailure;
}

int cmd_compose(const Options& opt) {
  ltc::harness::ComposeConfig cfg;
  if (opt.code.empty()) throw CLI::ValidationError("--code", "is required");
  cfg.code = opt.code;
  if (opt.m) cfg.m = opt.m;
  if (!opt.corpus.empty()) cfg.corpus = opt.corpus;
  cfg.seed = opt.seed;
  const ltc::harness::ComposeResult result = ltc::harness::run_compose_check(cfg);
  emit(opt, ltc::harness::compose_to_json(result));
  return result.passed() ? kOk : kPropertyFailure;
}

int cmd_expansion(const Options& opt) {
  ltc::harness::ExpansionConfig cfg;
  if (!opt.graph.empty()) cfg.graph = opt.graph;
  cfg.exhaustive = !opt.sampled;
  if (opt.samples) cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  const ltc::harness::ExpansionReport report = ltc::harness::run_expansion_check(cfg);
  emit(opt, ltc::harness::expansion_to_json(report));
  return report.sweep.violations == 0 ? kOk : kPropertyFailure;
}

int cmd_query_account(const Options& opt) {
  const ltc::Rational alpha0 = opt.alpha.empty() ? ltc::pow2(-32) : ltc::parse_rational(opt.alpha);
  const ltc::harness::QueryAccount a = ltc::harness::query_account(opt.n, opt.t, alpha0, opt.build);
  emit(opt, ltc::harness::query_account_to_json(a));
  if (a.built_degree && ltc::BigInt(*a.built_degree) != a.queries) return kPropertyFailure;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor and Tanner product codes: construction and robustness testing"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threshold", opt.threshold, "Brute-force enumeration threshold (codewords)");

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
  };
  auto add_word = [&](CLI::App* sub) {
    sub->add_option("--word", opt.word, "Comma-separated symbols");
    sub->add_option("--word-file", opt.word_file, "JSON word file");
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--graph", opt.graph, "Graph family (product:n=,m= | iterated:n=,m=,mp= | square:n=,t=) or JSON file");
    sub->add_option("--code", opt.code, "Base code C (rs:q=,n=,k= | rep:q=,n= | full:q=,n= | JSON file)");
    sub->add_option("--small", opt.small, "View code checked on each right vertex");
  };

  CLI::App* build = app.add_subcommand("build-code", "Print a code as JSON");
  build->add_option("--code", opt.code)->required();
  build->add_option("--m", opt.m, "Tensor power");
  add_out(build);

  CLI::App* mind = app.add_subcommand("min-distance", "Brute-force minimum distance");
  mind->add_option("--code", opt.code)->required();
  mind->add_option("--m", opt.m, "Tensor power");
  add_out(mind);

  CLI::App* enc = app.add_subcommand("encode", "Encode a message");
  enc->add_option("--code", opt.code)->required();
  enc->add_option("--message", opt.message, "Comma-separated message symbols")->required();
  enc->add_option("--m", opt.m, "Tensor power");
  add_out(enc);

  CLI::App* mem = app.add_subcommand("membership", "Codeword membership (code or Tanner product)");
  add_instance(mem);
  add_word(mem);
  add_out(mem);

  CLI::App* rob = app.add_subcommand("robustness", "Expected robustness and distance of one word");
  add_instance(rob);
  add_word(rob);
  rob->add_option("--alpha", opt.alpha, "Robustness threshold to certify");
  rob->add_option("--tau", opt.tau, "Report the tau-soundness error");
  rob->add_flag("--exact", opt.exact, "Exact census over all views (default)");
  rob->add_flag("--sampled", opt.sampled, "Estimate from sampled views");
  rob->add_option("--samples", opt.samples, "Views drawn in sampled mode");
  rob->add_option("--seed", opt.seed);
  rob->add_flag("--views", opt.views, "Include per-view robustness");
  add_out(rob);

  CLI::App* sw = app.add_subcommand("sweep", "Robustness sweep over a seeded corpus");
  add_instance(sw);
  sw->add_option("--corpus", opt.corpus, "Corpus spec, e.g. mixed:100,uniform:20");
  sw->add_option("--seed", opt.seed);
  sw->add_option("--alpha", opt.alpha, "Robustness threshold (default 2^-16)");
  sw->add_flag("--exact", opt.exact, "Exact census over all views (default)");
  sw->add_flag("--sampled", opt.sampled, "Estimate from sampled views");
  sw->add_option("--samples", opt.samples, "Views drawn per word in sampled mode");
  sw->add_flag("--views", opt.views, "Include per-view robustness");
  sw->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  add_out(sw);

  CLI::App* comp = app.add_subcommand("compose-check", "Check the composed/nested robustness identity");
  comp->add_option("--code", opt.code)->required();
  comp->add_option("--m", opt.m, "Outer product order (default 4)");
  comp->add_option("--corpus", opt.corpus);
  comp->add_option("--seed", opt.seed);
  add_out(comp);

  CLI::App* exp = app.add_subcommand("expansion-check", "Edge expansion of a bi-regular graph");
  exp->add_option("--graph", opt.graph);
  exp->add_flag("--exact", opt.exact, "Exhaustive enumeration (default)");
  exp->add_flag("--sampled", opt.sampled, "Seeded random pairs");
  exp->add_option("--samples", opt.samples);
  exp->add_option("--seed", opt.seed);
  add_out(exp);

  CLI::App* qa = app.add_subcommand("query-account", "Query complexity of the square tester");
  qa->add_option("--n", opt.n);
  qa->add_option("--t", opt.t);
  qa->add_option("--alpha", opt.alpha, "Per-level robustness alpha0 (default 2^-32)");
  qa->add_flag("--build", opt.build, "Build H^n_t and compare its degree");
  add_out(qa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (opt.exact && opt.sampled) throw CLI::ValidationError("--exact", "conflicts with --sampled");
    if (opt.threshold) {
      ltc::Limits l = ltc::limits();
      l.enumeration_threshold = opt.threshold;
      ltc::set_limits(l);
    }
    if (build->parsed()) return cmd_build_code(opt);
    if (mind->parsed()) return cmd_min_distance(opt);
    if (enc->parsed()) return cmd_encode(opt);
    if (mem->parsed()) return cmd_membership(opt);
    if (rob->parsed()) return cmd_robustness(opt);
    if (sw->parsed()) return cmd_sweep(opt);
    if (comp->parsed()) return cmd_compose(opt);
    if (exp->parsed()) return cmd_expansion(opt);
    if (qa->parsed()) return cmd_query_account(opt);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ltc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
