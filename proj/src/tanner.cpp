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

#include "ltc/tanner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "ltc/config.hpp"
#include "ltc/rng.hpp"

namespace ltc {

namespace {

class ExplicitLists final : public OrderedGraph::Adjacency {
 public:
  ExplicitLists(std::size_t t, std::vector<std::uint32_t> flat)
      : t_(t), flat_(std::move(flat)) {}
  std::size_t neighbor(std::size_t j, std::size_t i) const override {
    return flat_[j * t_ + i];
  }

 private:
  std::size_t t_;
  std::vector<std::uint32_t> flat_;
};

class ProductAdjacency final : public OrderedGraph::Adjacency {
 public:
  ProductAdjacency(std::size_t n, std::size_t m) : n_(n), m_(m), pow_(m + 1, 1) {
    for (std::size_t e = 1; e <= m; ++e) pow_[e] = pow_[e - 1] * n;
  }
  std::size_t neighbor(std::size_t j, std::size_t i) const override {
    const std::size_t b = j / n_;
    const std::size_t a = j % n_;
    const std::size_t low_size = pow_[m_ - 1 - b];  // axes after b
    const std::size_t high = i / low_size;
    const std::size_t low = i % low_size;
    return (high * n_ + a) * low_size + low;
  }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::size_t> pow_;
};

class ComposedAdjacency final : public OrderedGraph::Adjacency {
 public:
  ComposedAdjacency(OrderedGraph outer, OrderedGraph inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {}
  std::size_t neighbor(std::size_t j, std::size_t i) const override {
    const std::size_t m = inner_.right_count();
    return outer_.neighbor(j / m, inner_.neighbor(j % m, i));
  }

 private:
  OrderedGraph outer_;
  OrderedGraph inner_;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::size_t checked_pow(std::size_t base, std::size_t e, const std::string& what) {
  const std::uint64_t cap = limits().max_word_length;
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && v > cap / base) {
      throw Error(ErrorKind::kTooLarge,
                  what + ": " + std::to_string(base) + "^" + std::to_string(e) +
                      " exceeds the word-length limit " + std::to_string(cap));
    }
    v *= base;
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

OrderedGraph::OrderedGraph(std::size_t n_left, std::size_t m_right, std::size_t t_degree,
                           std::shared_ptr<const Adjacency> adjacency, std::string name)
    : n_left_(n_left),
      m_right_(m_right),
      t_degree_(t_degree),
      adjacency_(std::move(adjacency)),
      name_(std::move(name)),
      explicit_(dynamic_cast<const ExplicitLists*>(adjacency_.get()) != nullptr) {}

std::vector<std::size_t> OrderedGraph::list(std::size_t j) const {
  if (j >= m_right_) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "right vertex " + std::to_string(j) + " of " + std::to_string(m_right_));
  }
  std::vector<std::size_t> out(t_degree_);
  for (std::size_t i = 0; i < t_degree_; ++i) out[i] = neighbor(j, i);
  return out;
}

std::uint64_t OrderedGraph::entry_count() const noexcept {
  return saturating_mul(m_right_, t_degree_);
}

OrderedGraph OrderedGraph::materialized() const {
  if (explicit_) return *this;
  if (entry_count() > limits().adjacency_budget) {
    throw Error(ErrorKind::kTooLarge,
                name_ + " has " + std::to_string(entry_count()) +
                    " adjacency entries, over the budget " +
                    std::to_string(limits().adjacency_budget));
  }
  if (n_left_ > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::kTooLarge, "left vertex count does not fit 32 bits");
  }
  std::vector<std::uint32_t> flat(m_right_ * t_degree_);
  kernels::for_each_index(m_right_, kernels::Exec::kParallel, [&](std::size_t j) {
    for (std::size_t i = 0; i < t_degree_; ++i) {
      flat[j * t_degree_ + i] = static_cast<std::uint32_t>(neighbor(j, i));
    }
  });
  return {n_left_, m_right_, t_degree_,
          std::make_shared<ExplicitLists>(t_degree_, std::move(flat)), name_};
}

std::vector<std::size_t> OrderedGraph::left_degrees() const {
  std::vector<std::size_t> deg(n_left_, 0);
  for (std::size_t j = 0; j < m_right_; ++j) {
    for (std::size_t i = 0; i < t_degree_; ++i) ++deg[neighbor(j, i)];
  }
  return deg;
}

OrderedGraph make_ordered_graph(std::size_t n_left,
                                const std::vector<std::vector<std::size_t>>& lists,
                                std::string name) {
  if (lists.empty()) throw Error(ErrorKind::kInvalidArgument, "graph needs at least one list");
  const std::size_t t = lists.front().size();
  if (t == 0) throw Error(ErrorKind::kRaggedLists, "lists must be nonempty");
  if (n_left > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::kTooLarge, "left vertex count does not fit 32 bits");
  }
  std::vector<std::uint32_t> flat;
  flat.reserve(lists.size() * t);
  for (std::size_t j = 0; j < lists.size(); ++j) {
    if (lists[j].size() != t) {
      throw Error(ErrorKind::kRaggedLists,
                  "list " + std::to_string(j) + " has length " +
                      std::to_string(lists[j].size()) + ", expected " + std::to_string(t));
    }
    for (std::size_t v : lists[j]) {
      if (v >= n_left) {
        throw Error(ErrorKind::kEntryOutOfRange,
                    "list " + std::to_string(j) + " entry " + std::to_string(v) +
                        " not below n_left = " + std::to_string(n_left));
      }
      flat.push_back(static_cast<std::uint32_t>(v));
    }
  }
  return {n_left, lists.size(), t, std::make_shared<ExplicitLists>(t, std::move(flat)),
          std::move(name)};
}

OrderedGraph graph_compose(const OrderedGraph& g, const OrderedGraph& g2) {
  if (g2.left_count() != g.degree()) {
    throw Error(ErrorKind::kDegreeMismatch,
                "inner graph has " + std::to_string(g2.left_count()) +
                    " left vertices, outer degree is " + std::to_string(g.degree()));
  }
  const std::uint64_t right = saturating_mul(g.right_count(), g2.right_count());
  if (right > limits().max_word_length) {
    throw Error(ErrorKind::kTooLarge, "composed graph has too many right vertices");
  }
  OrderedGraph composed(g.left_count(), static_cast<std::size_t>(right), g2.degree(),
                        std::make_shared<ComposedAdjacency>(g, g2),
                        "(" + g.name() + ")©(" + g2.name() + ")");
  if (composed.entry_count() <= limits().adjacency_budget) return composed.materialized();
  return composed;
}

OrderedGraph build_product_graph(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw Error(ErrorKind::kInvalidArgument, "product graph needs n, m >= 1");
  const std::size_t left = checked_pow(n, m, "G^n_m");
  const std::size_t degree = left / n;
  OrderedGraph g(left, m * n, degree, std::make_shared<ProductAdjacency>(n, m),
                 "G^" + std::to_string(n) + "_" + std::to_string(m));
  if (g.entry_count() <= limits().adjacency_budget) return g.materialized();
  return g;
}

OrderedGraph build_iterated_graph(std::size_t n, std::size_t m, std::size_t m_small) {
  if (m_small < 1 || m_small >= m) {
    throw Error(ErrorKind::kInvalidArgument,
                "iterated graph needs 1 <= m' < m, got m=" + std::to_string(m) +
                    " m'=" + std::to_string(m_small));
  }
  if (m_small + 1 == m) return build_product_graph(n, m);
  return graph_compose(build_product_graph(n, m), build_iterated_graph(n, m - 1, m_small));
}

std::size_t square_test_left_count(std::size_t n, std::size_t t) {
  if (t < 2) throw Error(ErrorKind::kInvalidArgument, "H^n_t needs t >= 2");
  if (t >= 63) throw Error(ErrorKind::kTooLarge, "t too large");
  return checked_pow(n, std::size_t{1} << t, "H^n_t");
}

OrderedGraph build_square_test_graph(std::size_t n, std::size_t t) {
  square_test_left_count(n, t);
  if (t == 2) return build_iterated_graph(n, 4, 2);
  const std::size_t big_n = checked_pow(n, std::size_t{1} << (t - 2), "H^n_t");
  return graph_compose(build_iterated_graph(big_n, 4, 2), build_square_test_graph(n, t - 1));
}

std::vector<Symbol> view(const OrderedGraph& g, std::span<const Symbol> w, std::size_t j) {
  std::vector<Symbol> out(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) out[i] = w[g.neighbor(j, i)];
  return out;
}

TannerCode::TannerCode(OrderedGraph graph, LinearCode small)
    : graph_(std::move(graph)), small_(std::move(small)) {
  if (small_.length() != graph_.degree()) {
    throw Error(ErrorKind::kDegreeMismatch,
                "small code length " + std::to_string(small_.length()) +
                    " vs graph degree " + std::to_string(graph_.degree()));
  }
}

bool tpc_membership(const TannerCode& code, const Word& w, kernels::Exec exec) {
  require_same_field(code.small().field(), w.field);
  const OrderedGraph& g = code.graph();
  if (w.size() != g.left_count()) {
    throw Error(ErrorKind::kLengthMismatch,
                "word length " + std::to_string(w.size()) + " vs " +
                    std::to_string(g.left_count()) + " left vertices");
  }
  std::atomic<bool> ok{true};
  kernels::for_each_index(g.right_count(), exec, [&](std::size_t j) {
    if (!ok.load(std::memory_order_relaxed)) return;
    if (!code.small().contains(view(g, w.symbols, j))) {
      ok.store(false, std::memory_order_relaxed);
    }
  });
  return ok.load();
}

LinearCode tpc_as_linear_code(const TannerCode& code) {
  const OrderedGraph& g = code.graph();
  const Field& f = code.small().field();
  const Matrix h = code.small().parity_check();
  const std::uint64_t rows = saturating_mul(g.right_count(), h.rows());
  if (saturating_mul(rows, g.left_count()) > limits().adjacency_budget) {
    throw Error(ErrorKind::kTooLarge, "TPC constraint matrix exceeds the budget");
  }
  Matrix constraints(static_cast<std::size_t>(rows), g.left_count());
  for (std::size_t j = 0; j < g.right_count(); ++j) {
    for (std::size_t r = 0; r < h.rows(); ++r) {
      auto row = constraints.row(j * h.rows() + r);
      for (std::size_t i = 0; i < g.degree(); ++i) {
        Symbol& slot = row[g.neighbor(j, i)];
        slot = f.add(slot, h(r, i));
      }
    }
  }
  return LinearCode(f, null_space(f, constraints));
}

// --- expansion ---------------------------------------------------------------

namespace {

struct RegularDegrees {
  std::size_t left;
  std::size_t right;
};

RegularDegrees require_biregular(const OrderedGraph& g) {
  const std::vector<std::size_t> deg = g.left_degrees();
  const std::size_t d = deg.front();
  if (!std::all_of(deg.begin(), deg.end(), [d](std::size_t x) { return x == d; })) {
    throw Error(ErrorKind::kInapplicable, "expansion bound needs a left-regular graph");
  }
  return {d, g.degree()};
}

Rational expansion_bound(RegularDegrees d, std::size_t s, std::size_t t) {
  return Rational(BigInt(d.left * s + d.right * t), BigInt(8));
}

// count[j] = #{i : ℓ_{j,i} ∈ S}.
std::vector<std::size_t> right_hits(const OrderedGraph& g, const std::vector<bool>& in_s) {
  std::vector<std::size_t> count(g.right_count(), 0);
  for (std::size_t j = 0; j < g.right_count(); ++j) {
    for (std::size_t i = 0; i < g.degree(); ++i) count[j] += in_s[g.neighbor(j, i)];
  }
  return count;
}

void merge_worst(ExpansionSweep& sweep, const Rational& slack, const std::vector<std::size_t>& s,
                 const std::vector<std::size_t>& t, bool first) {
  if (first || slack < sweep.worst_slack) {
    sweep.worst_slack = slack;
    sweep.worst_s = s;
    sweep.worst_t = t;
  }
}

}  // namespace

ExpansionResult check_expansion(const OrderedGraph& g, std::span<const std::size_t> s,
                                std::span<const std::size_t> t) {
  const RegularDegrees d = require_biregular(g);
  std::vector<bool> in_s(g.left_count(), false);
  std::vector<bool> in_t(g.right_count(), false);
  for (std::size_t u : s) {
    if (u >= g.left_count()) throw Error(ErrorKind::kIndexOutOfRange, "left vertex out of range");
    in_s[u] = true;
  }
  for (std::size_t v : t) {
    if (v >= g.right_count()) throw Error(ErrorKind::kIndexOutOfRange, "right vertex out of range");
    in_t[v] = true;
  }
  const std::size_t s_size = static_cast<std::size_t>(std::count(in_s.begin(), in_s.end(), true));
  const std::size_t t_size = static_cast<std::size_t>(std::count(in_t.begin(), in_t.end(), true));
  if (4 * s_size > g.left_count()) {
    throw Error(ErrorKind::kInapplicable,
                "|S|/|L| = " + std::to_string(s_size) + "/" + std::to_string(g.left_count()) +
                    " exceeds 1/4");
  }
  ExpansionResult r;
  for (std::size_t j = 0; j < g.right_count(); ++j) {
    for (std::size_t i = 0; i < g.degree(); ++i) {
      r.gamma += in_s[g.neighbor(j, i)] != in_t[j];
    }
  }
  r.bound = expansion_bound(d, s_size, t_size);
  r.slack = Rational(BigInt(r.gamma)) - r.bound;
  r.holds = r.slack >= 0;
  return r;
}

namespace {

// All k-subsets of [n] in lexicographic order, flattened.
void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

struct SweepPartial {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  bool has_worst = false;
  Rational worst_slack;
  std::vector<std::size_t> worst_s;
  std::vector<std::size_t> worst_t;
};

void reduce_partials(const std::vector<SweepPartial>& parts, ExpansionSweep& out) {
  bool first = true;
  for (const SweepPartial& p : parts) {
    out.pairs += p.pairs;
    out.violations += p.violations;
    if (!p.has_worst) continue;
    merge_worst(out, p.worst_slack, p.worst_s, p.worst_t, first);
    first = false;
  }
}

}  // namespace

ExpansionSweep expansion_exhaustive(const OrderedGraph& g, kernels::Exec exec) {
  const RegularDegrees d = require_biregular(g);
  const std::size_t left = g.left_count();
  const std::size_t right = g.right_count();
  if (right > 40) {
    throw Error(ErrorKind::kTooLarge,
                "exhaustive expansion over 2^" + std::to_string(right) + " right subsets");
  }
  const std::size_t max_s = left / 4;
  std::vector<std::vector<std::size_t>> subsets;
  std::uint64_t count = 0;
  for (std::size_t k = 0; k <= max_s; ++k) {
    // Binomial count guard before materialising.
    BigInt c = 1;
    for (std::size_t i = 0; i < k; ++i) c = c * (left - i) / (i + 1);
    count += static_cast<std::uint64_t>(c);
    if (BigInt(count) * (BigInt(1) << right) > limits().enumeration_threshold) {
      throw Error(ErrorKind::kTooLarge, "exhaustive expansion pair count exceeds the threshold");
    }
  }
  for (std::size_t k = 0; k <= max_s; ++k) combinations(left, k, subsets);

  const std::uint64_t t_count = std::uint64_t{1} << right;
  std::vector<SweepPartial> parts(subsets.size());
  kernels::for_each_index(subsets.size(), exec, [&](std::size_t si) {
    const std::vector<std::size_t>& s = subsets[si];
    std::vector<bool> in_s(left, false);
    for (std::size_t u : s) in_s[u] = true;
    const std::vector<std::size_t> hits = right_hits(g, in_s);
    SweepPartial& p = parts[si];
    // Over T: gamma = |S| d_L + Σ_{j ∈ T} (t - 2 hits[j]).
    const std::int64_t base = static_cast<std::int64_t>(s.size() * d.left);
    std::int64_t best_scaled = 0;  // 8 * slack
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < t_count; ++mask) {
      std::int64_t gamma = base;
      std::size_t t_size = 0;
      for (std::size_t j = 0; j < right; ++j) {
        if (mask >> j & 1) {
          gamma += static_cast<std::int64_t>(d.right) - 2 * static_cast<std::int64_t>(hits[j]);
          ++t_size;
        }
      }
      const std::int64_t scaled = 8 * gamma - static_cast<std::int64_t>(d.left * s.size()) -
                                  static_cast<std::int64_t>(d.right * t_size);
      ++p.pairs;
      if (scaled < 0) ++p.violations;
      if (mask == 0 || scaled < best_scaled) {
        best_scaled = scaled;
        best_mask = mask;
      }
    }
    p.has_worst = true;
    p.worst_slack = Rational(BigInt(best_scaled), BigInt(8));
    p.worst_s = s;
    for (std::size_t j = 0; j < right; ++j) {
      if (best_mask >> j & 1) p.worst_t.push_back(j);
    }
  });
  ExpansionSweep out;
  reduce_partials(parts, out);
  return out;
}

ExpansionSweep expansion_sampled(const OrderedGraph& g, std::uint64_t samples,
                                 std::uint64_t seed, kernels::Exec exec) {
  require_biregular(g);
  const std::size_t left = g.left_count();
  const std::size_t right = g.right_count();
  const std::size_t max_s = left / 4;
  std::vector<SweepPartial> parts(samples);
  kernels::for_each_index(samples, exec, [&](std::size_t idx) {
    Rng rng(derive_seed(seed, 0x5e1f, idx));
    const std::size_t s_size = uniform_below(rng, max_s + 1);
    std::vector<std::size_t> pool(left);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < s_size; ++i) {  // partial Fisher-Yates
      std::swap(pool[i], pool[i + uniform_below(rng, left - i)]);
    }
    std::vector<std::size_t> s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s_size));
    std::sort(s.begin(), s.end());
    std::vector<std::size_t> t;
    for (std::size_t j = 0; j < right; ++j) {
      if (rng() >> 63) t.push_back(j);
    }
    const ExpansionResult r = check_expansion(g, s, t);
    SweepPartial& p = parts[idx];
    p.pairs = 1;
    p.violations = r.holds ? 0 : 1;
    p.has_worst = true;
    p.worst_slack = r.slack;
    p.worst_s = std::move(s);
    p.worst_t = std::move(t);
  });
  ExpansionSweep out;
  reduce_partials(parts, out);
  return out;
}

}  // namespace ltc
