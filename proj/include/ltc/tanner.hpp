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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ltc/code.hpp"
#include "ltc/kernels.hpp"
#include "ltc/rational.hpp"

namespace ltc {

/// (n, m, t)-ordered bipartite graph: n left vertices, m right vertices, each
/// right vertex j with an ordered neighbor list ℓ_j of length t. All indices
/// are 0-based. Small graphs keep their lists in memory; large family
/// instances compute ℓ_{j,i} on demand. Either way the graph is immutable and
/// safe to share across threads.
class OrderedGraph {
 public:
  class Adjacency {
   public:
    virtual ~Adjacency() = default;
    virtual std::size_t neighbor(std::size_t j, std::size_t i) const = 0;
  };

  OrderedGraph(std::size_t n_left, std::size_t m_right, std::size_t t_degree,
               std::shared_ptr<const Adjacency> adjacency, std::string name);

  std::size_t left_count() const noexcept { return n_left_; }
  std::size_t right_count() const noexcept { return m_right_; }
  std::size_t degree() const noexcept { return t_degree_; }
  const std::string& name() const noexcept { return name_; }

  /// ℓ_{j,i}.
  std::size_t neighbor(std::size_t j, std::size_t i) const {
    return adjacency_->neighbor(j, i);
  }
  std::vector<std::size_t> list(std::size_t j) const;

  /// Total adjacency entries m * t (saturating).
  std::uint64_t entry_count() const noexcept;
  bool is_explicit() const noexcept { return explicit_; }

  /// Copy with materialized lists; throws TooLarge above the adjacency budget.
  OrderedGraph materialized() const;

  /// Number of occurrences of each left vertex across all lists.
  std::vector<std::size_t> left_degrees() const;

 private:
  std::size_t n_left_;
  std::size_t m_right_;
  std::size_t t_degree_;
  std::shared_ptr<const Adjacency> adjacency_;
  std::string name_;
  bool explicit_ = false;
};

/// Validates and stores explicit lists. Throws InvalidArgument (no lists),
/// RaggedLists, EntryOutOfRange.
OrderedGraph make_ordered_graph(std::size_t n_left,
                                const std::vector<std::vector<std::size_t>>& lists,
                                std::string name = "explicit");

/// G © G': (N, M*m, d) with ℓ''_{(j,j'),i} = ℓ_{j, ℓ'_{j',i}} and right vertex
/// (j, j') numbered j*m + j'. Throws DegreeMismatch unless G'.n_left = G.t.
OrderedGraph graph_compose(const OrderedGraph& g, const OrderedGraph& g2);

/// G^n_m: left vertices [n]^m row-major, right vertex (b, i) numbered b*n + i,
/// list of (b, i) = the points with coordinate b equal to i, ordered
/// lexicographically by the other coordinates (so views equal axis slices).
OrderedGraph build_product_graph(std::size_t n, std::size_t m);

/// G^n_{m,m'} = G^n_m if m' = m-1, else G^n_m © G^n_{m-1,m'}.
OrderedGraph build_iterated_graph(std::size_t n, std::size_t m, std::size_t m_small);

/// H^n_2 = G^n_{4,2}; H^n_t = G^{n^{2^{t-2}}}_{4,2} © H^n_{t-1}.
OrderedGraph build_square_test_graph(std::size_t n, std::size_t t);

/// Left vertex count n^{2^t} of H^n_t without building it (TooLarge on
/// overflow of the word-length limit).
std::size_t square_test_left_count(std::size_t n, std::size_t t);

/// r|_{ℓ_j}.
std::vector<Symbol> view(const OrderedGraph& g, std::span<const Symbol> w, std::size_t j);

/// TPC(G, C_small).
class TannerCode {
 public:
  /// Throws DegreeMismatch unless small.length() == graph.degree().
  TannerCode(OrderedGraph graph, LinearCode small);

  const OrderedGraph& graph() const noexcept { return graph_; }
  const LinearCode& small() const noexcept { return small_; }

 private:
  OrderedGraph graph_;
  LinearCode small_;
};

bool tpc_membership(const TannerCode& code, const Word& w,
                    kernels::Exec exec = kernels::Exec::kParallel);

/// TPC(G, C_small) as an explicit linear code (null space of all view
/// parity checks). Throws TooLarge when the constraint matrix exceeds the
/// adjacency budget.
LinearCode tpc_as_linear_code(const TannerCode& code);

// --- Edge expansion of bi-regular graphs ----------------------------------

struct ExpansionResult {
  std::uint64_t gamma = 0;  // edges with exactly one endpoint in S ∪ T
  Rational bound;           // (d_L/8)|S| + (d_R/8)|T|
  bool holds = true;
  Rational slack;           // gamma - bound
};

/// |Γ(S ∪ T)| against (d_L/8)|S| + (d_R/8)|T|. S are left vertices, T right
/// vertices (0-based). Throws Inapplicable if |S|/|L| > 1/4 or the graph is
/// not left-regular.
ExpansionResult check_expansion(const OrderedGraph& g, std::span<const std::size_t> s,
                                std::span<const std::size_t> t);

struct ExpansionSweep {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  Rational worst_slack;
  std::vector<std::size_t> worst_s;
  std::vector<std::size_t> worst_t;
};

/// All S with |S| <= |L|/4 and all T ⊆ R. Throws TooLarge when the pair count
/// exceeds the enumeration threshold or |R| > 40.
ExpansionSweep expansion_exhaustive(const OrderedGraph& g,
                                    kernels::Exec exec = kernels::Exec::kParallel);

/// `samples` seeded pairs: |S| uniform in [0, |L|/4], S uniform of that size,
/// T with each right vertex included independently w.p. 1/2.
ExpansionSweep expansion_sampled(const OrderedGraph& g, std::uint64_t samples,
                                 std::uint64_t seed,
                                 kernels::Exec exec = kernels::Exec::kParallel);

}  // namespace ltc
