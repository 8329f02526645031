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


// Naive reference computations used as test oracles. Everything here works
// on plain integers mod q and avoids the library's kernels.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Vec = std::vector<std::uint32_t>;
using Rows = std::vector<Vec>;
using Rat = boost::multiprecision::cpp_rational;

/// All q^k messages in lexicographic order (first coordinate slowest).
inline std::vector<Vec> all_vectors(std::uint32_t q, std::size_t k) {
  std::vector<Vec> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= q;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Vec v(k);
    std::size_t x = idx;
    for (std::size_t i = k; i-- > 0;) {
      v[i] = static_cast<std::uint32_t>(x % q);
      x /= q;
    }
    out.push_back(v);
  }
  return out;
}

inline Vec combine(std::uint32_t q, const Rows& g, const Vec& msg) {
  Vec w(g.empty() ? 0 : g[0].size(), 0);
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < w.size(); ++c) {
      w[c] = static_cast<std::uint32_t>((w[c] + std::uint64_t{msg[r]} * g[r][c]) % q);
    }
  }
  return w;
}

inline std::vector<Vec> codewords(std::uint32_t q, const Rows& g) {
  std::vector<Vec> out;
  for (const Vec& m : all_vectors(q, g.size())) out.push_back(combine(q, g, m));
  return out;
}

inline std::size_t weight(const Vec& v) {
  std::size_t w = 0;
  for (auto s : v) w += s != 0;
  return w;
}

inline std::size_t hamming(const Vec& a, const Vec& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline std::size_t min_distance(std::uint32_t q, const Rows& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Vec& c : codewords(q, g)) {
    const std::size_t w = weight(c);
    if (w > 0 && w < best) best = w;
  }
  return best;
}

inline std::size_t distance_to(const std::vector<Vec>& words, const Vec& w) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Vec& c : words) {
    const std::size_t d = hamming(c, w);
    if (d < best) best = d;
  }
  return best;
}

inline Rat relative_distance(const std::vector<Vec>& words, const Vec& w) {
  return Rat(distance_to(words, w)) / Rat(w.size());
}

/// Vandermonde RS rows: row i is (p^i mod q : p = 0..n-1).
inline Rows reed_solomon(std::uint32_t q, std::size_t n, std::size_t k) {
  Rows g(k, Vec(n));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      std::uint64_t v = 1;
      for (std::size_t e = 0; e < i; ++e) v = v * p % q;
      g[i][p] = static_cast<std::uint32_t>(v);
    }
  }
  return g;
}

/// Kronecker product of generator matrices.
inline Rows kron(std::uint32_t q, const Rows& a, const Rows& b) {
  Rows out;
  for (const Vec& ra : a) {
    for (const Vec& rb : b) {
      Vec r;
      for (auto x : ra) {
        for (auto y : rb) r.push_back(static_cast<std::uint32_t>(std::uint64_t{x} * y % q));
      }
      out.push_back(r);
    }
  }
  return out;
}

inline Rows kron_power(std::uint32_t q, const Rows& a, std::size_t m) {
  Rows out = a;
  for (std::size_t i = 1; i < m; ++i) out = kron(q, out, a);
  return out;
}

/// Lists of G^n_m straight from the definition: right vertex (b, i) lists the
/// points x of [n]^m with x_b = i, in row-major order of x.
inline std::vector<std::vector<std::size_t>> product_lists(std::size_t n, std::size_t m) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;
  std::vector<std::vector<std::size_t>> lists(m * n);
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t rest = x;
    std::vector<std::size_t> digits(m);
    for (std::size_t b = m; b-- > 0;) {
      digits[b] = rest % n;
      rest /= n;
    }
    for (std::size_t b = 0; b < m; ++b) lists[b * n + digits[b]].push_back(x);
  }
  return lists;
}

inline std::vector<std::vector<std::size_t>> compose_lists(
    const std::vector<std::vector<std::size_t>>& g1,
    const std::vector<std::vector<std::size_t>>& g2) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& l1 : g1) {
    for (const auto& l2 : g2) {
      std::vector<std::size_t> l;
      for (std::size_t i : l2) l.push_back(l1[i]);
      out.push_back(l);
    }
  }
  return out;
}

inline Vec restrict(const Vec& w, const std::vector<std::size_t>& list) {
  Vec v;
  for (std::size_t i : list) v.push_back(w[i]);
  return v;
}

/// ρ(w) = E_j δ_small(w|ℓ_j) by definition.
inline Rat robustness(const std::vector<std::vector<std::size_t>>& lists,
                      const std::vector<Vec>& small_words, const Vec& w) {
  Rat sum = 0;
  for (const auto& l : lists) sum += relative_distance(small_words, restrict(w, l));
  return sum / Rat(lists.size());
}

/// Membership in TPC(G, C): every view in the small code.
inline bool tpc_member(const std::vector<std::vector<std::size_t>>& lists,
                       const std::vector<Vec>& small_words, const Vec& w) {
  for (const auto& l : lists) {
    if (distance_to(small_words, restrict(w, l)) != 0) return false;
  }
  return true;
}

}  // namespace oracle
