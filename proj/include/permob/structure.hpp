#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "permob/embed.hpp"
#include "permob/perm.hpp"

namespace permob {

enum class SumKind { direct, skew };

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<value_t> v(a.begin(), a.end());
  const auto m = static_cast<value_t>(a.size());
  for (auto x : b) v.push_back(x + m);
  return Permutation::trusted(std::move(v));
}

inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<value_t> v;
  v.reserve(a.size() + b.size());
  const auto m = static_cast<value_t>(b.size());
  for (auto x : a) v.push_back(x + m);
  for (auto x : b) v.push_back(x);
  return Permutation::trusted(std::move(v));
}

inline Permutation sum(const Permutation& a, const Permutation& b, SumKind kind) {
  return kind == SumKind::direct ? direct_sum(a, b) : skew_sum(a, b);
}

// a ⧉ b: the direct sum with the largest value of the a-block exchanged with the smallest of the b-block.
inline Permutation interleave(const Permutation& a, const Permutation& b) {
  if (a.empty() || b.empty()) throw DomainError("interleave needs nonempty operands");
  std::vector<value_t> v = direct_sum(a, b).values();
  const auto top = static_cast<value_t>(a.size());
  for (auto& x : v) {
    if (x == top) x = top + 1;
    else if (x == top + 1) x = top;
  }
  return Permutation::trusted(std::move(v));
}

// a ⊘ b: the skew sum with the smallest value of the a-block exchanged with the largest of the b-block.
inline Permutation skew_interleave(const Permutation& a, const Permutation& b) {
  if (a.empty() || b.empty()) throw DomainError("skew interleave needs nonempty operands");
  std::vector<value_t> v = skew_sum(a, b).values();
  const auto edge = static_cast<value_t>(b.size());
  for (auto& x : v) {
    if (x == edge) x = edge + 1;
    else if (x == edge + 1) x = edge;
  }
  return Permutation::trusted(std::move(v));
}

inline Permutation sum_power(const Permutation& a, std::size_t r, SumKind kind = SumKind::direct) {
  Permutation out;
  for (std::size_t i = 0; i < r; ++i) out = sum(out, a, kind);
  return out;
}

struct SumDecomposition {
  std::vector<Permutation> parts;
  SumKind kind = SumKind::direct;

  Permutation recompose() const {
    Permutation out;
    for (const auto& p : parts) out = sum(out, p, kind);
    return out;
  }
};

// Lengths of the blocks of the finest decomposition.
inline std::vector<std::size_t> decomposition_cuts(const Permutation& p, SumKind kind) {
  std::vector<std::size_t> cuts;
  const std::size_t n = p.size();
  value_t ext = kind == SumKind::direct ? 0 : static_cast<value_t>(n + 1);
  std::size_t last = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ext = kind == SumKind::direct ? std::max(ext, p[i]) : std::min(ext, p[i]);
    const bool closed = kind == SumKind::direct ? ext == i + 1 : ext == n - i;
    if (closed) {
      cuts.push_back(i + 1 - last);
      last = i + 1;
    }
  }
  return cuts;
}

inline SumDecomposition finest_decomposition(const Permutation& p, SumKind kind) {
  if (p.empty()) throw DomainError("finest decomposition of the empty permutation");
  SumDecomposition d;
  d.kind = kind;
  std::size_t start = 0;
  for (auto len : decomposition_cuts(p, kind)) {
    std::vector<value_t> seg(p.begin() + static_cast<long>(start), p.begin() + static_cast<long>(start + len));
    d.parts.push_back(standardize(seg));
    start += len;
  }
  return d;
}

inline bool is_sum_decomposable(const Permutation& p) {
  return p.size() > 1 && decomposition_cuts(p, SumKind::direct).size() > 1;
}

inline bool is_skew_decomposable(const Permutation& p) {
  return p.size() > 1 && decomposition_cuts(p, SumKind::skew).size() > 1;
}

struct AdjacencyReport {
  std::vector<std::size_t> up_positions;    // 0-based i with (i, i+1) order-isomorphic to 12
  std::vector<std::size_t> down_positions;  // likewise for 21
  bool has_triple = false;
  std::size_t longest_monotone_interval = 0;

  bool has_opposing() const { return !up_positions.empty() && !down_positions.empty(); }
  bool adjacency_free() const { return up_positions.empty() && down_positions.empty(); }
  std::size_t adjacency_count() const { return up_positions.size() + down_positions.size(); }
};

inline AdjacencyReport adjacency_report(const Permutation& p) {
  AdjacencyReport r;
  r.longest_monotone_interval = p.empty() ? 0 : 1;
  std::size_t run = 1;
  int dir = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    int d = 0;
    if (p[i + 1] == p[i] + 1) {
      d = 1;
      r.up_positions.push_back(i);
    } else if (p[i] == p[i + 1] + 1) {
      d = -1;
      r.down_positions.push_back(i);
    }
    if (d != 0 && d == dir) ++run;
    else run = d != 0 ? 2 : 1;
    dir = d;
    r.longest_monotone_interval = std::max(r.longest_monotone_interval, run);
  }
  r.has_triple = r.longest_monotone_interval >= 3;
  return r;
}

// All (start, length) intervals with 1 < length < |p|; start is 0-based.
inline std::vector<std::pair<std::size_t, std::size_t>> find_proper_intervals(const Permutation& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = p.size();
  for (std::size_t s = 0; s < n; ++s) {
    value_t lo = p[s], hi = p[s];
    for (std::size_t e = s + 1; e < n; ++e) {
      lo = std::min(lo, p[e]);
      hi = std::max(hi, p[e]);
      const std::size_t len = e - s + 1;
      if (len >= n) break;
      if (hi - lo + 1 == len) out.emplace_back(s, len);
    }
  }
  return out;
}

// Lengths 0..2 count as simple.
inline bool is_simple(const Permutation& p) {
  const std::size_t n = p.size();
  for (std::size_t s = 0; s < n; ++s) {
    value_t lo = p[s], hi = p[s];
    for (std::size_t e = s + 1; e < n; ++e) {
      lo = std::min(lo, p[e]);
      hi = std::max(hi, p[e]);
      const std::size_t len = e - s + 1;
      if (len >= n) break;
      if (hi - lo + 1 == len) return false;
    }
  }
  return true;
}

// Replaces each skeleton point by an interval copy of its part; an empty part deletes the point.
inline Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& parts) {
  if (parts.size() != skeleton.size()) throw DomainError("inflation needs one part per skeleton point");
  std::size_t total = 0;
  for (const auto& a : parts) total += a.size();
  if (total == 0) throw DomainError("inflation with every part empty");
  const std::size_t n = skeleton.size();
  std::vector<std::size_t> at_value(n + 1);
  for (std::size_t i = 0; i < n; ++i) at_value[skeleton[i]] = i;
  std::vector<value_t> base(n);
  value_t acc = 0;
  for (std::size_t v = 1; v <= n; ++v) {
    base[at_value[v]] = acc;
    acc += static_cast<value_t>(parts[at_value[v]].size());
  }
  std::vector<value_t> out;
  out.reserve(total);
  for (std::size_t i = 0; i < n; ++i)
    for (auto x : parts[i]) out.push_back(x + base[i]);
  return Permutation::trusted(std::move(out));
}

// Matches 1⊕1⊕τ, 1⊖1⊖τ, τ⊕1⊕1 or τ⊖1⊖1 with τ nonempty.
inline bool detect_long_corner(const Permutation& p) {
  const std::size_t n = p.size();
  if (n < 3) return false;
  const auto N = static_cast<value_t>(n);
  return (p[0] == 1 && p[1] == 2) || (p[0] == N && p[1] == N - 1) ||
         (p[n - 1] == N && p[n - 2] == N - 1) || (p[n - 1] == 1 && p[n - 2] == 2);
}

}  // namespace permob
