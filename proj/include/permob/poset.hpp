#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "permob/embed.hpp"
#include "permob/errors.hpp"
#include "permob/perm.hpp"

namespace permob {

struct PosetLimits {
  std::size_t max_top_length = 22;    // downset generation
  std::size_t max_chain_elements = 40;  // chain enumeration
  std::size_t max_zeta_elements = 3000;
};

// Closed interval [bottom, top] of the pattern poset with its Hasse diagram.
class IntervalPoset {
 public:
  Permutation bottom, top;
  std::vector<Permutation> elements;                 // length order, lexicographic within a length
  std::vector<std::vector<std::size_t>> covered_by;  // covered_by[u] = indices w that u covers

  std::size_t size() const { return elements.size(); }
  std::size_t bottom_index() const { return 0; }
  std::size_t top_index() const { return elements.size() - 1; }

  std::size_t index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw DomainError("permutation not in interval: " + to_string(p));
    return it->second;
  }
  bool has(const Permutation& p) const { return index_.count(p) != 0; }

  // Every (u, w) with u covering w.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < covered_by.size(); ++u)
      for (auto w : covered_by[u]) out.emplace_back(u, w);
    return out;
  }

  // leq(a, b): elements[a] <= elements[b], from the transitive closure of covers.
  bool leq(std::size_t a, std::size_t b) const {
    ensure_closure();
    return (closure_[b][a >> 6] >> (a & 63)) & 1u;
  }

  const std::vector<std::uint64_t>& below_set(std::size_t b) const {
    ensure_closure();
    return closure_[b];
  }

  void finalize() {
    index_.clear();
    for (std::size_t i = 0; i < elements.size(); ++i) index_.emplace(elements[i], i);
    closure_.clear();
  }

 private:
  void ensure_closure() const {
    if (!closure_.empty() || elements.empty()) return;
    const std::size_t words = (elements.size() + 63) / 64;
    closure_.assign(elements.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t u = 0; u < elements.size(); ++u) {
      closure_[u][u >> 6] |= std::uint64_t{1} << (u & 63);
      for (auto w : covered_by[u])
        for (std::size_t k = 0; k < words; ++k) closure_[u][k] |= closure_[w][k];
    }
  }

  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  mutable std::vector<std::vector<std::uint64_t>> closure_;
};

namespace detail {

// Levels of the downset of p from |p| down to min_len, each sorted lexicographically.
inline std::vector<std::vector<Permutation>> downset_levels(const Permutation& p, std::size_t min_len) {
  std::vector<std::vector<Permutation>> levels;
  levels.push_back({p});
  for (std::size_t len = p.size(); len > min_len; --len) {
    std::unordered_set<Permutation, PermutationHash> next;
    for (const auto& q : levels.back())
      for (std::size_t i = 0; i < q.size(); ++i) next.insert(q.remove_at(i));
    std::vector<Permutation> lvl(next.begin(), next.end());
    std::sort(lvl.begin(), lvl.end());
    levels.push_back(std::move(lvl));
  }
  return levels;
}

}  // namespace detail

// [bottom, top]; elements are generated by iterated single-point deletion from top.
inline IntervalPoset interval(const Permutation& bottom, const Permutation& top, const PosetLimits& lim = {}) {
  if (top.size() > lim.max_top_length)
    throw GuardError("interval top has length " + std::to_string(top.size()) + " > cap " +
                     std::to_string(lim.max_top_length));
  if (!contains(bottom, top)) throw DomainError("bottom is not contained in top");
  auto levels = detail::downset_levels(top, bottom.size());
  IntervalPoset iv;
  iv.bottom = bottom;
  iv.top = top;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it)
    for (auto& q : *it)
      if (q.size() == bottom.size() ? q == bottom : contains(bottom, q)) iv.elements.push_back(q);
  iv.finalize();
  iv.covered_by.assign(iv.elements.size(), {});
  for (std::size_t u = 0; u < iv.elements.size(); ++u) {
    const auto& q = iv.elements[u];
    if (q.size() == bottom.size()) continue;
    std::vector<std::size_t> ws;
    for (std::size_t i = 0; i < q.size(); ++i) {
      auto r = q.remove_at(i);
      if (iv.has(r)) ws.push_back(iv.index_of(r));
    }
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    iv.covered_by[u] = std::move(ws);
  }
  return iv;
}

inline IntervalPoset downset(const Permutation& p, const PosetLimits& lim = {}) {
  if (p.empty()) throw DomainError("downset needs a nonempty permutation");
  return interval(Permutation{1}, p, lim);
}

struct ChainCounts {
  std::vector<std::uint64_t> by_length;  // K_i = number of chains of length i
  std::int64_t hall_sum() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < by_length.size(); ++i) {
      const auto k = static_cast<std::int64_t>(by_length[i]);
      s = i % 2 == 0 ? checked::add(s, k) : checked::sub(s, k);
    }
    return s;
  }
};

// Visits every chain bottom = c0 < c1 < ... < ck = top as a list of element
// indices; visit returns true to stop. Returns the per-length counts.
inline ChainCounts enumerate_chains(const IntervalPoset& iv,
                                    const std::function<bool(const std::vector<std::size_t>&)>& visit = {},
                                    const PosetLimits& lim = {}) {
  if (iv.size() > lim.max_chain_elements)
    throw GuardError("interval has " + std::to_string(iv.size()) + " elements > chain cap " +
                     std::to_string(lim.max_chain_elements));
  ChainCounts cc;
  cc.by_length.assign(iv.size(), 0);
  const std::size_t top = iv.top_index(), n = iv.size();
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (iv.elements[b].size() > iv.elements[a].size() && iv.leq(a, b)) above[a].push_back(b);
  std::vector<std::size_t> chain{iv.bottom_index()};
  bool stop = false;
  std::function<void(std::size_t)> go = [&](std::size_t c) {
    if (stop) return;
    if (c == top) {
      ++cc.by_length[chain.size() - 1];
      if (visit && visit(chain)) stop = true;
      return;
    }
    for (auto z : above[c]) {
      chain.push_back(z);
      go(z);
      chain.pop_back();
      if (stop) return;
    }
  };
  if (n == 1) {
    cc.by_length[0] = 1;
    if (visit) visit(chain);
  } else {
    go(iv.bottom_index());
  }
  while (cc.by_length.size() > 1 && cc.by_length.back() == 0) cc.by_length.pop_back();
  return cc;
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Z[a][b] = 1 iff elements[a] <= elements[b]; upper triangular in rank order.
inline IntMatrix zeta_matrix(const IntervalPoset& iv, const PosetLimits& lim = {}) {
  if (iv.size() > lim.max_zeta_elements)
    throw GuardError("interval has " + std::to_string(iv.size()) + " elements > zeta cap");
  const std::size_t n = iv.size();
  IntMatrix z(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) z[a][b] = iv.leq(a, b) ? 1 : 0;
  return z;
}

// Exact inverse of a unit upper-triangular integer matrix, solving Z * M = I
// row by row from the bottom.
inline IntMatrix invert_zeta(const IntMatrix& z) {
  const std::size_t n = z.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (z[a].size() != n || z[a][a] != 1) throw DomainError("zeta matrix must be square with unit diagonal");
    for (std::size_t b = 0; b < a; ++b)
      if (z[a][b] != 0) throw DomainError("zeta matrix must be upper triangular");
  }
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = n; a-- > 0;) {
    for (std::size_t b = a; b < n; ++b) {
      std::int64_t s = a == b ? 1 : 0;
      for (std::size_t c = a + 1; c <= b; ++c)
        if (z[a][c] != 0 && m[c][b] != 0) s = checked::sub(s, checked::mul(z[a][c], m[c][b]));
      m[a][b] = s;
    }
  }
  return m;
}

// Hasse diagram in DOT format, edges drawn from covered element to coverer.
inline void write_dot(std::ostream& os, const IntervalPoset& iv) {
  os << "digraph interval {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t u = 0; u < iv.size(); ++u) os << "  n" << u << " [label=\"" << to_string(iv.elements[u]) << "\"];\n";
  for (std::size_t u = 0; u < iv.size(); ++u)
    for (auto w : iv.covered_by[u]) os << "  n" << w << " -> n" << u << ";\n";
  os << "}\n";
}

}  // namespace permob
