#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "permob/perm.hpp"

namespace permob {

struct Embedding {
  std::vector<std::size_t> positions;  // 0-based, strictly increasing
  std::size_t pattern_length() const { return positions.size(); }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

namespace detail {

// For each pattern index j, the earlier index whose value is the closest below
// (lo) and closest above (hi) pattern[j]; -1 when none exists.
struct PatternBounds {
  std::vector<long> lo, hi;
  explicit PatternBounds(const Permutation& pat) : lo(pat.size(), -1), hi(pat.size(), -1) {
    for (std::size_t j = 0; j < pat.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (pat[i] < pat[j] && (lo[j] < 0 || pat[i] > pat[static_cast<std::size_t>(lo[j])])) lo[j] = static_cast<long>(i);
        if (pat[i] > pat[j] && (hi[j] < 0 || pat[i] < pat[static_cast<std::size_t>(hi[j])])) hi[j] = static_cast<long>(i);
      }
    }
  }
};

template <typename Visit>
bool embed_search(const Permutation& pat, const Permutation& host, const PatternBounds& b,
                  std::vector<std::size_t>& pos, std::size_t j, std::size_t from, Visit& visit) {
  const std::size_t k = pat.size(), n = host.size();
  if (j == k) return visit(pos);
  const long lo = b.lo[j], hi = b.hi[j];
  const value_t lov = lo < 0 ? 0 : host[pos[static_cast<std::size_t>(lo)]];
  const value_t hiv = hi < 0 ? static_cast<value_t>(n + 1) : host[pos[static_cast<std::size_t>(hi)]];
  for (std::size_t p = from; p + (k - j) <= n; ++p) {
    const value_t h = host[p];
    if (h <= lov || h >= hiv) continue;
    pos[j] = p;
    if (embed_search(pat, host, b, pos, j + 1, p + 1, visit)) return true;
  }
  return false;
}

}  // namespace detail

// Calls visit(positions) for every embedding in lexicographic position order;
// visit returns true to stop early.
template <typename Visit>
void for_each_embedding(const Permutation& pattern, const Permutation& host, Visit visit) {
  if (pattern.size() > host.size()) return;
  detail::PatternBounds b(pattern);
  std::vector<std::size_t> pos(pattern.size());
  detail::embed_search(pattern, host, b, pos, 0, 0, visit);
}

inline bool contains(const Permutation& pattern, const Permutation& host) {
  if (pattern.size() > host.size()) return false;
  if (pattern.empty()) return true;
  if (pattern.size() == host.size()) return pattern == host;
  bool found = false;
  for_each_embedding(pattern, host, [&](const std::vector<std::size_t>&) { return found = true; });
  return found;
}

inline std::vector<Embedding> enumerate_embeddings(const Permutation& pattern, const Permutation& host,
                                                   std::optional<std::size_t> limit = std::nullopt) {
  std::vector<Embedding> out;
  if (limit && *limit == 0) return out;
  for_each_embedding(pattern, host, [&](const std::vector<std::size_t>& pos) {
    out.push_back(Embedding{pos});
    return limit && out.size() >= *limit;
  });
  return out;
}

inline std::size_t count_embeddings(const Permutation& pattern, const Permutation& host) {
  std::size_t c = 0;
  for_each_embedding(pattern, host, [&](const std::vector<std::size_t>&) {
    ++c;
    return false;
  });
  return c;
}

// Is the window host[start, start+len) an interval (contiguous values)?
inline bool is_interval_window(const Permutation& host, std::size_t start, std::size_t len) {
  if (len == 0 || start + len > host.size()) return false;
  value_t lo = host[start], hi = host[start];
  for (std::size_t i = start + 1; i < start + len; ++i) {
    lo = std::min(lo, host[i]);
    hi = std::max(hi, host[i]);
  }
  return hi - lo + 1 == len;
}

inline bool window_matches(const Permutation& phi, const Permutation& host, std::size_t start) {
  if (!is_interval_window(host, start, phi.size())) return false;
  value_t lo = host[start];
  for (std::size_t i = 0; i < phi.size(); ++i) lo = std::min(lo, host[start + i]);
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (host[start + i] - lo + 1 != phi[i]) return false;
  return true;
}

// Start positions of all interval copies of phi in host.
inline std::vector<std::size_t> interval_copies(const Permutation& phi, const Permutation& host) {
  std::vector<std::size_t> out;
  if (phi.empty() || phi.size() > host.size()) return out;
  for (std::size_t s = 0; s + phi.size() <= host.size(); ++s)
    if (window_matches(phi, host, s)) out.push_back(s);
  return out;
}

inline bool contains_interval_copy(const Permutation& phi, const Permutation& host) {
  if (phi.empty()) throw DomainError("interval copy of the empty permutation");
  if (phi.size() > host.size()) return false;
  for (std::size_t s = 0; s + phi.size() <= host.size(); ++s)
    if (window_matches(phi, host, s)) return true;
  return false;
}

}  // namespace permob
