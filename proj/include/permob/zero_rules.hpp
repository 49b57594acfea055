#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permob/embed.hpp"
#include "permob/errors.hpp"
#include "permob/perm.hpp"
#include "permob/structure.hpp"

namespace permob {

enum class ZeroRule {
  long_corner,
  triple_adjacency,
  monotone_interval,
  opposing_adjacencies,
  sum_plus_one_annihilator,
  named_annihilator,
  annihilator_pair,
  sigma_annihilator,
  boolean_inflation_excluded,  // reserved: the Boolean lemma is a nonvanishing condition, never a zero
  symmetry_1243_interval,
};

inline const char* rule_name(ZeroRule r) {
  switch (r) {
    case ZeroRule::long_corner: return "long_corner";
    case ZeroRule::triple_adjacency: return "triple_adjacency";
    case ZeroRule::monotone_interval: return "monotone_interval";
    case ZeroRule::opposing_adjacencies: return "opposing_adjacencies";
    case ZeroRule::sum_plus_one_annihilator: return "sum_plus_one_annihilator";
    case ZeroRule::named_annihilator: return "named_annihilator";
    case ZeroRule::annihilator_pair: return "annihilator_pair";
    case ZeroRule::sigma_annihilator: return "sigma_annihilator";
    case ZeroRule::boolean_inflation_excluded: return "boolean_inflation_excluded";
    case ZeroRule::symmetry_1243_interval: return "symmetry_1243_interval";
  }
  return "unknown";
}

struct Window {
  std::size_t start = 0, len = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

// windows are 0-based position ranges of p; patterns are the permutations the
// rule matched (for sum-plus-one rules: the window pattern, then alpha, beta).
struct ZeroCertificate {
  ZeroRule rule{};
  std::vector<Window> windows;
  std::vector<Permutation> patterns;
  std::vector<std::size_t> positions;
  SumKind kind = SumKind::direct;

  std::string name() const { return rule_name(rule); }
};

struct ZeroLimits {
  // Cubic window scans are skipped above this length; absence of a certificate
  // never claims anything, so skipping is always safe.
  std::size_t max_window_scan = 256;
};

namespace detail {

inline Permutation window_pattern(const Permutation& p, std::size_t start, std::size_t len) {
  std::vector<std::size_t> pos(len);
  for (std::size_t x = 0; x < len; ++x) pos[x] = start + x;
  return subpattern(p, pos);
}

// Index q inside the interval window [s, s+len) such that everything left of q
// is below p[q] and everything right is above (direct) or the mirror (skew),
// with q strictly inside the window.
inline std::optional<std::size_t> window_separator(const Permutation& p, std::size_t s, std::size_t len,
                                                   SumKind kind) {
  if (len < 3) return std::nullopt;
  const bool direct = kind == SumKind::direct;
  std::vector<value_t> suffix(len);
  suffix[len - 1] = p[s + len - 1];
  for (std::size_t x = len - 1; x-- > 0;)
    suffix[x] = direct ? std::min(suffix[x + 1], p[s + x]) : std::max(suffix[x + 1], p[s + x]);
  value_t prefix = p[s];
  for (std::size_t x = 1; x + 1 < len; ++x) {
    const value_t v = p[s + x];
    if (direct ? (prefix < v && v < suffix[x + 1]) : (prefix > v && v > suffix[x + 1])) return s + x;
    prefix = direct ? std::max(prefix, v) : std::min(prefix, v);
  }
  return std::nullopt;
}

// Calls visit(start, len) for every interval window of length >= min_len,
// including p itself; visit returns true to stop.
template <class F>
bool for_each_interval_window(const Permutation& p, std::size_t min_len, F&& visit) {
  const std::size_t n = p.size();
  for (std::size_t s = 0; s < n; ++s) {
    value_t lo = p[s], hi = p[s];
    for (std::size_t e = s + 1; e < n; ++e) {
      lo = std::min(lo, p[e]);
      hi = std::max(hi, p[e]);
      const std::size_t len = e - s + 1;
      if (len >= min_len && hi - lo + 1 == len && visit(s, len)) return true;
    }
  }
  return false;
}

inline std::vector<Permutation> orbit_unique(const Permutation& p) {
  auto imgs = symmetries(p);
  std::set<Permutation> s(imgs.begin(), imgs.end());
  return {s.begin(), s.end()};
}

inline const std::vector<Permutation>& named_annihilators() {
  static const std::vector<Permutation> all = [] {
    std::set<Permutation> s;
    for (auto base : {Permutation{2, 1, 5, 4, 6, 3}, Permutation{2, 3, 6, 1, 4, 5}, Permutation{2, 1, 4, 6, 5, 3}})
      for (auto& q : symmetries(base)) s.insert(q);
    return std::vector<Permutation>(s.begin(), s.end());
  }();
  return all;
}

inline const std::vector<std::pair<Permutation, Permutation>>& annihilator_pairs() {
  static const std::vector<std::pair<Permutation, Permutation>> pairs = {
      {Permutation{2, 1, 3}, Permutation{2, 4, 3, 1}},
      {Permutation{2, 1, 4, 3}, Permutation{2, 4, 3, 1}},
      {Permutation{3, 1, 2}, Permutation{2, 3, 5, 1, 4}},
      {Permutation{2, 5, 1, 3, 4}, Permutation{2, 3, 5, 1, 4}},
  };
  return pairs;
}

inline std::optional<ZeroCertificate> find_sum_plus_one(const Permutation& p) {
  std::optional<ZeroCertificate> out;
  for (auto kind : {SumKind::direct, SumKind::skew}) {
    for_each_interval_window(p, 3, [&](std::size_t s, std::size_t len) {
      auto q = window_separator(p, s, len, kind);
      if (!q) return false;
      ZeroCertificate c;
      c.rule = ZeroRule::sum_plus_one_annihilator;
      c.kind = kind;
      c.windows = {{s, len}};
      c.positions = {*q};
      c.patterns = {window_pattern(p, s, len), window_pattern(p, s, *q - s),
                    window_pattern(p, *q + 1, s + len - *q - 1)};
      out = std::move(c);
      return true;
    });
    if (out) return out;
  }
  return out;
}

inline std::optional<ZeroCertificate> find_named(const Permutation& p) {
  for (const auto& a : named_annihilators()) {
    auto w = interval_copies(a, p);
    if (!w.empty()) {
      ZeroCertificate c;
      c.rule = ZeroRule::named_annihilator;
      c.windows = {{w.front(), a.size()}};
      c.patterns = {a};
      return c;
    }
  }
  return std::nullopt;
}

inline std::optional<ZeroCertificate> find_pair(const Permutation& p) {
  for (const auto& [phi, psi] : annihilator_pairs()) {
    for (int s = 0; s < 8; ++s) {
      auto a = apply_symmetry(phi, s), b = apply_symmetry(psi, s);
      auto wa = interval_copies(a, p);
      if (wa.empty()) continue;
      auto wb = interval_copies(b, p);
      for (auto x : wa)
        for (auto y : wb)
          if (x + a.size() <= y || y + b.size() <= x) {
            ZeroCertificate c;
            c.rule = ZeroRule::annihilator_pair;
            c.windows = {{x, a.size()}, {y, b.size()}};
            c.patterns = {a, b};
            return c;
          }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Certificate that mu[1, p] = 0, or nothing. Nothing does not mean nonzero.
inline std::optional<ZeroCertificate> zero_test(const Permutation& p, const ZeroLimits& lim = {}) {
  if (p.empty()) throw DomainError("zero test needs |p| >= 1");
  const std::size_t n = p.size();
  if (detect_long_corner(p)) {
    ZeroCertificate c;
    c.rule = ZeroRule::long_corner;
    if ((p[0] == 1 && p[1] == 2) || (p[0] == n && p[1] == n - 1))
      c.positions = {0, 1};
    else
      c.positions = {n - 2, n - 1};
    return c;
  }
  auto adj = adjacency_report(p);
  if (adj.has_triple) {
    // Locate the longest monotone run of consecutive values.
    std::size_t best_s = 0, best_len = 1;
    for (std::size_t s = 0; s < n;) {
      std::size_t e = s;
      const int dir = s + 1 < n ? static_cast<int>(p[s + 1]) - static_cast<int>(p[s]) : 0;
      if (dir == 1 || dir == -1)
        while (e + 1 < n && static_cast<int>(p[e + 1]) - static_cast<int>(p[e]) == dir) ++e;
      if (e - s + 1 > best_len) best_s = s, best_len = e - s + 1;
      s = e > s ? e : s + 1;
    }
    ZeroCertificate c;
    c.rule = best_len >= 4 ? ZeroRule::monotone_interval : ZeroRule::triple_adjacency;
    c.windows = {{best_s, best_len}};
    return c;
  }
  if (adj.has_opposing()) {
    ZeroCertificate c;
    c.rule = ZeroRule::opposing_adjacencies;
    c.positions = {adj.up_positions.front(), adj.down_positions.front()};
    return c;
  }
  if (n > lim.max_window_scan) return std::nullopt;
  if (auto c = detail::find_sum_plus_one(p)) return c;
  if (auto c = detail::find_named(p)) return c;
  if (auto c = detail::find_pair(p)) return c;
  return std::nullopt;
}

namespace detail {

// True iff sigma has an interval window whose pattern splits, at some sum cut
// of the given kind, into a left part <= a and a right part <= b.
inline bool has_split_interval_below(const Permutation& sigma, const Permutation& a, const Permutation& b,
                                     SumKind kind) {
  return for_each_interval_window(sigma, 2, [&](std::size_t s, std::size_t len) {
    auto w = window_pattern(sigma, s, len);
    for (auto cut : decomposition_cuts(w, kind)) {
      std::vector<std::size_t> left(cut), right(len - cut);
      for (std::size_t x = 0; x < cut; ++x) left[x] = x;
      for (std::size_t x = cut; x < len; ++x) right[x - cut] = x;
      if (contains(subpattern(w, left), a) && contains(subpattern(w, right), b)) return true;
    }
    return false;
  });
}

}  // namespace detail

// Certificate that mu[sigma, p] = 0 from rules valid for an arbitrary lower bound.
inline std::optional<ZeroCertificate> sigma_zero_test(const Permutation& sigma, const Permutation& p,
                                                      const ZeroLimits& lim = {}) {
  if (p.size() > lim.max_window_scan) return std::nullopt;
  std::optional<ZeroCertificate> out;
  for (auto kind : {SumKind::direct, SumKind::skew}) {
    detail::for_each_interval_window(p, 3, [&](std::size_t s, std::size_t len) {
      // Every separator of the window gives a candidate alpha (+) 1 (+) beta.
      const bool direct = kind == SumKind::direct;
      for (std::size_t q = s + 1; q + 1 < s + len; ++q) {
        bool ok = true;
        for (std::size_t x = s; x < s + len && ok; ++x)
          if (x != q) ok = (x < q) == (direct ? p[x] < p[q] : p[x] > p[q]);
        if (!ok) continue;
        auto alpha = detail::window_pattern(p, s, q - s);
        auto beta = detail::window_pattern(p, q + 1, s + len - q - 1);
        if (detail::has_split_interval_below(sigma, alpha, beta, kind)) continue;
        ZeroCertificate c;
        c.rule = ZeroRule::sigma_annihilator;
        c.kind = kind;
        c.windows = {{s, len}};
        c.positions = {q};
        c.patterns = {detail::window_pattern(p, s, len), alpha, beta};
        out = std::move(c);
        return true;
      }
      return false;
    });
    if (out) return out;
  }
  if (!sigma.empty() && adjacency_report(sigma).adjacency_free()) {
    for (auto phi : {Permutation{1, 2, 4, 3}, Permutation{2, 1, 3, 4}, Permutation{3, 4, 2, 1}, Permutation{4, 3, 1, 2}}) {
      auto w = interval_copies(phi, p);
      if (!w.empty()) {
        ZeroCertificate c;
        c.rule = ZeroRule::symmetry_1243_interval;
        c.windows = {{w.front(), 4}};
        c.patterns = {phi};
        return c;
      }
    }
  }
  return std::nullopt;
}

// Re-derives a certificate's claim from the detectors.
inline bool verify_certificate(const ZeroCertificate& c, const Permutation& p,
                               const Permutation& sigma = Permutation{1}) {
  auto window_is = [&](const Window& w, const Permutation& phi) {
    return w.start + w.len <= p.size() && w.len == phi.size() && is_interval_window(p, w.start, w.len) &&
           window_matches(phi, p, w.start);
  };
  switch (c.rule) {
    case ZeroRule::long_corner: return detect_long_corner(p);
    case ZeroRule::triple_adjacency:
    case ZeroRule::monotone_interval: {
      if (c.windows.size() != 1 || c.windows[0].len < 3) return false;
      const auto& w = c.windows[0];
      return window_is(w, Permutation::identity(w.len)) || window_is(w, Permutation::decreasing(w.len));
    }
    case ZeroRule::opposing_adjacencies: return adjacency_report(p).has_opposing();
    case ZeroRule::sum_plus_one_annihilator:
    case ZeroRule::sigma_annihilator: {
      if (c.windows.size() != 1 || c.patterns.size() != 3 || c.positions.size() != 1) return false;
      const auto& w = c.windows[0];
      const auto& alpha = c.patterns[1];
      const auto& beta = c.patterns[2];
      if (alpha.empty() || beta.empty()) return false;
      auto expect = sum(sum(alpha, Permutation{1}, c.kind), beta, c.kind);
      if (!window_is(w, expect) || c.positions[0] != w.start + alpha.size()) return false;
      if (c.rule == ZeroRule::sum_plus_one_annihilator) return true;
      return !detail::has_split_interval_below(sigma, alpha, beta, c.kind);
    }
    case ZeroRule::named_annihilator: {
      if (c.windows.size() != 1 || c.patterns.size() != 1) return false;
      const auto& a = detail::named_annihilators();
      return std::find(a.begin(), a.end(), c.patterns[0]) != a.end() && window_is(c.windows[0], c.patterns[0]);
    }
    case ZeroRule::annihilator_pair: {
      if (c.windows.size() != 2 || c.patterns.size() != 2) return false;
      bool listed = false;
      for (const auto& [phi, psi] : detail::annihilator_pairs())
        for (int s = 0; s < 8; ++s)
          listed |= apply_symmetry(phi, s) == c.patterns[0] && apply_symmetry(psi, s) == c.patterns[1];
      const auto &u = c.windows[0], &v = c.windows[1];
      const bool disjoint = u.start + u.len <= v.start || v.start + v.len <= u.start;
      return listed && disjoint && window_is(u, c.patterns[0]) && window_is(v, c.patterns[1]);
    }
    case ZeroRule::symmetry_1243_interval:
      return c.windows.size() == 1 && c.patterns.size() == 1 && adjacency_report(sigma).adjacency_free() &&
             canonical(c.patterns[0]) == Permutation{1, 2, 4, 3} && window_is(c.windows[0], c.patterns[0]);
    case ZeroRule::boolean_inflation_excluded: return false;
  }
  return false;
}

// ---- Boolean inflations ------------------------------------------------------

// Parts if p = inflate(sigma, parts) with every part in {1, 12, 21} and sigma
// adjacency-free; the parts are then determined by the adjacencies of p.
inline std::optional<std::vector<Permutation>> boolean_inflation_parts(const Permutation& sigma, const Permutation& p) {
  if (sigma.empty() || p.size() < sigma.size() || !adjacency_report(sigma).adjacency_free()) return std::nullopt;
  auto adj = adjacency_report(p);
  if (adj.has_triple) return std::nullopt;
  std::vector<int> kind(p.size(), 0);  // 1 = start of 12, -1 = start of 21, 2 = second point
  for (auto i : adj.up_positions) kind[i] = 1;
  for (auto i : adj.down_positions) kind[i] = -1;
  std::vector<std::size_t> keep;
  std::vector<Permutation> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    keep.push_back(i);
    if (kind[i] == 1) parts.push_back(Permutation{1, 2}), ++i;
    else if (kind[i] == -1) parts.push_back(Permutation{2, 1}), ++i;
    else parts.push_back(Permutation{1});
  }
  if (keep.size() != sigma.size() || subpattern(p, keep) != sigma) return std::nullopt;
  return parts;
}

inline std::int64_t boolean_inflation_mobius(const Permutation& sigma, const std::vector<Permutation>& parts) {
  if (!adjacency_report(sigma).adjacency_free()) throw DomainError("Boolean inflation needs sigma adjacency-free");
  if (parts.size() != sigma.size()) throw DomainError("one part per point of sigma required");
  std::size_t k = 0;
  for (const auto& a : parts) {
    if (a == Permutation{1}) continue;
    if (a != Permutation{1, 2} && a != Permutation{2, 1}) throw DomainError("parts must be 1, 12 or 21");
    ++k;
  }
  if (k == 0) throw DomainError("at least one part must differ from 1");
  return k % 2 == 0 ? 1 : -1;
}

}  // namespace permob
