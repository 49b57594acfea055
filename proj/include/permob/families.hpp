#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permob/perm.hpp"
#include "permob/structure.hpp"

namespace permob {

// ---- increasing oscillations ------------------------------------------------
//
// The infinite increasing oscillation is a path v0 - v1 - v2 - ... in its
// inversion graph. Any run of k consecutive path vertices starting at an even
// index induces W_k, and one starting at an odd index induces M_k.

enum class OscShape { W, M };

struct OscillationDescriptor {
  OscShape shape = OscShape::W;
  std::size_t n = 1;

  int parity() const { return shape == OscShape::W ? 0 : 1; }
  friend bool operator==(const OscillationDescriptor&, const OscillationDescriptor&) = default;
};

namespace detail {

// Value of path vertex t in the sequence 3,1,5,2,7,4,9,6,...
inline std::size_t osc_value(std::size_t t) { return t == 0 ? 1 : (t % 2 == 1 ? t + 2 : t); }

// Position (1-based) of a value in that sequence.
inline std::size_t osc_position(std::size_t v) {
  if (v == 1) return 2;
  if (v == 3) return 1;
  return v % 2 == 1 ? v - 2 : v + 2;
}

}  // namespace detail

// Pattern induced by path vertices start .. start+len-1.
inline Permutation oscillation_run(std::size_t start, std::size_t len) {
  std::vector<std::pair<std::size_t, std::size_t>> pts;  // (position, value)
  pts.reserve(len);
  for (std::size_t t = start; t < start + len; ++t) {
    const auto v = detail::osc_value(t);
    pts.emplace_back(detail::osc_position(v), v);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<std::size_t> vals;
  vals.reserve(len);
  for (auto& pt : pts) vals.push_back(pt.second);
  return standardize(vals);
}

inline Permutation increasing_oscillation(const OscillationDescriptor& d) {
  if (d.n == 0) throw DomainError("increasing oscillation needs n >= 1");
  return oscillation_run(static_cast<std::size_t>(d.parity()), d.n);
}

inline Permutation w_osc(std::size_t n) { return increasing_oscillation({OscShape::W, n}); }
inline Permutation m_osc(std::size_t n) { return increasing_oscillation({OscShape::M, n}); }

// Recognizes 1, 21, W_k and M_k. For k <= 2 the shape is reported as W.
inline std::optional<OscillationDescriptor> recognize_oscillation(const Permutation& p) {
  const std::size_t n = p.size();
  if (n == 0) return std::nullopt;
  if (n <= 2) {
    if (p == Permutation{1} || p == Permutation{2, 1}) return OscillationDescriptor{OscShape::W, n};
    return std::nullopt;
  }
  if (p[0] == 3 || p[0] == 2) {  // W_n starts with 3, M_n with 2
    for (auto s : {OscShape::W, OscShape::M}) {
      OscillationDescriptor d{s, n};
      if (increasing_oscillation(d) == p) return d;
    }
  }
  return std::nullopt;
}

// Left-to-right interleave of r copies of 21.
inline Permutation interleave_tower(std::size_t r) {
  if (r == 0) throw DomainError("tower needs at least one 21");
  Permutation t{2, 1};
  for (std::size_t i = 1; i < r; ++i) t = interleave(t, Permutation{2, 1});
  return t;
}

// ---- balloons ---------------------------------------------------------------

struct BalloonSpec {
  Permutation alpha;
  Permutation beta;
  std::size_t i = 0;  // column
  std::size_t j = 0;  // row
};

struct WedgeSpec {
  Permutation alpha;
  Permutation beta;
  std::size_t k = 0;

  BalloonSpec as_balloon() const { return BalloonSpec{alpha, beta, k, alpha.size()}; }
};

inline Permutation balloon(const BalloonSpec& s) {
  const std::size_t a = s.alpha.size(), b = s.beta.size();
  if (s.i > a || s.j > a) throw DomainError("balloon indices out of range");
  const auto J = static_cast<value_t>(s.j), B = static_cast<value_t>(b);
  std::vector<value_t> out;
  out.reserve(a + b);
  auto lift = [&](value_t x) { return x <= J ? x : x + B; };
  for (std::size_t x = 0; x < s.i; ++x) out.push_back(lift(s.alpha[x]));
  for (std::size_t x = 0; x < b; ++x) out.push_back(s.beta[x] + J);
  for (std::size_t x = s.i; x < a; ++x) out.push_back(lift(s.alpha[x]));
  return Permutation::trusted(std::move(out));
}

inline Permutation balloon_2413(const Permutation& beta) {
  if (beta.empty()) throw DomainError("2413-balloon needs a nonempty beta");
  return balloon(BalloonSpec{Permutation{2, 4, 1, 3}, beta, 2, 2});
}

inline Permutation wedge(const WedgeSpec& s) {
  if (s.k > s.alpha.size()) throw DomainError("wedge split index out of range");
  return balloon(s.as_balloon());
}

inline Permutation pi_sequence(std::size_t n) {
  if (n == 0) throw DomainError("pi sequence needs n >= 1");
  static const Permutation base[4] = {Permutation{1}, Permutation{1, 2}, Permutation{1, 3, 2},
                                      Permutation{2, 4, 1, 3}};
  std::size_t m = (n - 1) % 4 + 1;
  Permutation p = base[m - 1];
  for (; m < n; m += 4) p = balloon_2413(p);
  return p;
}

inline Permutation kappa(std::size_t n) {
  if (n < 2) throw DomainError("kappa needs n >= 2");
  std::vector<value_t> v;
  v.reserve(4 * n);
  for (std::size_t x = n + 1; x <= 3 * n - 1; x += 2) v.push_back(static_cast<value_t>(x));
  for (std::size_t i = 1; i <= n; ++i) {
    v.push_back(static_cast<value_t>(i));
    v.push_back(static_cast<value_t>(3 * n + i));
  }
  for (std::size_t x = n + 2; x <= 3 * n; x += 2) v.push_back(static_cast<value_t>(x));
  return Permutation(std::move(v));
}

// ---- simple families ----------------------------------------------------------

inline Permutation wedge_simple(int type, std::size_t n) {
  if (n <= 3) throw DomainError("wedge simples need n > 3");
  std::vector<value_t> v;
  auto push = [&](std::size_t x) { v.push_back(static_cast<value_t>(x)); };
  if (type == 1) {
    const std::size_t top_odd = n % 2 == 0 ? n - 1 : n;
    for (std::size_t x = 3; x <= top_odd; x += 2) push(x);
    push(1);
    for (std::size_t x = n % 2 == 0 ? n : n - 1; x >= 2; x -= 2) push(x);
  } else if (type == 2) {
    if (n % 2 == 0) {
      for (std::size_t x = 2; x <= n; x += 2) push(x);
      for (std::size_t x = n - 3;; x -= 2) {
        push(x);
        if (x == 1) break;
      }
      push(n - 1);
    } else {
      for (std::size_t x = 2; x + 3 <= n; x += 2) push(x);
      push(n);
      for (std::size_t x = n - 2;; x -= 2) {
        push(x);
        if (x == 1) break;
      }
      push(n - 1);
    }
  } else {
    throw DomainError("wedge simple type must be 1 or 2");
  }
  return Permutation(std::move(v));
}

enum class NearlyExceptional { E1, E2, O };

// length is the full length (2n or 2n+1); k is ignored for E2.
inline Permutation nearly_exceptional(NearlyExceptional kind, std::size_t length, std::size_t k = 0) {
  std::vector<value_t> v;
  auto push = [&](std::size_t x) { v.push_back(static_cast<value_t>(x)); };
  switch (kind) {
    case NearlyExceptional::E1: {
      if (length % 2 != 0 || length < 6) throw DomainError("E1 needs an even length >= 6");
      const std::size_t n = length / 2;
      if (k < 1 || k + 2 > n) throw DomainError("E1 needs 1 <= k <= n-2");
      for (std::size_t i = 1; i <= k; ++i) push(n + i), push(i);
      for (std::size_t i = 1; i <= n - k; ++i) push(n + k + i), push(n + 1 - i);
      break;
    }
    case NearlyExceptional::E2: {
      if (length % 2 != 0 || length < 6) throw DomainError("E2 needs an even length >= 6");
      const std::size_t n = length / 2;
      for (std::size_t i = 1; i + 2 <= n; ++i) push(n - 1 + i), push(i);
      push(2 * n - 2), push(2 * n), push(n - 1), push(2 * n - 1);
      break;
    }
    case NearlyExceptional::O: {
      if (length % 2 != 1 || length < 7) throw DomainError("O needs an odd length >= 7");
      const std::size_t n = length / 2;
      if (k < 1 || k + 1 > n) throw DomainError("O needs 1 <= k <= n-1");
      for (std::size_t i = 1; i <= k; ++i) push(n - k + i), push(2 * n + 2 - i);
      push(n + 1);
      for (std::size_t i = 1; i <= n - k; ++i) push(n - k + 1 - i), push(n + 1 + i);
      break;
    }
  }
  return Permutation(std::move(v));
}

inline Permutation parallel_alternation(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw DomainError("parallel alternation needs an even length >= 2");
  std::vector<value_t> v;
  for (std::size_t x = 2; x <= n; x += 2) v.push_back(static_cast<value_t>(x));
  for (std::size_t x = 1; x < n; x += 2) v.push_back(static_cast<value_t>(x));
  return Permutation(std::move(v));
}

}  // namespace permob
