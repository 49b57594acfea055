#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "permob/errors.hpp"

namespace permob {

using value_t = std::uint32_t;

// A permutation in one-line notation with values 1..n. The empty permutation is allowed.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<value_t> values) : v_(std::move(values)) { validate(); }

  Permutation(std::initializer_list<value_t> values) : v_(values) { validate(); }

  // Skips validation; the caller guarantees a bijection on 1..n.
  static Permutation trusted(std::vector<value_t> values) {
    Permutation p;
    p.v_ = std::move(values);
    return p;
  }

  static Permutation identity(std::size_t n) {
    std::vector<value_t> v(n);
    std::iota(v.begin(), v.end(), value_t{1});
    return trusted(std::move(v));
  }

  static Permutation decreasing(std::size_t n) {
    std::vector<value_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<value_t>(n - i);
    return trusted(std::move(v));
  }

  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  value_t operator[](std::size_t i) const { return v_[i]; }
  const std::vector<value_t>& values() const noexcept { return v_; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.v_ <=> b.v_; }

  Permutation reverse() const {
    return trusted(std::vector<value_t>(v_.rbegin(), v_.rend()));
  }

  Permutation complement() const {
    std::vector<value_t> w(v_.size());
    const auto n1 = static_cast<value_t>(v_.size() + 1);
    for (std::size_t i = 0; i < v_.size(); ++i) w[i] = n1 - v_[i];
    return trusted(std::move(w));
  }

  Permutation inverse() const {
    std::vector<value_t> w(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) w[v_[i] - 1] = static_cast<value_t>(i + 1);
    return trusted(std::move(w));
  }

  // Removes the point at position i and standardizes the remainder.
  Permutation remove_at(std::size_t i) const {
    std::vector<value_t> w;
    w.reserve(v_.size() - 1);
    const value_t gone = v_[i];
    for (std::size_t j = 0; j < v_.size(); ++j) {
      if (j == i) continue;
      w.push_back(v_[j] > gone ? v_[j] - 1 : v_[j]);
    }
    return trusted(std::move(w));
  }

 private:
  void validate() const {
    std::vector<bool> seen(v_.size() + 1, false);
    for (auto x : v_) {
      if (x == 0 || x > v_.size() || seen[x])
        throw ParseError("not a permutation of 1..n");
      seen[x] = true;
    }
  }

  std::vector<value_t> v_;
};

// Order-isomorphic standardization of an arbitrary sequence of distinct values.
template <typename Seq>
Permutation standardize(const Seq& seq) {
  const std::size_t n = std::size(seq);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<value_t> out(n);
  for (std::size_t r = 0; r < n; ++r) out[idx[r]] = static_cast<value_t>(r + 1);
  return Permutation::trusted(std::move(out));
}

// Pattern formed by the points of p at the given (increasing) positions.
inline Permutation subpattern(const Permutation& p, const std::vector<std::size_t>& positions) {
  std::vector<value_t> seq;
  seq.reserve(positions.size());
  for (auto i : positions) seq.push_back(p[i]);
  return standardize(seq);
}

// Symmetry group indices 0..7: bit 0 applies reverse, bit 1 complement, bit 2 inverse
// (inverse first). Index 0 is the identity.
inline Permutation apply_symmetry(const Permutation& p, int s) {
  Permutation q = (s & 4) ? p.inverse() : p;
  if (s & 1) q = q.reverse();
  if (s & 2) q = q.complement();
  return q;
}

inline std::array<Permutation, 8> symmetries(const Permutation& p) {
  std::array<Permutation, 8> out;
  for (int s = 0; s < 8; ++s) out[s] = apply_symmetry(p, s);
  return out;
}

inline Permutation canonical(const Permutation& p) {
  Permutation best = p;
  for (int s = 1; s < 8; ++s) {
    auto q = apply_symmetry(p, s);
    if (q < best) best = std::move(q);
  }
  return best;
}

// Number of distinct images of p under the symmetry group.
inline std::size_t orbit_size(const Permutation& p) {
  auto all = symmetries(p);
  std::sort(all.begin(), all.end());
  return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
}

// Digits are concatenated when n <= 9, comma separated otherwise. "e" denotes the empty permutation.
inline std::string to_string(const Permutation& p) {
  if (p.empty()) return "e";
  std::string s;
  const bool commas = p.size() > 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (commas && i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

inline Permutation parse_permutation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "e" || text == "eps") return Permutation{};
  std::vector<value_t> v;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("invalid character in permutation: '" + std::string(1, c) + "'");
      v.push_back(static_cast<value_t>(c - '0'));
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto tok = trim(text.substr(start, end - start));
      if (tok.empty()) throw ParseError("empty entry in permutation");
      std::uint64_t x = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw ParseError("invalid character in permutation: '" + std::string(1, c) + "'");
        x = x * 10 + static_cast<std::uint64_t>(c - '0');
        if (x > 0xffffffffULL) throw ParseError("permutation entry out of range");
      }
      v.push_back(static_cast<value_t>(x));
      start = end + 1;
    }
  }
  return Permutation(std::move(v));
}

namespace literals {
inline Permutation operator""_perm(const char* s, std::size_t n) { return parse_permutation({s, n}); }
}  // namespace literals

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ p.size();
    for (auto x : p) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Order used for poset elements: by length, then lexicographically.
inline bool rank_less(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace permob
