#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permob/embed.hpp"
#include "permob/errors.hpp"
#include "permob/perm.hpp"
#include "permob/poset.hpp"

namespace permob {

struct WorkCounters {
  std::uint64_t elements_visited = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_stores = 0;
  std::uint64_t chains = 0;

  WorkCounters& operator+=(const WorkCounters& o) {
    elements_visited += o.elements_visited;
    memo_hits += o.memo_hits;
    memo_stores += o.memo_stores;
    chains += o.chains;
    return *this;
  }
};

struct MobiusResult {
  std::int64_t value = 0;
  std::string method;
  WorkCounters work;
};

// Joint symmetry canonical form of an ordered pair: the same symmetry is applied
// to both members and the least (lower, upper) image is kept.
inline std::pair<Permutation, Permutation> canonical_pair(const Permutation& lower, const Permutation& upper) {
  std::pair<Permutation, Permutation> best{lower, upper};
  for (int s = 1; s < 8; ++s) {
    std::pair<Permutation, Permutation> c{apply_symmetry(lower, s), apply_symmetry(upper, s)};
    if (c < best) best = std::move(c);
  }
  return best;
}

inline std::string pair_key(const Permutation& lower, const Permutation& upper) {
  auto c = canonical_pair(lower, upper);
  std::string k;
  k.reserve(4 * (c.first.size() + c.second.size()) + 1);
  auto put = [&](const Permutation& p) {
    for (auto x : p) {
      k += std::to_string(x);
      k += ',';
    }
  };
  put(c.first);
  k += '|';
  put(c.second);
  return k;
}

// Thread-safe memo of mu values keyed by canonical pair. Concurrent writers of
// one key always hold the same value, so last-write-wins is harmless.
class MemoStore {
 public:
  std::optional<std::int64_t> find(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::int64_t> find(const Permutation& lower, const Permutation& upper) const {
    return find(pair_key(lower, upper));
  }
  void store(const std::string& key, std::int64_t v) {
    std::unique_lock lock(mu_);
    map_[key] = v;
  }
  void store(const Permutation& lower, const Permutation& upper, std::int64_t v) {
    store(pair_key(lower, upper), v);
  }
  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }
  std::vector<std::pair<std::string, std::int64_t>> snapshot() const {
    std::shared_lock lock(mu_);
    return {map_.begin(), map_.end()};
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::int64_t> map_;
};

struct EngineLimits {
  std::size_t max_recursive_length = 16;
  PosetLimits poset{};
};

// mu[lower, upper] by the defining recursion, evaluated over the interval in
// rank order. With a memo, every intermediate mu[lower, x] is stored and reused.
inline MobiusResult mobius_recursive(const Permutation& lower, const Permutation& upper,
                                     MemoStore* memo = nullptr, const EngineLimits& lim = {}) {
  MobiusResult res;
  res.method = "recursive";
  if (lower == upper) {
    res.value = 1;
    return res;
  }
  if (!contains(lower, upper)) return res;
  if (upper.size() > lim.max_recursive_length)
    throw GuardError("recursive engine refuses |upper| = " + std::to_string(upper.size()) + " > cap " +
                     std::to_string(lim.max_recursive_length));
  if (memo) {
    if (auto v = memo->find(lower, upper)) {
      ++res.work.memo_hits;
      res.value = *v;
      return res;
    }
  }
  PosetLimits pl = lim.poset;
  pl.max_top_length = std::max(pl.max_top_length, lim.max_recursive_length);
  IntervalPoset iv = interval(lower, upper, pl);
  const std::size_t n = iv.size();
  std::vector<std::int64_t> mu(n, 0);
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<std::size_t> stack;
  mu[0] = 1;
  for (std::size_t x = 1; x < n; ++x) {
    ++res.work.elements_visited;
    if (memo) {
      if (auto v = memo->find(lower, iv.elements[x])) {
        ++res.work.memo_hits;
        mu[x] = *v;
        continue;
      }
    }
    // Sum mu over the strict downset of x inside the interval.
    std::int64_t s = 0;
    const auto tag = static_cast<std::uint32_t>(x);
    stack.assign(iv.covered_by[x].begin(), iv.covered_by[x].end());
    for (auto w : stack) stamp[w] = tag;
    while (!stack.empty()) {
      auto w = stack.back();
      stack.pop_back();
      s = checked::add(s, mu[w]);
      for (auto u : iv.covered_by[w])
        if (stamp[u] != tag) {
          stamp[u] = tag;
          stack.push_back(u);
        }
    }
    mu[x] = checked::neg(s);
    if (memo) {
      memo->store(lower, iv.elements[x], mu[x]);
      ++res.work.memo_stores;
    }
  }
  res.value = mu[n - 1];
  return res;
}

// Hall's theorem: the alternating count of chains from lower to upper.
inline MobiusResult mobius_hall(const Permutation& lower, const Permutation& upper, const EngineLimits& lim = {}) {
  MobiusResult res;
  res.method = "hall";
  if (!contains(lower, upper)) return res;
  IntervalPoset iv = interval(lower, upper, lim.poset);
  auto cc = enumerate_chains(iv, {}, lim.poset);
  for (auto k : cc.by_length) res.work.chains += k;
  res.work.elements_visited = iv.size();
  res.value = cc.hall_sum();
  return res;
}

// Entry (lower, upper) of the inverse zeta matrix of the interval.
inline MobiusResult mobius_zeta(const Permutation& lower, const Permutation& upper, const EngineLimits& lim = {}) {
  MobiusResult res;
  res.method = "zeta";
  if (!contains(lower, upper)) return res;
  IntervalPoset iv = interval(lower, upper, lim.poset);
  auto inv = invert_zeta(zeta_matrix(iv, lim.poset));
  res.work.elements_visited = iv.size();
  res.value = inv[iv.bottom_index()][iv.top_index()];
  return res;
}

enum class Engine { recursive, hall, zeta };

inline MobiusResult mobius(Engine e, const Permutation& lower, const Permutation& upper, MemoStore* memo = nullptr,
                           const EngineLimits& lim = {}) {
  switch (e) {
    case Engine::hall: return mobius_hall(lower, upper, lim);
    case Engine::zeta: return mobius_zeta(lower, upper, lim);
    default: return mobius_recursive(lower, upper, memo, lim);
  }
}

inline MobiusResult principal_mobius(const Permutation& p, Engine e = Engine::recursive, MemoStore* memo = nullptr,
                                     const EngineLimits& lim = {}) {
  if (p.empty()) throw DomainError("principal Mobius function needs |p| >= 1");
  return mobius(e, Permutation{1}, p, memo, lim);
}

struct CrossCheckReport {
  std::int64_t recursive = 0, hall = 0, zeta = 0;
  bool agree() const { return recursive == hall && hall == zeta; }
  std::string describe() const {
    if (agree()) return "all engines agree on " + std::to_string(recursive);
    return "discrepancy: recursive=" + std::to_string(recursive) + " hall=" + std::to_string(hall) +
           " zeta=" + std::to_string(zeta);
  }
};

inline CrossCheckReport cross_check(const Permutation& lower, const Permutation& upper, const EngineLimits& lim = {}) {
  CrossCheckReport r;
  r.recursive = mobius_recursive(lower, upper, nullptr, lim).value;
  r.hall = mobius_hall(lower, upper, lim).value;
  r.zeta = mobius_zeta(lower, upper, lim).value;
  return r;
}

}  // namespace permob
