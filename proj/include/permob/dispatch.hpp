#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "permob/balloon.hpp"
#include "permob/contributing.hpp"
#include "permob/decomposable.hpp"
#include "permob/embed.hpp"
#include "permob/engines.hpp"
#include "permob/families.hpp"
#include "permob/oscillation.hpp"
#include "permob/perm.hpp"
#include "permob/structure.hpp"
#include "permob/zero_rules.hpp"

namespace permob {

struct DispatchOptions {
  bool zero_rules = true;
  bool boolean_inflations = true;
  bool families = true;
  bool decomposable = true;
  bool contributing = true;
  EngineLimits limits{};
  ZeroLimits zero{};
};

// Front door for mu[sigma, pi]: tries the shortcuts in a fixed order and
// records which one produced the value. Sub-intervals go back through the
// front door, so every shortcut applies at every level. A Dispatcher is for
// one thread at a time; the MemoStore may be shared between dispatchers.
class Dispatcher {
 public:
  explicit Dispatcher(MemoStore* memo = nullptr, DispatchOptions opt = {})
      : memo_(memo ? memo : &own_), opt_(std::move(opt)) {}
  Dispatcher(const Dispatcher&) = delete;
  Dispatcher& operator=(const Dispatcher&) = delete;

  const DispatchOptions& options() const { return opt_; }
  MemoStore& memo() { return *memo_; }

  MobiusResult compute(const Permutation& sigma, const Permutation& pi) {
    const auto before = work_;
    MobiusResult r;
    r.value = eval(sigma, pi, r.method);
    r.work = delta(before);
    return r;
  }

  MobiusResult compute(const Permutation& sigma, const OscillationDescriptor& pi) {
    const auto before = work_;
    MobiusResult r;
    if (pi.n <= 3 || pi.n <= opt_.limits.max_recursive_length) {
      r.value = eval(sigma, increasing_oscillation(pi), r.method);
      r.work = delta(before);
      return r;
    }
    auto piece = recognize_piece(sigma);
    if (!piece && !sigma.empty() && !is_sum_decomposable(sigma)) {
      r.method = "not_contained";
      return r;
    }
    if (!piece) throw GuardError("decomposable lower bound below a long oscillation needs materialization");
    r.value = solver(*piece).mobius(pi);
    r.method = "inc_osc";
    r.work = delta(before);
    return r;
  }

  std::int64_t value(const Permutation& sigma, const Permutation& pi) { return compute(sigma, pi).value; }
  std::int64_t principal(const Permutation& pi) { return compute(Permutation{1}, pi).value; }

 private:
  WorkCounters delta(const WorkCounters& before) const {
    WorkCounters d;
    d.elements_visited = work_.elements_visited - before.elements_visited;
    d.memo_hits = work_.memo_hits - before.memo_hits;
    d.memo_stores = work_.memo_stores - before.memo_stores;
    d.chains = work_.chains - before.chains;
    return d;
  }

  IncOscSolver& solver(const OscPiece& s) {
    const auto key = std::make_pair(s.k, s.parity);
    auto it = solvers_.find(key);
    if (it == solvers_.end()) it = solvers_.emplace(key, IncOscSolver(s)).first;
    return it->second;
  }

  std::int64_t eval(const Permutation& sigma, const Permutation& pi, std::string& method) {
    if (sigma.empty() || pi.empty()) {
      method = "empty";
      return mu_with_empty([](const Permutation&, const Permutation&) -> std::int64_t { return 0; }, sigma, pi);
    }
    if (sigma == pi) {
      method = "equal";
      return 1;
    }
    if (!contains(sigma, pi)) {
      method = "not_contained";
      return 0;
    }
    if (pi.size() == sigma.size() + 1) {
      method = "cover";
      return -1;
    }
    const auto key = pair_key(sigma, pi);
    if (auto v = memo_->find(key)) {
      ++work_.memo_hits;
      auto m = methods_.find(key);
      method = m != methods_.end() ? m->second : "memo";
      return *v;
    }
    const std::int64_t v = fresh(sigma, pi, method);
    memo_->store(key, v);
    ++work_.memo_stores;
    methods_[key] = method;
    return v;
  }

  std::int64_t fresh(const Permutation& sigma, const Permutation& pi, std::string& method) {
    const Permutation one{1};
    MuFn mu = [this](const Permutation& a, const Permutation& b) { return value(a, b); };
    PrincipalFn principal_fn = [this](const Permutation& p) { return principal(p); };

    if (opt_.zero_rules) {
      std::optional<ZeroCertificate> c;
      if (sigma == one) c = zero_test(pi, opt_.zero);
      if (!c) c = sigma_zero_test(sigma, pi, opt_.zero);
      if (c) {
        method = c->name();
        return 0;
      }
    }
    if (opt_.boolean_inflations) {
      if (auto parts = boolean_inflation_parts(sigma, pi)) {
        method = "boolean_inflation";
        return boolean_inflation_mobius(sigma, *parts);
      }
    }
    if (opt_.families) {
      if (auto d = recognize_oscillation(pi); d && d->n >= 4) {
        if (auto s = recognize_piece(sigma)) {
          method = "inc_osc";
          return solver(*s).mobius(*d);
        }
      }
      if (sigma == one) {
        if (auto beta = is_2413_balloon(pi)) {
          method = "balloon_2413";
          return balloon_2413_mobius(*beta, principal_fn);
        }
        if (!is_sum_decomposable(pi) && !is_skew_decomposable(pi)) {
          if (auto w = recognize_wedge(pi)) {
            method = "wedge";
            return wedge_mobius(w->first, principal_fn);
          }
        }
      }
    }
    if (opt_.decomposable) {
      if (auto v = bjjs_decomposable(sigma, pi, mu)) {
        method = "bjjs";
        return *v;
      }
    }
    if (opt_.contributing && pi.size() > 3 && !is_sum_decomposable(pi) && !is_skew_decomposable(pi)) {
      if (!is_sum_decomposable(sigma)) {
        method = "contributing_set";
        return contributing_set(sigma, pi, mu, opt_.limits.poset).value();
      }
      if (!is_skew_decomposable(sigma)) {
        MuFn flipped = [this](const Permutation& a, const Permutation& b) {
          return value(a.complement(), b.complement());
        };
        method = "contributing_set";
        return contributing_set(sigma.complement(), pi.complement(), flipped, opt_.limits.poset).value();
      }
    }
    method = "recursive";
    auto r = mobius_recursive(sigma, pi, memo_, opt_.limits);
    work_ += r.work;
    return r.value;
  }

  MemoStore own_;
  MemoStore* memo_;
  DispatchOptions opt_;
  WorkCounters work_;
  std::unordered_map<std::string, std::string> methods_;
  std::map<std::pair<std::size_t, int>, IncOscSolver> solvers_;
};

// One-shot front door with a private memo.
inline MobiusResult compute(const Permutation& sigma, const Permutation& pi, MemoStore* memo = nullptr) {
  Dispatcher d(memo);
  return d.compute(sigma, pi);
}

inline MobiusResult compute(const Permutation& sigma, const OscillationDescriptor& pi, MemoStore* memo = nullptr) {
  Dispatcher d(memo);
  return d.compute(sigma, pi);
}

}  // namespace permob
