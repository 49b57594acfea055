#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "permob/decomposable.hpp"
#include "permob/embed.hpp"
#include "permob/errors.hpp"
#include "permob/perm.hpp"
#include "permob/poset.hpp"
#include "permob/structure.hpp"

namespace permob {

struct ContributingEntry {
  Permutation alpha;
  int weight = 0;
  std::size_t r = 0;
  std::int64_t mu_sigma_alpha = 0;
};

struct ContributingSet {
  std::vector<ContributingEntry> entries;

  std::int64_t value() const {
    std::int64_t s = 0;
    for (const auto& e : entries) s = checked::sub(s, checked::mul(e.mu_sigma_alpha, e.weight));
    return s;
  }
};

// Weight of a sum-indecomposable alpha, with r the least r >= 1 such that
// 1 (+) alpha^r (+) 1 is not below pi.
inline int contribution_weight(const Permutation& sigma, const Permutation& alpha, const Permutation& pi,
                               std::size_t* r_out = nullptr) {
  const Permutation one{1};
  std::size_t r = 1;
  while (contains(direct_sum(direct_sum(one, sum_power(alpha, r)), one), pi)) ++r;
  if (r_out) *r_out = r;
  const auto a = sum_power(alpha, r);
  if (!contains(sigma, a) || !contains(a, pi)) return 0;
  const bool left = contains(direct_sum(one, a), pi), right = contains(direct_sum(a, one), pi);
  if (!left && !right) return 1;
  if (left && right && !contains(sum_power(alpha, r + 1), pi)) return -1;
  return 0;
}

// Contributing set of [sigma, pi], with mu[sigma, alpha] supplied by mu for the
// entries that are not within one level of sigma. Requires pi to be sum
// indecomposable: for a decomposable pi the top of the interval can itself be a
// member of a family and the weights miscount it.
inline ContributingSet contributing_set(const Permutation& sigma, const Permutation& pi, const MuFn& mu,
                                        const PosetLimits& lim = {}) {
  if (sigma.empty() || is_sum_decomposable(sigma)) throw DomainError("contributing set needs sigma sum indecomposable");
  if (sigma == pi) throw DomainError("contributing set needs sigma < pi");
  if (pi.size() <= 3) throw DomainError("contributing set needs |pi| > 3");
  if (is_sum_decomposable(pi)) throw DomainError("contributing set needs pi sum indecomposable");
  if (pi == Permutation::decreasing(pi.size())) throw DomainError("contributing set excludes the decreasing permutation");
  ContributingSet cs;
  if (!contains(sigma, pi)) return cs;
  const Permutation one{1};
  auto iv = interval(sigma, pi, lim);
  for (std::size_t x = 0; x + 1 < iv.size(); ++x) {
    const auto& alpha = iv.elements[x];
    if (alpha == one || is_sum_decomposable(alpha)) continue;
    ContributingEntry e;
    e.alpha = alpha;
    e.weight = contribution_weight(sigma, alpha, pi, &e.r);
    if (e.weight == 0) continue;
    if (alpha == sigma)
      e.mu_sigma_alpha = 1;
    else if (alpha.size() == sigma.size() + 1)
      e.mu_sigma_alpha = -1;
    else
      e.mu_sigma_alpha = mu(sigma, alpha);
    cs.entries.push_back(std::move(e));
  }
  return cs;
}

}  // namespace permob
